#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ncopuc {

// Working precision for every numerical routine in the library. Extended
// precision buys three decimal digits on the kernel factorizations, which the
// Verblunsky round trips at horizon length 4 need when |gamma| approaches 0.9.
using Real = long double;
using Complex = std::complex<Real>;

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

}  // namespace ncopuc
