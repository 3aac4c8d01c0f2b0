#pragma once

// Reference computations for the test suite. None of these reuse the
// library's kernel, Cholesky or recurrence code paths.

#include <random>
#include <string>
#include <vector>

#include <ncopuc/moments.hpp>
#include <ncopuc/types.hpp>
#include <ncopuc/verblunsky.hpp>
#include <ncopuc/word.hpp>

namespace oracle {

using ncopuc::CMatrix;
using ncopuc::Complex;
using ncopuc::Real;

// Words as strings of letters '1'..'9', generated by recursion and sorted
// with an explicit length-then-lexicographic comparator.
std::vector<std::string> shortlex_words(int d, int max_len);

// <Z^s, Z^t>_mu from string prefix tests.
Complex kernel(const ncopuc::MomentFamily& m, const std::string& s, const std::string& t);

// Kernel block over the given words.
CMatrix kernel_matrix(const ncopuc::MomentFamily& m, const std::vector<std::string>& words);

// Classical Gram-Schmidt on coefficient vectors with the kernel as Gram
// matrix (twice, for stability). Row i = coefficients of phi_i.
CMatrix gram_schmidt(const CMatrix& gram);

// Determinant by LU.
Complex determinant(const CMatrix& m);

// d = 1 Verblunsky coefficients by solving each Yule-Walker system with a
// dense LU solve: Phi_n monic orthogonal, gamma_n = -Phi_n(0). `c` holds
// the nc moments c(1^k), k = 0..n.
std::vector<Complex> toeplitz_gamma(const std::vector<Complex>& c);

// gamma_sigma with phase uniform and modulus uniform on [0, max_abs].
ncopuc::VerblunskyFamily random_gamma(const ncopuc::Word& top, Real max_abs, std::mt19937_64& rng);

// Same but uniform over the disc of radius max_abs.
ncopuc::VerblunskyFamily random_gamma_disc(const ncopuc::Word& top, Real max_abs, std::mt19937_64& rng);

CMatrix random_matrix(int rows, int cols, std::mt19937_64& rng);

// Smallest eigenvalue of the Hermitian part.
Real min_eig(const CMatrix& h);
Real max_eig(const CMatrix& h);

}  // namespace oracle
