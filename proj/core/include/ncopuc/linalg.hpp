#pragma once

#include <cstddef>
#include <vector>

#include "ncopuc/types.hpp"

namespace ncopuc::linalg {

/// Outcome of a Cholesky factorization K = L L^* with positive-diagonal L.
///
/// `pivots[i]` is the i-th Schur-complement diagonal, L(i,i)^2. When the
/// factorization breaks down (`ok == false`), `pivots` holds the pivots up to
/// and including the failing one and `L` is only valid on its leading block.
struct Cholesky {
    CMatrix L;
    std::vector<Real> pivots;
    bool ok = false;

    Real min_pivot() const;
    /// log det K = sum log pivots; -inf when the factorization failed.
    Real log_det() const;
};

/// Factors a Hermitian matrix. A pivot counts as a failure unless it exceeds
/// rel_tol * trace(K) / N.
Cholesky cholesky(const CMatrix& K, Real rel_tol);

/// Inverse of a lower-triangular matrix with nonzero diagonal.
CMatrix lower_triangular_inverse(const CMatrix& L);

/// Ascending eigenvalues of the Hermitian part of H.
RVector hermitian_eigenvalues(const CMatrix& H);

/// Largest singular value.
Real spectral_norm(const CMatrix& M);

/// sign(det H) and log|det H| for a Hermitian H, via its eigenvalues.
struct LogDet {
    int sign;
    Real log_abs;
};
LogDet hermitian_log_det(const CMatrix& H);

}  // namespace ncopuc::linalg
