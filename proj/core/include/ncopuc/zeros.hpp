#pragma once

#include <cstdint>

#include "ncopuc/matrix_tuple.hpp"
#include "ncopuc/types.hpp"
#include "ncopuc/verblunsky.hpp"

namespace ncopuc {

enum class BallRegion { Interior, Boundary, Exterior, Indefinite };

const char* to_string(BallRegion r);

struct BallClassification {
    BallRegion region;
    Real min_defect;  // lambda_min(I - sum Z Z^*)
    Real max_defect;  // lambda_max(I - sum Z Z^*)
};

/// Position of Z relative to the row ball. Tuples with sum Z Z^* - I
/// indefinite (outside the closed ball, not strictly exterior) are Indefinite.
BallClassification classify_point(const MatrixTuple& z, Real tol = 1e-10L);

struct SummationCheck {
    Real residual;  // spectral norm of LHS - RHS
    Real scale;     // max(1, ||LHS||, ||RHS||)
};

/// Both sides of
///   phi^#_{sigma(n)}(Z)^* phi^#_{sigma(n)}(W) - sum_{|s| <= n} phi_s(Z)^* phi_s(W)
///     = - sum_k sum_{|s| <= n-1} phi_s(Z)^* Z_k^* W_k phi_s(W).
SummationCheck summation_residual(const RecurrencePair& pair, int n, const MatrixTuple& z, const MatrixTuple& w);

struct FormResult {
    CMatrix matrix;
    int det_sign;
    Real log_abs_det;
    Real min_eig;
};

/// M = phi^#_{sigma(n)}(Z^*)^* phi^#_{sigma(n)}(Z^*).
FormResult reverse_form(const RecurrencePair& pair, int n, const MatrixTuple& z);
/// S = sum_{|s| = n} phi_s(Z^*)^* phi_s(Z^*).
FormResult level_form(const RecurrencePair& pair, int n, const MatrixTuple& z);

/// || M - S - D - sum_{1 <= |s| <= n-1} phi_s(Z^*)^* D phi_s(Z^*) || with D = I - sum Z Z^*.
Real decomposition_residual(const RecurrencePair& pair, int n, const MatrixTuple& z);

enum class SampleKind { Interior, Boundary, Exterior };

/// Deterministic random tuple of level k:
///  Interior: Gaussian tuple scaled so lambda_max(sum Z Z^*) = param^2 (param < 1).
///  Boundary: the k×k column blocks of k orthonormal rows of a Haar unitary, so sum Z Z^* = I.
///  Exterior: a boundary sample times param (param > 1).
MatrixTuple sample_tuple(SampleKind kind, Real param, int k, int d, std::uint64_t seed);

}  // namespace ncopuc
