#pragma once

#include <functional>
#include <vector>

#include "ncopuc/moments.hpp"
#include "ncopuc/types.hpp"

// Classical orthogonal polynomials on the unit circle (one variable), kept
// free of the Cholesky machinery so it can cross-check the d = 1 case.
namespace ncopuc::opuc {

using Density = std::function<Real(Real)>;

/// Trigonometric moments c_k = int e^{-ik theta} w(theta) dtheta/2pi, k = 0..n, c_0 = 1.
struct CircleMomentSeq {
    std::vector<Complex> c;

    int order() const noexcept { return static_cast<int>(c.size()) - 1; }
    /// c_k for any integer k, with c_{-k} = conj(c_k).
    Complex at(int k) const;
};

/// Checks c_0 == 1 and sizes; throws DomainError otherwise.
CircleMomentSeq make_sequence(std::vector<Complex> c);

/// Trapezoid rule on `nodes` equispaced points. Throws DomainError if the
/// density's mass differs from 1 by more than `mass_tol`.
CircleMomentSeq quadrature_moments(const Density& w, int n, int nodes = 512, Real mass_tol = 1e-10L);

/// exp(int log w dtheta/2pi) by the same rule.
Real geometric_mean(const Density& w, int nodes = 512);

/// (1 - |a|^2) / |1 - a e^{i theta}|^2.
Density bernstein_szego(Complex a);
/// 1 + cos(theta).
Density fejer();

/// Levinson-Durbin recursion on the Toeplitz moments: gamma[j] is the
/// coefficient at recursion step j+1, i.e. -Phi_{j+1}(0) for the monic
/// orthogonal polynomials of the pairing <z^i, z^j> = conj(c_{i-j}).
/// Matches the d = 1 gauge of the nc pipeline. Throws PositivityError when a
/// prediction error is not positive.
std::vector<Complex> levinson_verblunsky(const CircleMomentSeq& seq, Real tol = 1e-14L);

/// The d = 1 nc moment family with horizon length seq.order(): the word of
/// length k carries conj(c_k).
MomentFamily to_moment_family(const CircleMomentSeq& seq);

}  // namespace ncopuc::opuc
