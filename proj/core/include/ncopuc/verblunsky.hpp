#pragma once

#include <vector>

#include "ncopuc/moments.hpp"
#include "ncopuc/polynomial.hpp"
#include "ncopuc/types.hpp"
#include "ncopuc/word.hpp"

namespace ncopuc {

/// Verblunsky coefficients gamma_sigma for all sigma up to a horizon, with
/// gamma_empty = 0 and |gamma_sigma| < 1 elsewhere.
class VerblunskyFamily {
public:
    /// `values[i]` is gamma of word_at(i, d). values[0] must be 0. Throws
    /// DomainError if any |gamma| >= 1.
    VerblunskyFamily(const Word& horizon, std::vector<Complex> values);

    static VerblunskyFamily zero(const Word& horizon);

    int alphabet() const noexcept { return horizon_.alphabet(); }
    const Word& horizon() const noexcept { return horizon_; }
    std::size_t size() const noexcept { return values_.size(); }

    Complex gamma(const Word& w) const;
    Complex gamma(ShortlexIndex i) const;
    /// d_sigma = sqrt(1 - |gamma_sigma|^2), in (0, 1].
    Real defect(ShortlexIndex i) const;
    Real defect(const Word& w) const { return defect(shortlex_index(w)); }
    const std::vector<Complex>& values() const noexcept { return values_; }

private:
    Word horizon_;
    std::vector<Complex> values_;
};

/// Orthonormal polynomials phi_sigma and their reverse polynomials
/// phi^#_sigma for sigma <= top, as lower-triangular coefficient matrices
/// (row i = word_at(i), column j = coefficient of Z^{word_at(j)}).
struct RecurrencePair {
    Word top;
    CMatrix phi;
    CMatrix phi_sharp;

    int alphabet() const noexcept { return top.alphabet(); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(phi.rows()); }
    NcPolynomial phi_poly(ShortlexIndex i) const;
    NcPolynomial phi_sharp_poly(ShortlexIndex i) const;
};

/// Runs the Szego-type recurrences
///   phi_{k s}  = (Z_k phi_s - gamma_{k s} phi^#_{k s - 1}) / d_{k s}
///   phi^#_{k s} = (-conj(gamma_{k s}) Z_k phi_s + phi^#_{k s - 1}) / d_{k s}
/// from phi_empty = phi^#_empty = 1, in shortlex order up to top.
RecurrencePair synthesize(const VerblunskyFamily& g, const Word& top);

/// Moments of the unique measure that makes pair.phi orthonormal: with A the
/// coefficient matrix, K = A^{-1} A^{-*} and c_sigma = K(sigma, empty). Throws
/// NumericalDegeneracy if K violates the multi-Toeplitz axioms by more than
/// `axiom_tol`.
MomentFamily moments_from_polys(const RecurrencePair& pair, Real axiom_tol = 1e-9L);

struct Extraction {
    VerblunskyFamily gamma;
    /// max over sigma of | |gamma_sigma|^2 - (1 - d_sigma^2) |.
    Real modulus_inconsistency = 0;
    /// Words whose |gamma| >= 1 - 1e-10 (finite data cannot certify non-triviality there).
    std::vector<Word> near_trivial;
};

/// Recovers gamma from a non-trivial measure by shortlex induction on its
/// Gram-Schmidt output: d_{k s} = a_{s,s} / a_{k s,k s} and
/// gamma_t = -d_t phi_t(0) prod_{t' <= t-1} d_{t'}.
/// Throws PositivityError if the kernel block is not positive definite and
/// NumericalDegeneracy if the modulus consistency check exceeds `consistency_tol`.
Extraction extract_detailed(const MomentFamily& m, const Word& top, Real pivot_tol = kDefaultPivotTolerance,
                            Real consistency_tol = 1e-8L);

VerblunskyFamily extract(const MomentFamily& m, const Word& top, Real pivot_tol = kDefaultPivotTolerance);

/// phi and phi^# of a measure given by moments: synthesize(extract(m, top), top).
RecurrencePair recurrence_from_moments(const MomentFamily& m, const Word& top,
                                       Real pivot_tol = kDefaultPivotTolerance);

struct ProductAndSum {
    Real partial_product = 1;     // prod_{sigma <= upto} (1 - |gamma_sigma|^2)
    Real square_sum = 0;          // sum_{sigma <= upto} |gamma_sigma|^2
    Real sigma_line_product = 1;  // prod_{n : sigma(n) <= upto} (1 - |gamma_{sigma(n)}|^2)
};

ProductAndSum product_and_sum(const VerblunskyFamily& g, const Word& upto);

}  // namespace ncopuc
