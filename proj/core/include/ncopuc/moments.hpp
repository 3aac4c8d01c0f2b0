#pragma once

#include <optional>
#include <random>
#include <vector>

#include "ncopuc/linalg.hpp"
#include "ncopuc/polynomial.hpp"
#include "ncopuc/types.hpp"
#include "ncopuc/word.hpp"

namespace ncopuc {

/// Default relative pivot threshold for positivity checks.
inline constexpr Real kDefaultPivotTolerance = 1e-10L;

/// Truncated moment family c_sigma = mu(L^sigma) of a probability nc measure,
/// stored for every word up to a horizon. Words inside the horizon may be
/// absent; reading one is a HorizonError rather than an implicit zero.
class MomentFamily {
public:
    /// `values[i]` is the moment of word_at(i, d) for i <= shortlex_index(horizon).
    /// The empty-word moment must be absent or exactly 1; it is stored as 1.
    MomentFamily(const Word& horizon, std::vector<std::optional<Complex>> values);

    /// Every moment present.
    static MomentFamily from_values(const Word& horizon, const std::vector<Complex>& values);
    /// c = delta_{sigma, empty}.
    static MomentFamily free_measure(const Word& horizon);

    int alphabet() const noexcept { return horizon_.alphabet(); }
    const Word& horizon() const noexcept { return horizon_; }
    std::size_t size() const noexcept { return values_.size(); }

    bool has(const Word& w) const;
    Complex moment(const Word& w) const;
    Complex moment(ShortlexIndex i) const;
    const std::vector<std::optional<Complex>>& values() const noexcept { return values_; }

private:
    Word horizon_;
    std::vector<std::optional<Complex>> values_;
};

/// K(sigma, tau) = mu((L^tau)^* L^sigma) through the suffix reduction:
/// c(a) if sigma = tau·a, conj(c(a)) if tau = sigma·a, 0 otherwise.
Complex kernel_entry(const MomentFamily& m, const Word& sigma, const Word& tau);

struct KernelBlock {
    Word top;
    CMatrix matrix;  // N×N, N = shortlex_index(top) + 1, entry (i,j) = K(word_i, word_j)
};

KernelBlock kernel_block(const MomentFamily& m, const Word& top);

struct NontrivialCheck {
    bool nontrivial;
    Real min_pivot;
};

/// Cholesky of the kernel block; succeeds iff every pivot exceeds
/// tol * trace / N. Never throws for an indefinite block.
NontrivialCheck check_nontrivial(const MomentFamily& m, const Word& top,
                                 Real tol = kDefaultPivotTolerance);

/// det K_top as the product of Cholesky pivots; 0 when the factorization fails.
Real determinant_D(const MomentFamily& m, const Word& top, Real tol = kDefaultPivotTolerance);
/// log det K_top; -inf when the factorization fails. log D of the empty block below
/// the empty word is taken to be 0.
Real log_determinant_D(const MomentFamily& m, const Word& top, Real tol = kDefaultPivotTolerance);

/// <P, Q>_mu = sum_{sigma,tau} K(sigma, tau) p_sigma conj(q_tau).
Complex inner_product(const MomentFamily& m, const NcPolynomial& p, const NcPolynomial& q);

/// Largest deviations of a materialized kernel matrix (rows/cols indexed in
/// shortlex order over alphabet d) from the multi-Toeplitz axioms.
struct AxiomResidual {
    Real translation = 0;       // max |K(t s, t s') - K(s, s')|
    Real structural_zero = 0;   // max |K(s, t)| over prefix-incomparable pairs
    Real diagonal = 0;          // max |K(s, s) - 1|
    std::size_t checked = 0;    // number of word triples / pairs inspected

    Real max() const { return std::max({translation, structural_zero, diagonal}); }
};

/// Exhaustive check over all pairs and translations inside the matrix.
AxiomResidual multi_toeplitz_residual(const CMatrix& kernel, int alphabet);

/// Random spot check: `samples` triples (t, s, s') with all words inside the matrix.
AxiomResidual multi_toeplitz_spot_check(const CMatrix& kernel, int alphabet, std::size_t samples,
                                        std::mt19937_64& rng);

}  // namespace ncopuc
