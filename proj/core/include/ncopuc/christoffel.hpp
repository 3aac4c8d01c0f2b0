#pragma once

#include <random>
#include <vector>

#include "ncopuc/matrix_tuple.hpp"
#include "ncopuc/moments.hpp"
#include "ncopuc/orthopoly.hpp"
#include "ncopuc/types.hpp"
#include "ncopuc/word.hpp"

namespace ncopuc {

/// Q = sum_sigma Z^sigma ⊗ B_sigma with k×k coefficients, dense in shortlex
/// order up to top(). Evaluation at a level-k tuple A gives sum A^sigma B_sigma.
class MatrixNcPolynomial {
public:
    MatrixNcPolynomial(int alphabet, int level, std::vector<CMatrix> coefficients);

    /// 1 ⊗ I_k.
    static MatrixNcPolynomial identity(int alphabet, int level);

    int alphabet() const noexcept { return alphabet_; }
    int level() const noexcept { return level_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Word top() const { return word_at(coeffs_.size() - 1, alphabet_); }
    const CMatrix& coeff(ShortlexIndex i) const { return coeffs_.at(i); }
    const std::vector<CMatrix>& coefficients() const noexcept { return coeffs_; }

    CMatrix evaluate(const MatrixTuple& a) const;
    CMatrix evaluate(const WordPowers& powers) const;

private:
    int alphabet_;
    int level_;
    std::vector<CMatrix> coeffs_;
};

/// kappa_n(A, B) = sum_{sigma <= sigma(n)} phi_sigma(A) phi_sigma(B)^*.
CMatrix cd_kernel(const OrthonormalFamily& f, int n, const MatrixTuple& a, const MatrixTuple& b);

/// Lambda_n(A) = kappa_n(A, A)^{-1}, Hermitian, between 0 and I.
CMatrix christoffel_approx(const OrthonormalFamily& f, int n, const MatrixTuple& a);

/// The constrained minimizer Q_n = sum phi_sigma ⊗ phi_sigma(A)^* Lambda_n(A).
MatrixNcPolynomial minimizer_Q(const OrthonormalFamily& f, int n, const MatrixTuple& a);

/// (mu ⊗ Id)(Q^* Q) = sum_{sigma,tau} K(tau, sigma) B_sigma^* B_tau.
CMatrix quadratic_functional(const MomentFamily& m, const MatrixNcPolynomial& q);

/// A random Q supported on words <= sigma(n) with Q(A) = I: Gaussian
/// coefficients of size `scale` on every nonempty word, then
/// B_empty = I - sum_{sigma != empty} A^sigma B_sigma. At points where the
/// powers A^sigma are large the constant coefficient absorbs them.
MatrixNcPolynomial random_admissible(int n, const MatrixTuple& a, std::mt19937_64& rng, Real scale = 1);

enum class ChristoffelOutcome { Converged, DecayToZero, NotConverged };

const char* to_string(ChristoffelOutcome o);

struct ChristoffelResult {
    CMatrix value;
    bool converged = false;
    ChristoffelOutcome outcome = ChristoffelOutcome::NotConverged;
    std::vector<CMatrix> trace;  // Lambda_0, Lambda_1, ...
};

/// Iterates Lambda_n(A) for n = 0..max_n (capped by the family's horizon).
/// Converged when the relative spectral-norm step is below `tol` twice in a
/// row. Otherwise DecayToZero when the last three step ratios
/// ||Lambda_n|| / ||Lambda_{n-1}|| are below 1 and non-increasing (a
/// heuristic; finite data cannot decide the limit), else NotConverged.
ChristoffelResult christoffel_function(const OrthonormalFamily& f, const MatrixTuple& a, Real tol = 1e-8L,
                                       int max_n = -1);

}  // namespace ncopuc
