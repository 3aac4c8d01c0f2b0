#pragma once

#include <vector>

#include "ncopuc/moments.hpp"
#include "ncopuc/polynomial.hpp"
#include "ncopuc/types.hpp"
#include "ncopuc/word.hpp"

namespace ncopuc {

/// Orthonormal polynomials phi_sigma, sigma <= top, of a non-trivial measure.
///
/// Row i of `coefficients` holds the coefficients of phi_{word_at(i)} in the
/// monomial basis, so the matrix A is lower triangular with positive real
/// diagonal and A K A^* = I for the kernel block K up to top.
struct OrthonormalFamily {
    Word top;
    CMatrix coefficients;
    std::vector<Real> leading;  // a_{sigma,sigma} = A(i,i)
    std::vector<Real> pivots;   // Cholesky pivots of K; pivot i = a_{sigma,sigma}^{-2}

    int alphabet() const noexcept { return top.alphabet(); }
    std::size_t size() const noexcept { return leading.size(); }

    NcPolynomial phi(const Word& sigma) const;
    NcPolynomial phi(ShortlexIndex i) const;
    /// phi_sigma at the scalar zero tuple, i.e. its constant coefficient.
    Complex phi_at_zero(ShortlexIndex i) const { return coefficients(static_cast<Eigen::Index>(i), 0); }
    Real leading_coefficient(const Word& sigma) const;
};

/// Gram-Schmidt of the monomials in shortlex order, computed as A = L^{-1} for
/// the Cholesky factor K = L L^*. Throws PositivityError if the kernel block
/// is not positive definite at relative pivot tolerance `tol`.
OrthonormalFamily gram_schmidt(const MomentFamily& m, const Word& top, Real tol = kDefaultPivotTolerance);

/// Phi_sigma = phi_sigma / a_{sigma,sigma}; leading coefficient exactly 1.
NcPolynomial monic(const OrthonormalFamily& f, const Word& sigma);

/// sqrt(<P, P>_mu).
Real norm_mu(const MomentFamily& m, const NcPolynomial& p);

}  // namespace ncopuc
