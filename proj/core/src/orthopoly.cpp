#include "ncopuc/orthopoly.hpp"

#include <cmath>

#include "ncopuc/error.hpp"
#include "ncopuc/linalg.hpp"

namespace ncopuc {

NcPolynomial OrthonormalFamily::phi(ShortlexIndex i) const {
    if (i >= size()) {
        throw HorizonError("orthonormal polynomial index " + std::to_string(i) + " beyond top " + top.str());
    }
    std::vector<Complex> c(i + 1);
    for (ShortlexIndex j = 0; j <= i; ++j) {
        c[j] = coefficients(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return NcPolynomial(alphabet(), std::move(c));
}

NcPolynomial OrthonormalFamily::phi(const Word& sigma) const {
    if (sigma.alphabet() != alphabet()) {
        throw DomainError("orthonormal family: word over the wrong alphabet");
    }
    return phi(shortlex_index(sigma));
}

Real OrthonormalFamily::leading_coefficient(const Word& sigma) const {
    const ShortlexIndex i = shortlex_index(sigma);
    if (i >= size()) {
        throw HorizonError("word " + sigma.str() + " beyond top " + top.str());
    }
    return leading[i];
}

OrthonormalFamily gram_schmidt(const MomentFamily& m, const Word& top, Real tol) {
    const KernelBlock block = kernel_block(m, top);
    linalg::Cholesky chol = linalg::cholesky(block.matrix, tol);
    if (!chol.ok) {
        throw PositivityError("kernel block up to " + top.str() + " is not positive definite (pivot " +
                              std::to_string(static_cast<double>(chol.pivots.back())) + " at index " +
                              std::to_string(chol.pivots.size() - 1) + ")");
    }
    OrthonormalFamily f{top, linalg::lower_triangular_inverse(chol.L), {}, std::move(chol.pivots)};
    const auto n = f.coefficients.rows();
    f.leading.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        // Triangular inversion leaves the diagonal exactly 1 / L(i,i), real and positive.
        f.coefficients(i, i) = Complex(f.coefficients(i, i).real());
        f.leading[static_cast<std::size_t>(i)] = f.coefficients(i, i).real();
    }
    return f;
}

NcPolynomial monic(const OrthonormalFamily& f, const Word& sigma) {
    const ShortlexIndex i = shortlex_index(sigma);
    NcPolynomial p = f.phi(i);
    std::vector<Complex> c = p.coeffs();
    const Real a = f.leading[i];
    for (auto& v : c) {
        v /= a;
    }
    c.back() = Complex(1);
    return NcPolynomial(f.alphabet(), std::move(c));
}

Real norm_mu(const MomentFamily& m, const NcPolynomial& p) {
    return std::sqrt(std::max(Real(0), inner_product(m, p, p).real()));
}

}  // namespace ncopuc
