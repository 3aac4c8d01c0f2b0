#include "ncopuc/verblunsky.hpp"

#include <cmath>
#include <random>

#include "ncopuc/error.hpp"
#include "ncopuc/linalg.hpp"
#include "ncopuc/orthopoly.hpp"

namespace ncopuc {

namespace {

// Shortlex index of k·word_at(j) for every j < n, built level by level.
std::vector<ShortlexIndex> prepend_table(int alphabet, ShortlexIndex n, Word::Letter k) {
    std::vector<ShortlexIndex> out(n);
    const auto d = static_cast<ShortlexIndex>(alphabet);
    ShortlexIndex level_start = 0;
    ShortlexIndex level_size = 1;
    for (ShortlexIndex j = 0; j < n; ++j) {
        while (j >= level_start + level_size) {
            level_start += level_size;
            level_size *= d;
        }
        out[j] = static_cast<ShortlexIndex>(k) * level_size + j;
    }
    return out;
}

NcPolynomial row_poly(const CMatrix& m, ShortlexIndex i, int alphabet) {
    std::vector<Complex> c(i + 1);
    for (ShortlexIndex j = 0; j <= i; ++j) {
        c[j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return NcPolynomial(alphabet, std::move(c));
}

}  // namespace

VerblunskyFamily::VerblunskyFamily(const Word& horizon, std::vector<Complex> values)
    : horizon_(horizon), values_(std::move(values)) {
    const ShortlexIndex expected = shortlex_index(horizon) + 1;
    if (values_.size() != expected) {
        throw DomainError("Verblunsky family for horizon " + horizon.str() + " needs " +
                          std::to_string(expected) + " values, got " + std::to_string(values_.size()));
    }
    if (values_[0] != Complex(0)) {
        throw DomainError("gamma of the empty word must be 0");
    }
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (!(std::abs(values_[i]) < 1)) {
            throw DomainError("|gamma| >= 1 at word " + word_at(i, horizon.alphabet()).str() +
                              " (outside the open unit disc)");
        }
    }
}

VerblunskyFamily VerblunskyFamily::zero(const Word& horizon) {
    return VerblunskyFamily(horizon, std::vector<Complex>(shortlex_index(horizon) + 1, Complex(0)));
}

Complex VerblunskyFamily::gamma(ShortlexIndex i) const {
    if (i >= values_.size()) {
        throw HorizonError("gamma of " + word_at(i, alphabet()).str() + " lies beyond horizon " +
                           horizon_.str());
    }
    return values_[i];
}

Complex VerblunskyFamily::gamma(const Word& w) const {
    if (w.alphabet() != alphabet()) {
        throw DomainError("gamma lookup with a word over the wrong alphabet");
    }
    return gamma(shortlex_index(w));
}

Real VerblunskyFamily::defect(ShortlexIndex i) const {
    return std::sqrt(Real(1) - std::norm(gamma(i)));
}

NcPolynomial RecurrencePair::phi_poly(ShortlexIndex i) const {
    return row_poly(phi, i, alphabet());
}

NcPolynomial RecurrencePair::phi_sharp_poly(ShortlexIndex i) const {
    return row_poly(phi_sharp, i, alphabet());
}

RecurrencePair synthesize(const VerblunskyFamily& g, const Word& top) {
    if (top.alphabet() != g.alphabet()) {
        throw DomainError("synthesize: word alphabet does not match the Verblunsky family");
    }
    if (top > g.horizon()) {
        throw HorizonError("synthesize: top " + top.str() + " exceeds gamma horizon " + g.horizon().str());
    }
    const int d = g.alphabet();
    const ShortlexIndex n = shortlex_index(top) + 1;
    const auto en = static_cast<Eigen::Index>(n);

    std::vector<std::vector<ShortlexIndex>> prepend(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        prepend[static_cast<std::size_t>(k - 1)] = prepend_table(d, n, static_cast<Word::Letter>(k));
    }

    RecurrencePair out{top, CMatrix::Zero(en, en), CMatrix::Zero(en, en)};
    out.phi(0, 0) = Complex(1);
    out.phi_sharp(0, 0) = Complex(1);

    CVector shifted(en);
    ShortlexIndex level_start = 1;
    ShortlexIndex level_size = static_cast<ShortlexIndex>(d);
    for (ShortlexIndex t = 1; t < n; ++t) {
        while (t >= level_start + level_size) {
            level_start += level_size;
            level_size *= static_cast<ShortlexIndex>(d);
        }
        // t = k·s with s of length |t| - 1.
        const ShortlexIndex sub_size = level_size / static_cast<ShortlexIndex>(d);
        const ShortlexIndex offset = t - level_start;
        const auto k = static_cast<std::size_t>(offset / sub_size);
        const ShortlexIndex s = (level_start - sub_size) + offset % sub_size;

        // Z_k phi_s
        shifted.setZero();
        for (ShortlexIndex j = 0; j <= s; ++j) {
            const Complex c = out.phi(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j));
            if (c != Complex(0)) {
                shifted(static_cast<Eigen::Index>(prepend[k][j])) = c;
            }
        }
        const Complex gam = g.gamma(t);
        const Real dt = g.defect(t);
        const auto et = static_cast<Eigen::Index>(t);
        out.phi.row(et) = (shifted.transpose() - gam * out.phi_sharp.row(et - 1)) / dt;
        out.phi_sharp.row(et) = (-std::conj(gam) * shifted.transpose() + out.phi_sharp.row(et - 1)) / dt;
    }
    return out;
}

MomentFamily moments_from_polys(const RecurrencePair& pair, Real axiom_tol) {
    const CMatrix l = linalg::lower_triangular_inverse(pair.phi);
    const CMatrix k = l * l.adjoint();
    const int d = pair.alphabet();

    AxiomResidual residual;
    if (k.rows() <= 160) {
        residual = multi_toeplitz_residual(k, d);
    } else {
        std::mt19937_64 rng(0x5eed);
        residual = multi_toeplitz_spot_check(k, d, 4096, rng);
    }
    if (residual.max() > axiom_tol) {
        throw NumericalDegeneracy("synthesized kernel violates the multi-Toeplitz axioms by " +
                                  std::to_string(static_cast<double>(residual.max())));
    }

    std::vector<Complex> c(static_cast<std::size_t>(k.rows()));
    for (Eigen::Index i = 0; i < k.rows(); ++i) {
        c[static_cast<std::size_t>(i)] = k(i, 0);
    }
    c[0] = Complex(1);
    return MomentFamily::from_values(pair.top, c);
}

Extraction extract_detailed(const MomentFamily& m, const Word& top, Real pivot_tol, Real consistency_tol) {
    const OrthonormalFamily f = gram_schmidt(m, top, pivot_tol);
    const int d = m.alphabet();
    const ShortlexIndex n = f.size();

    std::vector<Complex> gam(n, Complex(0));
    Real inconsistency = 0;
    std::vector<Word> near_trivial;

    Real running = 1;  // prod_{t' <= t-1} d_{t'}
    ShortlexIndex level_start = 1;
    ShortlexIndex level_size = static_cast<ShortlexIndex>(d);
    for (ShortlexIndex t = 1; t < n; ++t) {
        while (t >= level_start + level_size) {
            level_start += level_size;
            level_size *= static_cast<ShortlexIndex>(d);
        }
        const ShortlexIndex sub_size = level_size / static_cast<ShortlexIndex>(d);
        const ShortlexIndex s = (level_start - sub_size) + (t - level_start) % sub_size;

        Real dt = f.leading[s] / f.leading[t];
        Real one_minus_d2 = Real(1) - dt * dt;
        if (one_minus_d2 < 0) {
            if (one_minus_d2 > Real(-1e-12)) {
                dt = 1;
                one_minus_d2 = 0;
            } else {
                throw NumericalDegeneracy("defect ratio exceeds 1 at word " + word_at(t, d).str());
            }
        }
        Complex g = one_minus_d2 == 0 ? Complex(0) : -dt * f.phi_at_zero(t) * running;
        if (!(std::abs(g) < 1)) {
            throw NumericalDegeneracy("extracted |gamma| >= 1 at word " + word_at(t, d).str());
        }
        inconsistency = std::max(inconsistency, std::abs(std::norm(g) - one_minus_d2));
        if (std::abs(g) >= Real(1) - Real(1e-10)) {
            near_trivial.push_back(word_at(t, d));
        }
        gam[t] = g;
        running *= dt;
    }
    if (inconsistency > consistency_tol) {
        throw NumericalDegeneracy("Verblunsky modulus inconsistency " +
                                  std::to_string(static_cast<double>(inconsistency)) + " exceeds tolerance");
    }
    return {VerblunskyFamily(top, std::move(gam)), inconsistency, std::move(near_trivial)};
}

VerblunskyFamily extract(const MomentFamily& m, const Word& top, Real pivot_tol) {
    return extract_detailed(m, top, pivot_tol).gamma;
}

RecurrencePair recurrence_from_moments(const MomentFamily& m, const Word& top, Real pivot_tol) {
    return synthesize(extract(m, top, pivot_tol), top);
}

ProductAndSum product_and_sum(const VerblunskyFamily& g, const Word& upto) {
    if (upto.alphabet() != g.alphabet()) {
        throw DomainError("product_and_sum: word alphabet does not match the Verblunsky family");
    }
    ProductAndSum out;
    const ShortlexIndex last = shortlex_index(upto);
    for (ShortlexIndex i = 0; i <= last; ++i) {
        const Real a = std::norm(g.gamma(i));
        out.partial_product *= Real(1) - a;
        out.square_sum += a;
    }
    for (int n = 0;; ++n) {
        const Word s = sigma_n(n, g.alphabet());
        if (s > upto) {
            break;
        }
        out.sigma_line_product *= Real(1) - std::norm(g.gamma(s));
    }
    return out;
}

}  // namespace ncopuc
