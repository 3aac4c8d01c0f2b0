#include "ncopuc/moments.hpp"

#include <algorithm>
#include <cmath>

#include "ncopuc/error.hpp"

namespace ncopuc {

MomentFamily::MomentFamily(const Word& horizon, std::vector<std::optional<Complex>> values)
    : horizon_(horizon), values_(std::move(values)) {
    const ShortlexIndex expected = shortlex_index(horizon) + 1;
    if (values_.size() != expected) {
        throw DomainError("moment family for horizon " + horizon.str() + " needs " +
                          std::to_string(expected) + " slots, got " + std::to_string(values_.size()));
    }
    if (values_[0].has_value() && *values_[0] != Complex(1)) {
        throw DomainError("moment of the empty word must be 1 (probability normalization)");
    }
    values_[0] = Complex(1);
}

MomentFamily MomentFamily::from_values(const Word& horizon, const std::vector<Complex>& values) {
    std::vector<std::optional<Complex>> opt(values.begin(), values.end());
    return MomentFamily(horizon, std::move(opt));
}

MomentFamily MomentFamily::free_measure(const Word& horizon) {
    std::vector<Complex> v(shortlex_index(horizon) + 1, Complex(0));
    v[0] = Complex(1);
    return from_values(horizon, v);
}

bool MomentFamily::has(const Word& w) const {
    if (w.alphabet() != alphabet()) {
        return false;
    }
    const ShortlexIndex i = shortlex_index(w);
    return i < values_.size() && values_[i].has_value();
}

Complex MomentFamily::moment(ShortlexIndex i) const {
    if (i >= values_.size()) {
        throw HorizonError("moment of " + word_at(i, alphabet()).str() + " lies beyond horizon " +
                           horizon_.str());
    }
    if (!values_[i].has_value()) {
        throw HorizonError("moment of " + word_at(i, alphabet()).str() + " is not stored");
    }
    return *values_[i];
}

Complex MomentFamily::moment(const Word& w) const {
    if (w.alphabet() != alphabet()) {
        throw DomainError("moment lookup with a word over the wrong alphabet");
    }
    if (w > horizon_) {
        throw HorizonError("moment of " + w.str() + " lies beyond horizon " + horizon_.str());
    }
    return moment(shortlex_index(w));
}

Complex kernel_entry(const MomentFamily& m, const Word& sigma, const Word& tau) {
    const Reduction r = reduce_pair(sigma, tau);
    switch (r.kind) {
        case Reduction::Kind::LeftRemainder:
            return r.remainder.empty() ? Complex(1) : m.moment(r.remainder);
        case Reduction::Kind::RightRemainder:
            return std::conj(m.moment(r.remainder));
        case Reduction::Kind::Orthogonal:
            break;
    }
    return Complex(0);
}

KernelBlock kernel_block(const MomentFamily& m, const Word& top) {
    if (top.alphabet() != m.alphabet()) {
        throw DomainError("kernel block: word alphabet does not match the moment family");
    }
    if (top > m.horizon()) {
        throw HorizonError("kernel block top " + top.str() + " exceeds horizon " + m.horizon().str());
    }
    const std::vector<Word> words = words_up_to(top);
    const auto n = static_cast<Eigen::Index>(words.size());
    CMatrix k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        k(i, i) = Complex(1);
        for (Eigen::Index j = 0; j < i; ++j) {
            // Word j precedes word i, so only the LeftRemainder / Orthogonal cases arise.
            const Complex v = kernel_entry(m, words[i], words[j]);
            k(i, j) = v;
            k(j, i) = std::conj(v);
        }
    }
    return {top, std::move(k)};
}

NontrivialCheck check_nontrivial(const MomentFamily& m, const Word& top, Real tol) {
    const auto chol = linalg::cholesky(kernel_block(m, top).matrix, tol);
    return {chol.ok, chol.min_pivot()};
}

Real determinant_D(const MomentFamily& m, const Word& top, Real tol) {
    const auto chol = linalg::cholesky(kernel_block(m, top).matrix, tol);
    if (!chol.ok) {
        return 0;
    }
    Real det = 1;
    for (Real p : chol.pivots) {
        det *= p;
    }
    return det;
}

Real log_determinant_D(const MomentFamily& m, const Word& top, Real tol) {
    return linalg::cholesky(kernel_block(m, top).matrix, tol).log_det();
}

Complex inner_product(const MomentFamily& m, const NcPolynomial& p, const NcPolynomial& q) {
    if (p.alphabet() != m.alphabet() || q.alphabet() != m.alphabet()) {
        throw DomainError("inner product: polynomial alphabet does not match the moment family");
    }
    const int d = m.alphabet();
    Complex acc(0);
    for (ShortlexIndex i = 0; i < p.size(); ++i) {
        const Complex a = p.coeff(i);
        if (a == Complex(0)) {
            continue;
        }
        const Word sigma = word_at(i, d);
        for (ShortlexIndex j = 0; j < q.size(); ++j) {
            const Complex b = q.coeff(j);
            if (b == Complex(0)) {
                continue;
            }
            acc += kernel_entry(m, sigma, word_at(j, d)) * a * std::conj(b);
        }
    }
    return acc;
}

namespace {

void accumulate(const CMatrix& k, const std::vector<Word>& words, ShortlexIndex t, ShortlexIndex s,
                ShortlexIndex s2, AxiomResidual& out) {
    const auto n = static_cast<ShortlexIndex>(k.rows());
    const auto at = [&](ShortlexIndex i, ShortlexIndex j) {
        return k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };
    const ShortlexIndex ts = shortlex_index(words[t].concat(words[s]));
    const ShortlexIndex ts2 = shortlex_index(words[t].concat(words[s2]));
    if (ts < n && ts2 < n) {
        out.translation = std::max(out.translation, std::abs(at(ts, ts2) - at(s, s2)));
    }
    if (reduce_pair(words[s], words[s2]).kind == Reduction::Kind::Orthogonal) {
        out.structural_zero = std::max(out.structural_zero, std::abs(at(s, s2)));
    }
    if (s == s2) {
        out.diagonal = std::max(out.diagonal, std::abs(at(s, s) - Complex(1)));
    }
    ++out.checked;
}

}  // namespace

AxiomResidual multi_toeplitz_residual(const CMatrix& kernel, int alphabet) {
    AxiomResidual out;
    const auto n = static_cast<ShortlexIndex>(kernel.rows());
    if (n == 0) {
        return out;
    }
    const std::vector<Word> words = words_up_to(word_at(n - 1, alphabet));
    for (ShortlexIndex s = 0; s < n; ++s) {
        for (ShortlexIndex s2 = 0; s2 < n; ++s2) {
            const std::size_t longest = std::max(words[s].length(), words[s2].length());
            for (ShortlexIndex t = 0; t < n; ++t) {
                if (words[t].length() + longest > words[n - 1].length()) {
                    break;
                }
                accumulate(kernel, words, t, s, s2, out);
            }
        }
    }
    return out;
}

AxiomResidual multi_toeplitz_spot_check(const CMatrix& kernel, int alphabet, std::size_t samples,
                                        std::mt19937_64& rng) {
    AxiomResidual out;
    const auto n = static_cast<ShortlexIndex>(kernel.rows());
    if (n == 0) {
        return out;
    }
    const std::vector<Word> words = words_up_to(word_at(n - 1, alphabet));
    std::uniform_int_distribution<ShortlexIndex> pick(0, n - 1);
    std::size_t attempts = 0;
    while (out.checked < samples && attempts < samples * 1000) {
        ++attempts;
        const ShortlexIndex t = pick(rng);
        const ShortlexIndex s = pick(rng);
        const ShortlexIndex s2 = pick(rng);
        if (shortlex_index(words[t].concat(words[s])) >= n ||
            shortlex_index(words[t].concat(words[s2])) >= n) {
            continue;
        }
        accumulate(kernel, words, t, s, s2, out);
    }
    return out;
}

}  // namespace ncopuc
