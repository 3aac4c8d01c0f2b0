#include "ncopuc/szego.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "ncopuc/christoffel.hpp"
#include "ncopuc/error.hpp"
#include "ncopuc/orthopoly.hpp"

namespace ncopuc {

namespace {

Real spread(std::initializer_list<Real> xs) {
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return *hi - *lo;
}

int largest_nontrivial_length(const MomentFamily& m, int N, Real tol) {
    int n = -1;
    while (n < N) {
        if (!check_nontrivial(m, sigma_n(n + 1, m.alphabet()), tol).nontrivial) {
            break;
        }
        ++n;
    }
    return n;
}

}  // namespace

SzegoTable szego_table(const MomentFamily& m, int N, Real pivot_tol) {
    if (N < 0) {
        throw DomainError("szego_table needs N >= 0");
    }
    const int d = m.alphabet();
    if (sigma_n(N, d) > m.horizon()) {
        throw HorizonError("szego_table: sigma(" + std::to_string(N) + ") beyond moment horizon " +
                           m.horizon().str());
    }
    SzegoTable table;
    int last = N;
    if (!check_nontrivial(m, sigma_n(N, d), pivot_tol).nontrivial) {
        last = largest_nontrivial_length(m, N, pivot_tol);
        table.truncated = true;
        table.note = "kernel block loses positivity before sigma(" + std::to_string(last + 1) + ")";
        if (last < 0) {
            return table;
        }
    }

    const Word top = sigma_n(last, d);
    const OrthonormalFamily f = gram_schmidt(m, top, pivot_tol);
    const VerblunskyFamily g = extract(m, top, pivot_tol);
    const RecurrencePair pair = synthesize(g, top);
    const MatrixTuple zero = MatrixTuple::zero(d, 1);

    Real line_product = 1;
    Real full_product = 1;
    Real off_line_product = 1;
    Real phi0_sum = 0;
    ShortlexIndex next = 0;
    for (int n = 0; n <= last; ++n) {
        const Word s = sigma_n(n, d);
        const ShortlexIndex is = shortlex_index(s);
        for (; next <= is; ++next) {
            const Real factor = Real(1) - std::norm(g.gamma(next));
            full_product *= factor;
            if (next != is) {
                off_line_product *= factor;
            }
            phi0_sum += std::norm(f.phi_at_zero(next));
        }
        line_product *= Real(1) - std::norm(g.gamma(is));

        SzegoRow r;
        r.n = n;
        const NcPolynomial big_phi = monic(f, s);
        r.item_i = inner_product(m, big_phi, big_phi).real();
        r.item_ii = Real(1) / (f.leading[is] * f.leading[is]);
        r.item_iii = line_product;
        const Real log_prev = is == 0 ? Real(0) : log_determinant_D(m, word_at(is - 1, d), pivot_tol);
        r.item_iv = std::exp(log_determinant_D(m, s, pivot_tol) - log_prev);
        r.item_v = full_product;
        r.item_vi = christoffel_approx(f, n, zero)(0, 0).real();
        r.item_vii = Real(1) / std::norm(pair.phi_sharp(static_cast<Eigen::Index>(is), 0));
        r.item_viii = Real(1) / phi0_sum;
        r.item_ix = quadratic_functional(m, minimizer_Q(f, n, zero))(0, 0).real();
        r.res_first = spread({r.item_i, r.item_ii, r.item_iii, r.item_iv});
        r.res_second = spread({r.item_v, r.item_vi, r.item_vii, r.item_viii, r.item_ix});
        r.res_cross = std::abs(r.item_v - r.item_iii * off_line_product);
        table.rows.push_back(r);
    }
    return table;
}

SzegoConditionReport szego_condition(const VerblunskyFamily& g, const std::vector<Word>& horizons) {
    SzegoConditionReport out;
    for (const Word& h : horizons) {
        const ProductAndSum ps = product_and_sum(g, h);
        out.horizons.push_back(h);
        out.square_sums.push_back(ps.square_sum);
        out.products.push_back(ps.partial_product);
    }
    if (out.square_sums.size() < 2) {
        out.trend = "insufficient data";
        return out;
    }
    std::vector<Real> inc;
    for (std::size_t i = 1; i < out.square_sums.size(); ++i) {
        inc.push_back(out.square_sums[i] - out.square_sums[i - 1]);
    }
    if (std::all_of(inc.begin(), inc.end(), [](Real x) { return x == 0; })) {
        out.trend = "square sums constant";
    } else if (std::is_sorted(inc.rbegin(), inc.rend()) && inc.back() < inc.front()) {
        out.trend = "square-sum increments shrinking";
    } else {
        out.trend = "square-sum increments not shrinking";
    }
    return out;
}

}  // namespace ncopuc
