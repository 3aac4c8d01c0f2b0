// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <ncopuc/christoffel.hpp>
#include <ncopuc/linalg.hpp>
#include <ncopuc/opuc.hpp>
#include <ncopuc/orthopoly.hpp>
#include <ncopuc/szego.hpp>
#include <ncopuc/verblunsky.hpp>
#include <ncopuc/zeros.hpp>

#include "oracles.hpp"

using namespace ncopuc;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

// Every kernel block built by the criteria below, for criterion 8.
std::vector<std::pair<CMatrix, int>> g_kernels;

void record_kernel(const MomentFamily& m, const Word& top) {
    g_kernels.emplace_back(kernel_block(m, top).matrix, m.alphabet());
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Real max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

Verdict free_measure() {
    Real worst = 0;
    for (int d = 1; d <= 3; ++d) {
        const Word top = sigma_n(4, d);
        const MomentFamily m = MomentFamily::free_measure(top);
        record_kernel(m, top);
        const VerblunskyFamily g = extract(m, top);
        for (std::size_t i = 0; i < g.size(); ++i) {
            worst = std::max(worst, std::abs(g.gamma(i)));
        }
        for (const Word& w : words_up_to(top)) {
            worst = std::max(worst, std::abs(determinant_D(m, w) - 1));
        }
        const OrthonormalFamily f = gram_schmidt(m, top);
        const auto n = static_cast<Eigen::Index>(f.size());
        worst = std::max(worst, max_abs(f.coefficients - CMatrix::Identity(n, n)));
        for (const SzegoRow& r : szego_table(m, 4).rows) {
            for (Real v : {r.item_i, r.item_ii, r.item_iii, r.item_iv, r.item_v, r.item_vi, r.item_vii, r.item_viii,
                           r.item_ix}) {
                worst = std::max(worst, std::abs(v - 1));
            }
        }
    }
    return {worst <= 1e-12L, "max abs error " + fmt(static_cast<double>(worst))};
}

Real round_trip_worst(bool disc, Real& moment_worst) {
    std::mt19937_64 rng(20240101);
    const Word top = sigma_n(4, 2);
    Real worst = 0;
    moment_worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const VerblunskyFamily g = disc ? oracle::random_gamma_disc(top, 0.9L, rng) : oracle::random_gamma(top, 0.9L, rng);
        const MomentFamily m = moments_from_polys(synthesize(g, top));
        if (!disc && trial % 10 == 0) {
            record_kernel(m, top);
        }
        const VerblunskyFamily back = extract(m, top);
        const MomentFamily again = moments_from_polys(synthesize(back, top));
        for (std::size_t i = 0; i < g.size(); ++i) {
            worst = std::max(worst, std::abs(g.gamma(i) - back.gamma(i)));
            moment_worst = std::max(moment_worst, std::abs(m.moment(i) - again.moment(i)));
        }
    }
    return worst;
}

Verdict favard_round_trip() {
    Real mw = 0;
    const Real gw = round_trip_worst(false, mw);
    return {gw <= 1e-8L && mw <= 1e-8L,
            "gamma err " + fmt(static_cast<double>(gw)) + ", moment err " + fmt(static_cast<double>(mw)) +
                " (|gamma| uniform on [0,0.9], uniform phase)"};
}

Verdict szego_identities() {
    std::mt19937_64 rng(303);
    const Word top = sigma_n(4, 2);
    Real first = 0, second = 0, cross = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.9L, rng), top));
        record_kernel(m, top);
        const SzegoTable t = szego_table(m, 4);
        if (t.truncated) {
            return {false, "measure " + std::to_string(trial) + " truncated: " + t.note};
        }
        for (const SzegoRow& r : t.rows) {
            first = std::max(first, r.res_first);
            second = std::max(second, r.res_second);
            cross = std::max(cross, r.res_cross);
        }
    }
    return {first <= 1e-8L && second <= 1e-8L && cross <= 1e-9L,
            "first list " + fmt(static_cast<double>(first)) + ", second list " + fmt(static_cast<double>(second)) +
                ", cross " + fmt(static_cast<double>(cross))};
}

Verdict classical_agreement() {
    const auto w = opuc::bernstein_szego(Complex(0.5L));
    const auto seq = opuc::quadrature_moments(w, 8, 512);
    const auto lev = opuc::levinson_verblunsky(seq);
    const MomentFamily m = opuc::to_moment_family(seq);
    record_kernel(m, m.horizon());
    const VerblunskyFamily nc = extract(m, sigma_n(8, 1));
    Real dev = 0;
    for (int j = 0; j < 8; ++j) {
        dev = std::max(dev, std::abs(lev[static_cast<std::size_t>(j)] - nc.gamma(static_cast<ShortlexIndex>(j + 1))));
    }
    const auto seq30 = opuc::quadrature_moments(w, 30, 512);
    const VerblunskyFamily g30 = extract(opuc::to_moment_family(seq30), sigma_n(30, 1));
    const Real prod = product_and_sum(g30, sigma_n(30, 1)).partial_product;
    const Real geo = opuc::geometric_mean(w, 512);
    const Real gap = std::abs(prod - geo);
    return {dev <= 1e-8L && gap <= 1e-3L,
            "Levinson deviation " + fmt(static_cast<double>(dev)) + ", |prod - exp(mean log w)| " +
                fmt(static_cast<double>(gap))};
}

Verdict christoffel_minimality() {
    std::mt19937_64 rng(505);
    const Word top = sigma_n(5, 2);
    const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.9L, rng), top));
    record_kernel(m, sigma_n(3, 2));
    const OrthonormalFamily f = gram_schmidt(m, top);
    const std::vector<MatrixTuple> points = {MatrixTuple::zero(2, 1), sample_tuple(SampleKind::Interior, 0.9L, 2, 2, 505)};
    Real worst_min = 1e300L;
    Real worst_mono = 1e300L;
    for (const MatrixTuple& a : points) {
        const int k = a.level();
        for (int n = 0; n <= 3; ++n) {
            const CMatrix lambda = christoffel_approx(f, n, a);
            for (int trial = 0; trial < 200; ++trial) {
                const MatrixNcPolynomial q = random_admissible(n, a, rng);
                const CMatrix gap = quadratic_functional(m, q) - lambda + 1e-8L * CMatrix::Identity(k, k);
                worst_min = std::min(worst_min, oracle::min_eig(gap));
            }
        }
        CMatrix prev = christoffel_approx(f, 0, a);
        for (int n = 1; n <= 5; ++n) {
            const CMatrix l = christoffel_approx(f, n, a);
            worst_mono = std::min(worst_mono, oracle::min_eig(prev + 1e-10L * CMatrix::Identity(k, k) - l));
            prev = l;
        }
    }
    return {worst_min >= 0 && worst_mono >= 0,
            "min eig of Q-functional - Lambda + 1e-8 I: " + fmt(static_cast<double>(worst_min)) +
                "; min eig of Lambda_n - Lambda_{n+1} + 1e-10 I: " + fmt(static_cast<double>(worst_mono))};
}

Verdict decay() {
    const Word top = sigma_n(4, 2);
    std::vector<Complex> v(shortlex_index(top) + 1, Complex(0.5L));
    v[0] = 0;
    const MomentFamily m = moments_from_polys(synthesize(VerblunskyFamily(top, v), top));
    record_kernel(m, top);
    const ChristoffelResult r = christoffel_function(gram_schmidt(m, top), MatrixTuple::zero(2, 1));
    Real err = 0;
    bool decreasing = true;
    for (int n = 0; n <= 4; ++n) {
        const Real l = r.trace[static_cast<std::size_t>(n)](0, 0).real();
        err = std::max(err, std::abs(l - std::pow(Real(0.75), (1 << (n + 1)) - 2)));
        if (n > 0 && !(l < r.trace[static_cast<std::size_t>(n - 1)](0, 0).real())) {
            decreasing = false;
        }
    }
    const bool flagged = r.outcome == ChristoffelOutcome::DecayToZero;
    return {err <= 1e-9L && decreasing && flagged,
            "max |Lambda_n(0) - 0.75^N(n)| " + fmt(static_cast<double>(err)) + ", strictly decreasing: " +
                (decreasing ? "yes" : "no") + ", outcome " + to_string(r.outcome)};
}

Verdict zeros_sweep() {
    Real interior = 1e300L, exterior = 1e300L, boundary_min = 1e300L, gap = 0, summation = 0;
    std::uint64_t index = 0;
    const std::uint64_t seed = 0x7a3e;
    for (int d = 1; d <= 2; ++d) {
        std::mt19937_64 rng(700 + d);
        const Word top = sigma_n(3, d);
        const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.9L, rng), top));
        record_kernel(m, top);
        const RecurrencePair pair = recurrence_from_moments(m, top);
        for (int k = 1; k <= 3; ++k) {
            for (int n = 1; n <= 3; ++n) {
                for (int s = 0; s < 100; ++s) {
                    const FormResult mi = reverse_form(pair, n, sample_tuple(SampleKind::Interior, 0.9L, k, d, seed ^ index++));
                    interior = std::min(interior, mi.min_eig);
                    const FormResult se = level_form(pair, n, sample_tuple(SampleKind::Exterior, 1.5L, k, d, seed ^ index++));
                    exterior = std::min(exterior, se.min_eig);
                    const MatrixTuple b = sample_tuple(SampleKind::Boundary, 1, k, d, seed ^ index++);
                    const FormResult mb = reverse_form(pair, n, b);
                    const FormResult sb = level_form(pair, n, b);
                    gap = std::max(gap, linalg::spectral_norm(mb.matrix - sb.matrix) / linalg::spectral_norm(mb.matrix));
                    boundary_min = std::min(boundary_min, mb.min_eig);
                }
            }
        }
        for (int s = 0; s < 50; ++s) {
            const int k = 1 + s % 3;
            const int n = 1 + (s / 3) % 3;
            std::vector<CMatrix> zc, wc;
            for (int j = 0; j < d; ++j) {
                zc.push_back(oracle::random_matrix(k, k, rng));
                wc.push_back(oracle::random_matrix(k, k, rng));
            }
            const SummationCheck c = summation_residual(pair, n, MatrixTuple(zc), MatrixTuple(wc));
            summation = std::max(summation, c.residual / c.scale);
        }
    }
    return {interior > 0 && exterior > 0 && boundary_min > 0 && gap <= 1e-8L && summation <= 1e-8L,
            "interior min eig M " + fmt(static_cast<double>(interior)) + ", exterior min eig S " +
                fmt(static_cast<double>(exterior)) + ", boundary ||M-S||/||M|| " + fmt(static_cast<double>(gap)) +
                " (min eig " + fmt(static_cast<double>(boundary_min)) + "), summation residual " +
                fmt(static_cast<double>(summation))};
}

Verdict axiom_regression() {
    std::mt19937_64 rng(808);
    Real structural = 0, equality = 0;
    for (const auto& [k, d] : g_kernels) {
        const AxiomResidual r = multi_toeplitz_spot_check(k, d, 200, rng);
        structural = std::max(structural, r.structural_zero);
        equality = std::max({equality, r.translation, r.diagonal});
    }
    return {structural == 0 && equality <= 1e-12L,
            std::to_string(g_kernels.size()) + " kernels, structural zeros max " + fmt(static_cast<double>(structural)) +
                ", equalities max " + fmt(static_cast<double>(equality))};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "free-measure degeneracy", 1, free_measure},
        {2, "Favard round trip d=2 sigma(4)", 30, favard_round_trip},
        {3, "finite-n Szego identities", 60, szego_identities},
        {4, "d=1 classical agreement", 5, classical_agreement},
        {5, "Christoffel minimality and monotonicity", 60, christoffel_minimality},
        {6, "divergence / decay to zero", 10, decay},
        {7, "zeros region sweep", 120, zeros_sweep},
        {8, "multi-Toeplitz axiom regression", 1, axiom_regression},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool ok = v.ok && in_time;
        failures += ok ? 0 : 1;
        std::printf("[%s] criterion %d: %s -- %s; %.3fs (budget %gs)%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    v.detail.c_str(), secs, c.budget_s, in_time ? "" : " OVER BUDGET");
    }

    // Not a criterion: the same round trip with |gamma| uniform over the 0.9 disc.
    Real mw = 0;
    const Real gw = round_trip_worst(true, mw);
    std::printf("[INFO] round trip with |gamma| uniform over the 0.9 disc: gamma err %s, moment err %s\n",
                fmt(static_cast<double>(gw)).c_str(), fmt(static_cast<double>(mw)).c_str());

    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
