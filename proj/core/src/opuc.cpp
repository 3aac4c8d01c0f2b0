#include "ncopuc/opuc.hpp"

#include <cmath>
#include <numbers>

#include "ncopuc/error.hpp"

namespace ncopuc::opuc {

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;

void check_nodes(int nodes) {
    if (nodes < 1) {
        throw DomainError("quadrature needs at least one node");
    }
}

}  // namespace

Complex CircleMomentSeq::at(int k) const {
    const auto i = static_cast<std::size_t>(std::abs(k));
    if (i >= c.size()) {
        throw HorizonError("trigonometric moment " + std::to_string(k) + " beyond order " +
                           std::to_string(order()));
    }
    return k >= 0 ? c[i] : std::conj(c[i]);
}

CircleMomentSeq make_sequence(std::vector<Complex> c) {
    if (c.empty() || std::abs(c[0] - Complex(1)) > Real(1e-10)) {
        throw DomainError("circle moment sequence must start with c_0 = 1");
    }
    c[0] = Complex(1);
    return CircleMomentSeq{std::move(c)};
}

CircleMomentSeq quadrature_moments(const Density& w, int n, int nodes, Real mass_tol) {
    if (n < 0) {
        throw DomainError("quadrature_moments: order must be non-negative");
    }
    check_nodes(nodes);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0));
    for (int j = 0; j < nodes; ++j) {
        const Real theta = kTwoPi * j / nodes;
        const Real v = w(theta);
        for (int k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(k)] += v * std::polar(Real(1), -k * theta);
        }
    }
    for (auto& v : c) {
        v /= static_cast<Real>(nodes);
    }
    if (std::abs(c[0] - Complex(1)) > mass_tol) {
        throw DomainError("density mass " + std::to_string(static_cast<double>(c[0].real())) +
                          " is not 1 within tolerance");
    }
    c[0] = Complex(1);
    return CircleMomentSeq{std::move(c)};
}

Real geometric_mean(const Density& w, int nodes) {
    check_nodes(nodes);
    Real acc = 0;
    for (int j = 0; j < nodes; ++j) {
        const Real v = w(kTwoPi * j / nodes);
        if (!(v > 0)) {
            return 0;
        }
        acc += std::log(v);
    }
    return std::exp(acc / nodes);
}

Density bernstein_szego(Complex a) {
    if (!(std::abs(a) < 1)) {
        throw DomainError("Bernstein-Szego parameter must lie in the open unit disc");
    }
    return [a](Real theta) {
        return (Real(1) - std::norm(a)) / std::norm(Complex(1) - a * std::polar(Real(1), theta));
    };
}

Density fejer() {
    return [](Real theta) { return Real(1) + std::cos(theta); };
}

std::vector<Complex> levinson_verblunsky(const CircleMomentSeq& seq, Real tol) {
    const int n = seq.order();
    // r(j) = <z^j, 1> under the nc pairing.
    auto r = [&](int j) { return std::conj(seq.at(j)); };

    std::vector<Complex> phi{Complex(1)};  // monic Phi_m, coefficient of z^i at index i
    Real err = 1;                          // ||Phi_m||^2
    std::vector<Complex> gamma;
    gamma.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        // <z Phi_m, 1> = sum_i phi_i r(i + 1)
        Complex num = 0;
        for (int i = 0; i <= m; ++i) {
            num += phi[static_cast<std::size_t>(i)] * r(i + 1);
        }
        const Complex g = num / err;
        // Phi_{m+1} = z Phi_m - g Phi_m^*, Phi_m^*(z) = z^m conj(Phi_m(1/conj z)).
        std::vector<Complex> next(static_cast<std::size_t>(m) + 2, Complex(0));
        for (int i = 0; i <= m; ++i) {
            next[static_cast<std::size_t>(i) + 1] += phi[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(m - i)] -= g * std::conj(phi[static_cast<std::size_t>(i)]);
        }
        err *= Real(1) - std::norm(g);
        if (!(err > tol)) {
            throw PositivityError("Toeplitz matrix is not positive definite at order " + std::to_string(m + 1));
        }
        phi = std::move(next);
        gamma.push_back(g);
    }
    return gamma;
}

MomentFamily to_moment_family(const CircleMomentSeq& seq) {
    std::vector<Complex> v(seq.c.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = std::conj(seq.c[k]);
    }
    return MomentFamily::from_values(sigma_n(seq.order(), 1), v);
}

}  // namespace ncopuc::opuc
