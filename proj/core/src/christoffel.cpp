#include "ncopuc/christoffel.hpp"

#include <algorithm>
#include <cmath>

#include "ncopuc/error.hpp"
#include "ncopuc/linalg.hpp"

namespace ncopuc {

namespace {

ShortlexIndex rows_for(const OrthonormalFamily& f, int n) {
    if (n < 0) {
        throw DomainError("Christoffel kernels need n >= 0");
    }
    const Word s = sigma_n(n, f.alphabet());
    if (s > f.top) {
        throw HorizonError("sigma(" + std::to_string(n) + ") lies beyond the orthonormal family top " +
                           f.top.str());
    }
    return shortlex_index(s) + 1;
}

void check_tuple(const OrthonormalFamily& f, const MatrixTuple& a) {
    if (a.alphabet() != f.alphabet()) {
        throw DomainError("tuple has " + std::to_string(a.alphabet()) + " components, measure has d = " +
                          std::to_string(f.alphabet()));
    }
}

std::vector<CMatrix> phi_values(const OrthonormalFamily& f, ShortlexIndex rows, const MatrixTuple& a) {
    const WordPowers powers(a, word_at(rows - 1, f.alphabet()));
    return evaluate_rows(f.coefficients, rows, powers);
}

CMatrix hermitian_inverse(const CMatrix& h) {
    const CMatrix sym = (h + h.adjoint()) / Real(2);
    Eigen::LLT<CMatrix> llt(sym);
    if (llt.info() != Eigen::Success) {
        throw NumericalDegeneracy("Christoffel-Darboux kernel is not positive definite");
    }
    const CMatrix inv = llt.solve(CMatrix::Identity(h.rows(), h.cols()));
    return (inv + inv.adjoint()) / Real(2);
}

}  // namespace

MatrixNcPolynomial::MatrixNcPolynomial(int alphabet, int level, std::vector<CMatrix> coefficients)
    : alphabet_(checked_alphabet(alphabet)), level_(level), coeffs_(std::move(coefficients)) {
    if (level_ < 1) {
        throw DomainError("matrix polynomial level must be at least 1");
    }
    if (coeffs_.empty()) {
        coeffs_.push_back(CMatrix::Zero(level_, level_));
    }
    for (const auto& c : coeffs_) {
        if (c.rows() != level_ || c.cols() != level_) {
            throw DomainError("matrix polynomial coefficients must all be " + std::to_string(level_) + "x" +
                              std::to_string(level_));
        }
    }
}

MatrixNcPolynomial MatrixNcPolynomial::identity(int alphabet, int level) {
    return MatrixNcPolynomial(alphabet, level, {CMatrix::Identity(level, level)});
}

CMatrix MatrixNcPolynomial::evaluate(const WordPowers& powers) const {
    if (powers.level() != level_) {
        throw DomainError("matrix polynomial of level " + std::to_string(level_) + " evaluated at level " +
                          std::to_string(powers.level()));
    }
    if (powers.size() < coeffs_.size()) {
        throw HorizonError("word powers do not cover the matrix polynomial support");
    }
    CMatrix out = CMatrix::Zero(level_, level_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out += powers[i] * coeffs_[i];
    }
    return out;
}

CMatrix MatrixNcPolynomial::evaluate(const MatrixTuple& a) const {
    if (a.alphabet() != alphabet_) {
        throw DomainError("matrix polynomial evaluated at a tuple with the wrong number of components");
    }
    return evaluate(WordPowers(a, top()));
}

CMatrix cd_kernel(const OrthonormalFamily& f, int n, const MatrixTuple& a, const MatrixTuple& b) {
    check_tuple(f, a);
    check_tuple(f, b);
    if (a.level() != b.level()) {
        throw DomainError("cd_kernel: tuples of different levels");
    }
    const ShortlexIndex rows = rows_for(f, n);
    const auto pa = phi_values(f, rows, a);
    const auto pb = phi_values(f, rows, b);
    CMatrix out = CMatrix::Zero(a.level(), a.level());
    for (ShortlexIndex i = 0; i < rows; ++i) {
        out += pa[i] * pb[i].adjoint();
    }
    return out;
}

CMatrix christoffel_approx(const OrthonormalFamily& f, int n, const MatrixTuple& a) {
    return hermitian_inverse(cd_kernel(f, n, a, a));
}

MatrixNcPolynomial minimizer_Q(const OrthonormalFamily& f, int n, const MatrixTuple& a) {
    check_tuple(f, a);
    const ShortlexIndex rows = rows_for(f, n);
    const auto pa = phi_values(f, rows, a);
    const int k = a.level();
    CMatrix kappa = CMatrix::Zero(k, k);
    for (const auto& p : pa) {
        kappa += p * p.adjoint();
    }
    const CMatrix lambda = hermitian_inverse(kappa);

    std::vector<CMatrix> coeffs(rows, CMatrix::Zero(k, k));
    for (ShortlexIndex s = 0; s < rows; ++s) {
        const CMatrix c = pa[s].adjoint() * lambda;
        for (ShortlexIndex t = 0; t <= s; ++t) {
            const Complex v = f.coefficients(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t));
            if (v != Complex(0)) {
                coeffs[t] += v * c;
            }
        }
    }
    return MatrixNcPolynomial(f.alphabet(), k, std::move(coeffs));
}

CMatrix quadratic_functional(const MomentFamily& m, const MatrixNcPolynomial& q) {
    if (q.alphabet() != m.alphabet()) {
        throw DomainError("quadratic_functional: alphabet mismatch");
    }
    const KernelBlock block = kernel_block(m, q.top());
    const auto n = static_cast<Eigen::Index>(q.size());
    CMatrix out = CMatrix::Zero(q.level(), q.level());
    for (Eigen::Index s = 0; s < n; ++s) {
        const CMatrix bs_adj = q.coeff(static_cast<ShortlexIndex>(s)).adjoint();
        for (Eigen::Index t = 0; t < n; ++t) {
            const Complex k = block.matrix(t, s);
            if (k != Complex(0)) {
                out += k * (bs_adj * q.coeff(static_cast<ShortlexIndex>(t)));
            }
        }
    }
    return (out + out.adjoint()) / Real(2);
}

MatrixNcPolynomial random_admissible(int n, const MatrixTuple& a, std::mt19937_64& rng, Real scale) {
    if (n < 0) {
        throw DomainError("random_admissible needs n >= 0");
    }
    const int d = a.alphabet();
    const int k = a.level();
    const Word top = sigma_n(n, d);
    const WordPowers powers(a, top);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<CMatrix> coeffs(powers.size(), CMatrix::Zero(k, k));
    CMatrix tail = CMatrix::Zero(k, k);
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) {
                coeffs[i](r, c) = scale * Complex(gauss(rng), gauss(rng));
            }
        }
        tail += powers[i] * coeffs[i];
    }
    coeffs[0] = CMatrix::Identity(k, k) - tail;
    return MatrixNcPolynomial(d, k, std::move(coeffs));
}

const char* to_string(ChristoffelOutcome o) {
    switch (o) {
        case ChristoffelOutcome::Converged:
            return "converged";
        case ChristoffelOutcome::DecayToZero:
            return "decay-to-zero";
        case ChristoffelOutcome::NotConverged:
            return "not-converged";
    }
    return "unknown";
}

ChristoffelResult christoffel_function(const OrthonormalFamily& f, const MatrixTuple& a, Real tol, int max_n) {
    check_tuple(f, a);
    int available = 0;
    while (!(sigma_n(available + 1, f.alphabet()) > f.top)) {
        ++available;
    }
    if (max_n < 0 || max_n > available) {
        max_n = available;
    }

    const ShortlexIndex rows = rows_for(f, max_n);
    const auto pa = phi_values(f, rows, a);
    const int k = a.level();

    ChristoffelResult out;
    CMatrix kappa = CMatrix::Zero(k, k);
    std::vector<Real> norms;
    int small_steps = 0;
    ShortlexIndex next = 0;
    for (int n = 0; n <= max_n; ++n) {
        const ShortlexIndex end = shortlex_index(sigma_n(n, f.alphabet())) + 1;
        for (; next < end; ++next) {
            kappa += pa[next] * pa[next].adjoint();
        }
        out.trace.push_back(hermitian_inverse(kappa));
        norms.push_back(linalg::spectral_norm(out.trace.back()));
        if (n > 0) {
            const Real step = linalg::spectral_norm(out.trace[n] - out.trace[n - 1]) / norms[n - 1];
            small_steps = step < tol ? small_steps + 1 : 0;
            if (small_steps >= 2) {
                out.converged = true;
                break;
            }
        }
    }
    out.value = out.trace.back();
    if (out.converged) {
        out.outcome = ChristoffelOutcome::Converged;
        return out;
    }
    const std::size_t m = norms.size();
    if (m >= 4) {
        bool decay = true;
        Real prev_ratio = 1;
        for (std::size_t i = m - 3; i < m; ++i) {
            const Real ratio = norms[i] / norms[i - 1];
            if (!(ratio < 1) || ratio > prev_ratio) {
                decay = false;
            }
            prev_ratio = ratio;
        }
        if (decay) {
            out.outcome = ChristoffelOutcome::DecayToZero;
        }
    }
    return out;
}

}  // namespace ncopuc
