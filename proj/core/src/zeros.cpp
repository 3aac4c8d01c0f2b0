#include "ncopuc/zeros.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "ncopuc/error.hpp"
#include "ncopuc/linalg.hpp"

namespace ncopuc {

namespace {

ShortlexIndex rows_for(const RecurrencePair& pair, int n) {
    if (n < 0) {
        throw DomainError("n must be non-negative");
    }
    const Word s = sigma_n(n, pair.alphabet());
    if (s > pair.top) {
        throw HorizonError("sigma(" + std::to_string(n) + ") beyond recurrence top " + pair.top.str());
    }
    return shortlex_index(s) + 1;
}

void check_tuple(const RecurrencePair& pair, const MatrixTuple& z) {
    if (z.alphabet() != pair.alphabet()) {
        throw DomainError("tuple has " + std::to_string(z.alphabet()) + " components, recurrence has d = " +
                          std::to_string(pair.alphabet()));
    }
}

FormResult make_form(CMatrix m) {
    m = (m + m.adjoint()) / Real(2);
    const RVector eig = linalg::hermitian_eigenvalues(m);
    const linalg::LogDet ld = linalg::hermitian_log_det(m);
    return {std::move(m), ld.sign, ld.log_abs, eig(0)};
}

CMatrix gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

}  // namespace

const char* to_string(BallRegion r) {
    switch (r) {
        case BallRegion::Interior:
            return "interior";
        case BallRegion::Boundary:
            return "boundary";
        case BallRegion::Exterior:
            return "exterior";
        case BallRegion::Indefinite:
            return "indefinite";
    }
    return "unknown";
}

BallClassification classify_point(const MatrixTuple& z, Real tol) {
    const CMatrix g = z.row_gram();
    const RVector eig = linalg::hermitian_eigenvalues(g);
    const Real lo = eig(0);
    const Real hi = eig(eig.size() - 1);
    BallClassification c{BallRegion::Indefinite, Real(1) - hi, Real(1) - lo};
    if (std::max(std::abs(lo - 1), std::abs(hi - 1)) <= tol) {
        c.region = BallRegion::Boundary;
    } else if (hi < Real(1) - tol) {
        c.region = BallRegion::Interior;
    } else if (lo > Real(1) + tol) {
        c.region = BallRegion::Exterior;
    }
    return c;
}

SummationCheck summation_residual(const RecurrencePair& pair, int n, const MatrixTuple& z, const MatrixTuple& w) {
    check_tuple(pair, z);
    check_tuple(pair, w);
    if (z.level() != w.level()) {
        throw DomainError("summation_residual: tuples of different levels");
    }
    const ShortlexIndex rows = rows_for(pair, n);
    const Word top = word_at(rows - 1, pair.alphabet());
    const WordPowers pz(z, top);
    const WordPowers pw(w, top);
    const auto phi_z = evaluate_rows(pair.phi, rows, pz);
    const auto phi_w = evaluate_rows(pair.phi, rows, pw);
    const auto sharp_z = evaluate_rows(pair.phi_sharp, rows, pz);
    const auto sharp_w = evaluate_rows(pair.phi_sharp, rows, pw);

    CMatrix lhs = sharp_z[rows - 1].adjoint() * sharp_w[rows - 1];
    for (ShortlexIndex i = 0; i < rows; ++i) {
        lhs -= phi_z[i].adjoint() * phi_w[i];
    }
    const int k = z.level();
    CMatrix middle = CMatrix::Zero(k, k);
    for (int j = 0; j < z.alphabet(); ++j) {
        middle += z[static_cast<std::size_t>(j)].adjoint() * w[static_cast<std::size_t>(j)];
    }
    CMatrix rhs = CMatrix::Zero(k, k);
    const ShortlexIndex shorter = n == 0 ? 0 : count_up_to_length(n - 1, pair.alphabet());
    for (ShortlexIndex i = 0; i < shorter; ++i) {
        rhs -= phi_z[i].adjoint() * middle * phi_w[i];
    }
    const Real scale = std::max({Real(1), linalg::spectral_norm(lhs), linalg::spectral_norm(rhs)});
    return {linalg::spectral_norm(lhs - rhs), scale};
}

FormResult reverse_form(const RecurrencePair& pair, int n, const MatrixTuple& z) {
    check_tuple(pair, z);
    const ShortlexIndex rows = rows_for(pair, n);
    const WordPowers p(z.adjoint(), word_at(rows - 1, pair.alphabet()));
    CMatrix v = CMatrix::Zero(z.level(), z.level());
    for (ShortlexIndex j = 0; j < rows; ++j) {
        const Complex c = pair.phi_sharp(static_cast<Eigen::Index>(rows - 1), static_cast<Eigen::Index>(j));
        if (c != Complex(0)) {
            v += c * p[j];
        }
    }
    return make_form(v.adjoint() * v);
}

FormResult level_form(const RecurrencePair& pair, int n, const MatrixTuple& z) {
    check_tuple(pair, z);
    const ShortlexIndex rows = rows_for(pair, n);
    const WordPowers p(z.adjoint(), word_at(rows - 1, pair.alphabet()));
    const auto phi = evaluate_rows(pair.phi, rows, p);
    const ShortlexIndex first = n == 0 ? 0 : count_up_to_length(n - 1, pair.alphabet());
    CMatrix s = CMatrix::Zero(z.level(), z.level());
    for (ShortlexIndex i = first; i < rows; ++i) {
        s += phi[i].adjoint() * phi[i];
    }
    return make_form(std::move(s));
}

Real decomposition_residual(const RecurrencePair& pair, int n, const MatrixTuple& z) {
    if (n < 1) {
        throw DomainError("decomposition_residual needs n >= 1");
    }
    check_tuple(pair, z);
    const ShortlexIndex rows = rows_for(pair, n);
    const WordPowers p(z.adjoint(), word_at(rows - 1, pair.alphabet()));
    const auto phi = evaluate_rows(pair.phi, rows, p);
    const auto sharp = evaluate_rows(pair.phi_sharp, rows, p);
    const int k = z.level();
    const CMatrix defect = CMatrix::Identity(k, k) - z.row_gram();

    CMatrix r = sharp[rows - 1].adjoint() * sharp[rows - 1] - defect;
    const ShortlexIndex first = count_up_to_length(n - 1, pair.alphabet());
    for (ShortlexIndex i = first; i < rows; ++i) {
        r -= phi[i].adjoint() * phi[i];
    }
    for (ShortlexIndex i = 1; i < first; ++i) {
        r -= phi[i].adjoint() * defect * phi[i];
    }
    return linalg::spectral_norm(r);
}

MatrixTuple sample_tuple(SampleKind kind, Real param, int k, int d, std::uint64_t seed) {
    checked_alphabet(d);
    if (k < 1) {
        throw DomainError("sample_tuple needs level k >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<CMatrix> comps;
    if (kind == SampleKind::Interior) {
        if (!(param > 0 && param < 1)) {
            throw DomainError("interior samples need radius in (0, 1)");
        }
        for (int j = 0; j < d; ++j) {
            comps.push_back(gaussian(k, k, rng));
        }
        const MatrixTuple raw(comps);
        const RVector eig = linalg::hermitian_eigenvalues(raw.row_gram());
        return raw.scaled(Complex(param / std::sqrt(eig(eig.size() - 1))));
    }
    if (kind == SampleKind::Exterior && !(param > 1)) {
        throw DomainError("exterior samples need scale > 1");
    }
    // Haar unitary: QR of a Gaussian matrix with the phases of R's diagonal removed.
    const int kd = k * d;
    const CMatrix g = gaussian(kd, kd, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(kd, kd);
    const CMatrix r = qr.matrixQR();
    for (int j = 0; j < kd; ++j) {
        const Complex rjj = r(j, j);
        if (std::abs(rjj) > 0) {
            q.col(j) *= rjj / std::abs(rjj);
        }
    }
    const Real s = kind == SampleKind::Exterior ? param : Real(1);
    for (int j = 0; j < d; ++j) {
        comps.push_back(s * q.block(0, j * k, k, k));
    }
    return MatrixTuple(std::move(comps));
}

}  // namespace ncopuc
