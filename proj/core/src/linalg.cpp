#include "ncopuc/linalg.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ncopuc::linalg {

Real Cholesky::min_pivot() const {
    Real m = std::numeric_limits<Real>::infinity();
    for (Real p : pivots) {
        m = std::min(m, p);
    }
    return m;
}

Real Cholesky::log_det() const {
    if (!ok) {
        return -std::numeric_limits<Real>::infinity();
    }
    Real s = 0;
    for (Real p : pivots) {
        s += std::log(p);
    }
    return s;
}

Cholesky cholesky(const CMatrix& K, Real rel_tol) {
    const Eigen::Index n = K.rows();
    Cholesky out;
    out.L = CMatrix::Zero(n, n);
    out.pivots.reserve(static_cast<std::size_t>(n));

    Real trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        trace += K(i, i).real();
    }
    const Real threshold = n > 0 ? rel_tol * trace / static_cast<Real>(n) : Real(0);

    CMatrix& L = out.L;
    for (Eigen::Index j = 0; j < n; ++j) {
        Real pivot = K(j, j).real();
        for (Eigen::Index k = 0; k < j; ++k) {
            pivot -= std::norm(L(j, k));
        }
        out.pivots.push_back(pivot);
        if (!(pivot > threshold)) {
            out.ok = false;
            return out;
        }
        const Real ljj = std::sqrt(pivot);
        L(j, j) = ljj;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            Complex s = K(i, j);
            for (Eigen::Index k = 0; k < j; ++k) {
                s -= L(i, k) * std::conj(L(j, k));
            }
            L(i, j) = s / ljj;
        }
    }
    out.ok = true;
    return out;
}

CMatrix lower_triangular_inverse(const CMatrix& L) {
    const Eigen::Index n = L.rows();
    return L.triangularView<Eigen::Lower>().solve(CMatrix::Identity(n, n));
}

RVector hermitian_eigenvalues(const CMatrix& H) {
    const CMatrix sym = (H + H.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Real spectral_norm(const CMatrix& M) {
    if (M.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<CMatrix> svd(M);
    return svd.singularValues()(0);
}

LogDet hermitian_log_det(const CMatrix& H) {
    const RVector ev = hermitian_eigenvalues(H);
    LogDet out{1, 0};
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) == 0) {
            return {0, -std::numeric_limits<Real>::infinity()};
        }
        if (ev(i) < 0) {
            out.sign = -out.sign;
        }
        out.log_abs += std::log(std::abs(ev(i)));
    }
    return out;
}

}  // namespace ncopuc::linalg
