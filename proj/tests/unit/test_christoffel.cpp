#include <gtest/gtest.h>

#include <random>

#include <ncopuc/christoffel.hpp>
#include <ncopuc/error.hpp>
#include <ncopuc/verblunsky.hpp>
#include <ncopuc/zeros.hpp>

#include "oracles.hpp"

using namespace ncopuc;

namespace {

OrthonormalFamily family_from(const VerblunskyFamily& g) {
    return gram_schmidt(moments_from_polys(synthesize(g, g.horizon())), g.horizon());
}

VerblunskyFamily constant_gamma(const Word& top, Complex value) {
    std::vector<Complex> v(shortlex_index(top) + 1, value);
    v[0] = 0;
    return VerblunskyFamily(top, v);
}

Real max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Christoffel, FreeMeasureAtZero) {
    const Word top = sigma_n(3, 2);
    const OrthonormalFamily f = gram_schmidt(MomentFamily::free_measure(top), top);
    const MatrixTuple zero = MatrixTuple::zero(2, 1);
    for (int n = 0; n <= 3; ++n) {
        EXPECT_NEAR(static_cast<double>(cd_kernel(f, n, zero, zero)(0, 0).real()), 1.0, 1e-15);
        EXPECT_NEAR(static_cast<double>(christoffel_approx(f, n, zero)(0, 0).real()), 1.0, 1e-15);
    }
    const MatrixNcPolynomial q = minimizer_Q(f, 3, zero);
    EXPECT_LE(max_abs(q.coeff(0) - CMatrix::Identity(1, 1)), 1e-15L);
    for (std::size_t i = 1; i < q.size(); ++i) {
        EXPECT_LE(max_abs(q.coeff(i)), 1e-15L);
    }
    const ChristoffelResult r = christoffel_function(f, zero);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.outcome, ChristoffelOutcome::Converged);
    EXPECT_NEAR(static_cast<double>(r.value(0, 0).real()), 1.0, 1e-15);
}

TEST(Christoffel, LevelZeroIsIdentity) {
    std::mt19937_64 rng(3);
    const Word top = sigma_n(2, 2);
    const OrthonormalFamily f = family_from(oracle::random_gamma(top, 0.8L, rng));
    const MatrixTuple a = sample_tuple(SampleKind::Interior, 0.7L, 2, 2, 9);
    EXPECT_LE(max_abs(cd_kernel(f, 0, a, a) - CMatrix::Identity(2, 2)), 1e-15L);
    const MatrixNcPolynomial q = minimizer_Q(f, 0, a);
    ASSERT_EQ(q.size(), 1u);
    EXPECT_LE(max_abs(q.coeff(0) - CMatrix::Identity(2, 2)), 1e-15L);
}

TEST(Christoffel, SingleCoefficientD1) {
    const Word top = sigma_n(1, 1);
    const OrthonormalFamily f = family_from(VerblunskyFamily(top, {0, 0.5L}));
    const MatrixTuple zero = MatrixTuple::zero(1, 1);
    EXPECT_NEAR(static_cast<double>(cd_kernel(f, 1, zero, zero)(0, 0).real()), 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(static_cast<double>(christoffel_approx(f, 1, zero)(0, 0).real()), 0.75, 1e-14);
}

TEST(Christoffel, LevelTwoZeroIsScalarTimesIdentity) {
    std::mt19937_64 rng(4);
    const Word top = sigma_n(3, 2);
    const OrthonormalFamily f = family_from(oracle::random_gamma(top, 0.8L, rng));
    for (int n = 0; n <= 3; ++n) {
        const Real s = christoffel_approx(f, n, MatrixTuple::zero(2, 1))(0, 0).real();
        EXPECT_LE(max_abs(christoffel_approx(f, n, MatrixTuple::zero(2, 2)) - s * CMatrix::Identity(2, 2)), 1e-15L);
    }
}

TEST(Christoffel, MinimizerConstraintAndValue) {
    std::mt19937_64 rng(5);
    const Word top = sigma_n(3, 2);
    const VerblunskyFamily g = oracle::random_gamma(top, 0.8L, rng);
    const MomentFamily m = moments_from_polys(synthesize(g, top));
    const OrthonormalFamily f = gram_schmidt(m, top);
    const std::vector<MatrixTuple> points = {MatrixTuple::zero(2, 1), sample_tuple(SampleKind::Interior, 0.8L, 2, 2, 1),
                                             sample_tuple(SampleKind::Interior, 0.5L, 3, 2, 2)};
    for (const MatrixTuple& a : points) {
        for (int n = 0; n <= 3; ++n) {
            const MatrixNcPolynomial q = minimizer_Q(f, n, a);
            const int k = a.level();
            EXPECT_LE(max_abs(q.evaluate(a) - CMatrix::Identity(k, k)), 1e-10L);
            EXPECT_LE(max_abs(quadratic_functional(m, q) - christoffel_approx(f, n, a)), 1e-9L);
        }
    }
}

TEST(Christoffel, QuadraticFunctionalExamples) {
    std::mt19937_64 rng(6);
    const Word top = sigma_n(2, 2);
    const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.7L, rng), top));
    EXPECT_LE(max_abs(quadratic_functional(m, MatrixNcPolynomial::identity(2, 2)) - CMatrix::Identity(2, 2)), 1e-15L);

    // Q = sum phi_s (x) a_s gives sum a_s^* a_s.
    const OrthonormalFamily f = gram_schmidt(m, top);
    const int k = 2;
    std::vector<CMatrix> a;
    std::vector<CMatrix> coeffs(f.size(), CMatrix::Zero(k, k));
    CMatrix expected = CMatrix::Zero(k, k);
    for (ShortlexIndex s = 0; s < f.size(); ++s) {
        a.push_back(oracle::random_matrix(k, k, rng));
        expected += a.back().adjoint() * a.back();
        for (ShortlexIndex t = 0; t <= s; ++t) {
            coeffs[t] += f.coefficients(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) * a.back();
        }
    }
    const MatrixNcPolynomial q(2, k, coeffs);
    EXPECT_LE(max_abs(quadratic_functional(m, q) - expected), 1e-11L * max_abs(expected));

    // Z_1 (x) I_1 under the free measure.
    std::vector<CMatrix> z1(2, CMatrix::Zero(1, 1));
    z1[1](0, 0) = 1;
    EXPECT_NEAR(static_cast<double>(quadratic_functional(MomentFamily::free_measure(top), MatrixNcPolynomial(2, 1, z1))(0, 0).real()), 1.0, 1e-15);
}

TEST(Christoffel, LoewnerMinimality) {
    std::mt19937_64 rng(7);
    const Word top = sigma_n(3, 2);
    const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.8L, rng), top));
    const OrthonormalFamily f = gram_schmidt(m, top);
    const std::vector<MatrixTuple> points = {MatrixTuple::zero(2, 1), sample_tuple(SampleKind::Interior, 0.8L, 2, 2, 3)};
    for (const MatrixTuple& a : points) {
        for (int n = 0; n <= 3; ++n) {
            const CMatrix lambda = christoffel_approx(f, n, a);
            for (int trial = 0; trial < 50; ++trial) {
                const MatrixNcPolynomial q = random_admissible(n, a, rng);
                ASSERT_LE(max_abs(q.evaluate(a) - CMatrix::Identity(a.level(), a.level())), 1e-10L);
                EXPECT_GE(oracle::min_eig(quadratic_functional(m, q) - lambda), -1e-8L);
            }
        }
    }
}

TEST(Christoffel, MonotoneAndBounded) {
    std::mt19937_64 rng(8);
    const Word top = sigma_n(5, 2);
    const OrthonormalFamily f = family_from(oracle::random_gamma(top, 0.5L, rng));
    const MatrixTuple a = sample_tuple(SampleKind::Interior, 0.9L, 2, 2, 4);
    CMatrix prev = CMatrix::Identity(2, 2);
    for (int n = 0; n <= 5; ++n) {
        const CMatrix l = christoffel_approx(f, n, a);
        EXPECT_GE(oracle::min_eig(prev + 1e-10L * CMatrix::Identity(2, 2) - l), 0);
        EXPECT_GT(oracle::min_eig(l), 0);
        EXPECT_LE(oracle::max_eig(l), 1 + 1e-12L);
        EXPECT_GE(oracle::min_eig(cd_kernel(f, n, a, a) - CMatrix::Identity(2, 2)), -1e-12L);
        prev = l;
    }
}

TEST(Christoffel, DirectSum) {
    std::mt19937_64 rng(9);
    const Word top = sigma_n(3, 2);
    const OrthonormalFamily f = family_from(oracle::random_gamma(top, 0.8L, rng));
    const MatrixTuple a = sample_tuple(SampleKind::Interior, 0.7L, 2, 2, 5);
    const MatrixTuple b = sample_tuple(SampleKind::Interior, 0.6L, 1, 2, 6);
    const MatrixTuple ab = MatrixTuple::direct_sum(a, b);
    for (int n = 0; n <= 3; ++n) {
        CMatrix expected = CMatrix::Zero(3, 3);
        expected.topLeftCorner(2, 2) = christoffel_approx(f, n, a);
        expected.bottomRightCorner(1, 1) = christoffel_approx(f, n, b);
        EXPECT_LE(max_abs(christoffel_approx(f, n, ab) - expected), 1e-9L);
    }
}

TEST(Christoffel, ZeroPointIdentity) {
    std::mt19937_64 rng(10);
    const Word top = sigma_n(4, 2);
    const OrthonormalFamily f = family_from(oracle::random_gamma(top, 0.7L, rng));
    Real sum = 0;
    ShortlexIndex next = 0;
    for (int n = 0; n <= 4; ++n) {
        for (; next <= shortlex_index(sigma_n(n, 2)); ++next) {
            sum += std::norm(f.phi_at_zero(next));
        }
        const Real l = christoffel_approx(f, n, MatrixTuple::zero(2, 1))(0, 0).real();
        EXPECT_NEAR(static_cast<double>(l * sum), 1.0, 1e-10);
    }
}

TEST(Christoffel, ConstantHalfDecaysToZero) {
    const Word top = sigma_n(4, 2);
    const OrthonormalFamily f = family_from(constant_gamma(top, 0.5L));
    const ChristoffelResult r = christoffel_function(f, MatrixTuple::zero(2, 1));
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.outcome, ChristoffelOutcome::DecayToZero);
    ASSERT_EQ(r.trace.size(), 5u);
    for (int n = 0; n <= 4; ++n) {
        const double expected = std::pow(0.75, (1 << (n + 1)) - 2);
        EXPECT_NEAR(static_cast<double>(r.trace[static_cast<std::size_t>(n)](0, 0).real()), expected, 1e-9);
    }
}

TEST(Christoffel, DivergentSquareSumD1) {
    // gamma_n = (n + 1)^{-1/2}: sum |gamma|^2 diverges, Lambda_n(0) = 1 / (n + 1).
    const int len = 40;
    const Word top = sigma_n(len, 1);
    std::vector<Complex> v(len + 1, Complex(0));
    for (int n = 1; n <= len; ++n) {
        v[static_cast<std::size_t>(n)] = 1 / std::sqrt(static_cast<Real>(n + 1));
    }
    const OrthonormalFamily f = family_from(VerblunskyFamily(top, v));
    const ChristoffelResult r = christoffel_function(f, MatrixTuple::zero(1, 1));
    EXPECT_FALSE(r.converged);
    for (int n = 0; n <= len; ++n) {
        EXPECT_NEAR(static_cast<double>(r.trace[static_cast<std::size_t>(n)](0, 0).real()), 1.0 / (n + 1), 1e-9);
    }
}

TEST(Christoffel, Errors) {
    const Word top = sigma_n(2, 2);
    const OrthonormalFamily f = gram_schmidt(MomentFamily::free_measure(top), top);
    EXPECT_THROW(christoffel_approx(f, 3, MatrixTuple::zero(2, 1)), HorizonError);
    EXPECT_THROW(christoffel_approx(f, 1, MatrixTuple::zero(3, 1)), DomainError);
    EXPECT_THROW(cd_kernel(f, 1, MatrixTuple::zero(2, 1), MatrixTuple::zero(2, 2)), DomainError);
}
