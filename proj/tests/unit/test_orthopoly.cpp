#include <gtest/gtest.h>

#include <random>

#include <ncopuc/error.hpp>
#include <ncopuc/matrix_tuple.hpp>
#include <ncopuc/orthopoly.hpp>
#include <ncopuc/verblunsky.hpp>

#include "oracles.hpp"

using namespace ncopuc;

TEST(Orthopoly, FreeMeasureGivesMonomials) {
    for (int d = 1; d <= 3; ++d) {
        const Word top = sigma_n(4, d);
        const OrthonormalFamily f = gram_schmidt(MomentFamily::free_measure(top), top);
        const auto n = static_cast<Eigen::Index>(f.size());
        EXPECT_LE((f.coefficients - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12L);
    }
}

TEST(Orthopoly, MatchesClassicalGramSchmidt) {
    std::mt19937_64 rng(2024);
    const Word top = sigma_n(3, 2);
    const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.7L, rng), top));
    const CMatrix ref = oracle::gram_schmidt(oracle::kernel_matrix(m, oracle::shortlex_words(2, 3)));
    const OrthonormalFamily f = gram_schmidt(m, top);
    EXPECT_LE((f.coefficients - ref).cwiseAbs().maxCoeff(), 1e-9L);
}

TEST(Orthopoly, OrthonormalUnderInnerProduct) {
    std::mt19937_64 rng(5);
    const Word top = sigma_n(2, 3);
    const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.8L, rng), top));
    const OrthonormalFamily f = gram_schmidt(m, top);
    for (ShortlexIndex i = 0; i < f.size(); ++i) {
        for (ShortlexIndex j = 0; j < f.size(); ++j) {
            const Complex ip = inner_product(m, f.phi(i), f.phi(j));
            EXPECT_LE(std::abs(ip - Complex(i == j ? 1 : 0)), 1e-12L) << i << "," << j;
        }
        EXPECT_GT(f.leading[i], 0);
        EXPECT_NEAR(static_cast<double>(f.pivots[i] * f.leading[i] * f.leading[i]), 1.0, 1e-12);
    }
}

TEST(Orthopoly, MonicHasLeadingOneAndNormFromLeading) {
    std::mt19937_64 rng(6);
    const Word top = sigma_n(3, 2);
    const MomentFamily m = moments_from_polys(synthesize(oracle::random_gamma(top, 0.6L, rng), top));
    const OrthonormalFamily f = gram_schmidt(m, top);
    for (const Word& w : words_up_to(top)) {
        const NcPolynomial p = monic(f, w);
        EXPECT_EQ(p.leading(), Complex(1));
        EXPECT_EQ(p.top(), w);
        const Real a = f.leading_coefficient(w);
        EXPECT_NEAR(static_cast<double>(norm_mu(m, p)), static_cast<double>(1 / a), 1e-12);
    }
}

TEST(Orthopoly, TwoByTwoHandCase) {
    // d = 1, c_1 = 0.5: phi_1 = (z - 0.5) / sqrt(0.75).
    const MomentFamily m = MomentFamily::from_values(sigma_n(1, 1), {1, 0.5L});
    const OrthonormalFamily f = gram_schmidt(m, sigma_n(1, 1));
    EXPECT_NEAR(static_cast<double>(f.leading[1]), 1 / std::sqrt(0.75), 1e-15);
    EXPECT_NEAR(static_cast<double>(f.phi_at_zero(1).real()), -0.5 / std::sqrt(0.75), 1e-15);
}

TEST(Orthopoly, TrivialMeasureThrows) {
    const MomentFamily atom = MomentFamily::from_values(sigma_n(2, 1), {1, 1, 1});
    EXPECT_THROW(gram_schmidt(atom, sigma_n(2, 1)), PositivityError);
}

TEST(Orthopoly, EvaluationAtScalarAndMatrixPoints) {
    const NcPolynomial p(2, {Complex(1), Complex(2), Complex(0, 1), Complex(3)});  // 1 + 2 Z1 + i Z2 + 3 Z1 Z1
    const MatrixTuple z = MatrixTuple::scalar({Complex(0.5), Complex(0, 2)});
    const Complex expected = Complex(1) + Complex(2) * 0.5L + Complex(0, 1) * Complex(0, 2) + Complex(3) * 0.25L;
    EXPECT_LE(std::abs(evaluate(p, z)(0, 0) - expected), 1e-15L);

    std::mt19937_64 rng(1);
    const MatrixTuple a({oracle::random_matrix(2, 2, rng), oracle::random_matrix(2, 2, rng)});
    const CMatrix e = CMatrix::Identity(2, 2) + Complex(2) * a[0] + Complex(0, 1) * a[1] + Complex(3) * a[0] * a[0];
    EXPECT_LE((evaluate(p, a) - e).cwiseAbs().maxCoeff(), 1e-14L);

    // Word order: Z^{12} = Z1 Z2.
    const NcPolynomial w = NcPolynomial::monomial(Word::parse(2, "12"));
    EXPECT_LE((evaluate(w, a) - a[0] * a[1]).cwiseAbs().maxCoeff(), 1e-15L);
}
