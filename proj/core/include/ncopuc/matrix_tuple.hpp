#pragma once

#include <vector>

#include "ncopuc/polynomial.hpp"
#include "ncopuc/types.hpp"
#include "ncopuc/word.hpp"

namespace ncopuc {

/// A d-tuple (Z_1, ..., Z_d) of k×k complex matrices, a point of level k.
class MatrixTuple {
public:
    /// Throws DomainError unless all components are square of one common size.
    explicit MatrixTuple(std::vector<CMatrix> components);

    static MatrixTuple zero(int alphabet, int level);
    /// Scalar (level 1) tuple.
    static MatrixTuple scalar(std::initializer_list<Complex> values);
    /// Block-diagonal direct sum A ⊕ B, componentwise.
    static MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b);

    int alphabet() const noexcept { return static_cast<int>(components_.size()); }
    int level() const noexcept { return level_; }
    /// Component Z_j, 0-based (Z_1 is operator[](0)).
    const CMatrix& operator[](std::size_t j) const { return components_[j]; }
    const CMatrix& letter(Word::Letter k) const { return components_[k - 1]; }
    const std::vector<CMatrix>& components() const noexcept { return components_; }

    /// (Z_1^*, ..., Z_d^*).
    MatrixTuple adjoint() const;
    MatrixTuple scaled(Complex s) const;
    /// Z_1 Z_1^* + ... + Z_d Z_d^*.
    CMatrix row_gram() const;

private:
    std::vector<CMatrix> components_;
    int level_;
};

/// The matrices Z^sigma = Z_{sigma_1} ... Z_{sigma_n} for every sigma <= top,
/// built once along the shortlex order via Z^{k sigma} = Z_k Z^sigma.
class WordPowers {
public:
    WordPowers(const MatrixTuple& z, const Word& top);

    const CMatrix& operator[](ShortlexIndex i) const { return powers_.at(i); }
    const CMatrix& operator()(const Word& w) const { return powers_.at(shortlex_index(w)); }
    std::size_t size() const noexcept { return powers_.size(); }
    int level() const noexcept { return level_; }

private:
    std::vector<CMatrix> powers_;
    int level_;
};

/// P(Z) = sum_sigma c_sigma Z^sigma with Z^empty = I_k.
CMatrix evaluate(const NcPolynomial& p, const MatrixTuple& z);
/// Same, reusing precomputed powers (which must cover p's support).
CMatrix evaluate(const NcPolynomial& p, const WordPowers& powers);

/// Evaluates the first `rows` rows of a lower-triangular coefficient matrix
/// (row i = polynomial supported on words <= word_at(i)) at the tuple.
std::vector<CMatrix> evaluate_rows(const CMatrix& coefficients, std::size_t rows, const WordPowers& powers);

}  // namespace ncopuc
