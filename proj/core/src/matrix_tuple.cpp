#include "ncopuc/matrix_tuple.hpp"

#include "ncopuc/error.hpp"

namespace ncopuc {

MatrixTuple::MatrixTuple(std::vector<CMatrix> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DomainError("a matrix tuple needs at least one component");
    }
    checked_alphabet(static_cast<int>(components_.size()));
    level_ = static_cast<int>(components_.front().rows());
    for (const auto& c : components_) {
        if (c.rows() != level_ || c.cols() != level_) {
            throw DomainError("matrix tuple components must be square of equal size");
        }
    }
    if (level_ < 1) {
        throw DomainError("matrix tuple level must be at least 1");
    }
}

MatrixTuple MatrixTuple::zero(int alphabet, int level) {
    checked_alphabet(alphabet);
    return MatrixTuple(std::vector<CMatrix>(static_cast<std::size_t>(alphabet), CMatrix::Zero(level, level)));
}

MatrixTuple MatrixTuple::scalar(std::initializer_list<Complex> values) {
    std::vector<CMatrix> comps;
    for (Complex v : values) {
        CMatrix m(1, 1);
        m(0, 0) = v;
        comps.push_back(std::move(m));
    }
    return MatrixTuple(std::move(comps));
}

MatrixTuple MatrixTuple::direct_sum(const MatrixTuple& a, const MatrixTuple& b) {
    if (a.alphabet() != b.alphabet()) {
        throw DomainError("direct sum of tuples with different alphabets");
    }
    const int ka = a.level();
    const int kb = b.level();
    std::vector<CMatrix> comps;
    for (int j = 0; j < a.alphabet(); ++j) {
        CMatrix m = CMatrix::Zero(ka + kb, ka + kb);
        m.topLeftCorner(ka, ka) = a[j];
        m.bottomRightCorner(kb, kb) = b[j];
        comps.push_back(std::move(m));
    }
    return MatrixTuple(std::move(comps));
}

MatrixTuple MatrixTuple::adjoint() const {
    std::vector<CMatrix> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) {
        comps.push_back(c.adjoint());
    }
    return MatrixTuple(std::move(comps));
}

MatrixTuple MatrixTuple::scaled(Complex s) const {
    std::vector<CMatrix> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) {
        comps.push_back(s * c);
    }
    return MatrixTuple(std::move(comps));
}

CMatrix MatrixTuple::row_gram() const {
    CMatrix g = CMatrix::Zero(level_, level_);
    for (const auto& c : components_) {
        g += c * c.adjoint();
    }
    return g;
}

WordPowers::WordPowers(const MatrixTuple& z, const Word& top) : level_(z.level()) {
    if (top.alphabet() != z.alphabet()) {
        throw DomainError("word powers: tuple has " + std::to_string(z.alphabet()) +
                          " components but the word alphabet is " + std::to_string(top.alphabet()));
    }
    const ShortlexIndex count = shortlex_index(top) + 1;
    const ShortlexIndex d = static_cast<ShortlexIndex>(z.alphabet());
    powers_.reserve(count);
    powers_.push_back(CMatrix::Identity(level_, level_));
    // Word i >= 1 is k·sigma with k its first letter; sigma precedes it.
    ShortlexIndex level_start = 1;  // first index of the current length
    ShortlexIndex level_size = d;   // d^{length}
    for (ShortlexIndex i = 1; i < count; ++i) {
        while (i >= level_start + level_size) {
            level_start += level_size;
            level_size *= d;
        }
        const ShortlexIndex sub_size = level_size / d;
        const ShortlexIndex offset = i - level_start;
        const auto k = static_cast<Word::Letter>(offset / sub_size + 1);
        const ShortlexIndex sigma = (level_start - sub_size) + offset % sub_size;
        powers_.push_back(z.letter(k) * powers_[sigma]);
    }
}

CMatrix evaluate(const NcPolynomial& p, const WordPowers& powers) {
    CMatrix out = CMatrix::Zero(powers.level(), powers.level());
    if (p.size() > powers.size()) {
        throw HorizonError("word powers do not cover the polynomial support");
    }
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != Complex(0)) {
            out += c[i] * powers[i];
        }
    }
    return out;
}

std::vector<CMatrix> evaluate_rows(const CMatrix& coefficients, std::size_t rows, const WordPowers& powers) {
    if (rows > powers.size() || static_cast<Eigen::Index>(rows) > coefficients.rows()) {
        throw HorizonError("evaluate_rows: requested rows exceed the available coefficients or powers");
    }
    std::vector<CMatrix> out;
    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        CMatrix acc = CMatrix::Zero(powers.level(), powers.level());
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex c = coefficients(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (c != Complex(0)) {
                acc += c * powers[j];
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

CMatrix evaluate(const NcPolynomial& p, const MatrixTuple& z) {
    if (p.alphabet() != z.alphabet()) {
        throw DomainError("evaluate: polynomial alphabet " + std::to_string(p.alphabet()) +
                          " does not match tuple with " + std::to_string(z.alphabet()) + " components");
    }
    if (p.is_zero()) {
        return CMatrix::Zero(z.level(), z.level());
    }
    return evaluate(p, WordPowers(z, p.top()));
}

}  // namespace ncopuc
