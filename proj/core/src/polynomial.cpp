#include "ncopuc/polynomial.hpp"

#include <algorithm>

#include "ncopuc/error.hpp"

namespace ncopuc {

namespace {

void check_same_alphabet(int a, int b) {
    if (a != b) {
        throw DomainError("polynomials over different alphabets (" + std::to_string(a) + " vs " +
                          std::to_string(b) + ")");
    }
}

}  // namespace

NcPolynomial::NcPolynomial(int alphabet) : alphabet_(checked_alphabet(alphabet)) {}

NcPolynomial::NcPolynomial(int alphabet, std::vector<Complex> shortlex_coeffs)
    : alphabet_(checked_alphabet(alphabet)), coeffs_(std::move(shortlex_coeffs)) {
    trim();
}

NcPolynomial NcPolynomial::constant(int alphabet, Complex value) {
    return NcPolynomial(alphabet, {value});
}

NcPolynomial NcPolynomial::monomial(const Word& w, Complex coeff) {
    std::vector<Complex> c(shortlex_index(w) + 1, Complex(0));
    c.back() = coeff;
    return NcPolynomial(w.alphabet(), std::move(c));
}

Word NcPolynomial::top() const {
    if (coeffs_.empty()) {
        throw DomainError("the zero polynomial has no top word");
    }
    return word_at(coeffs_.size() - 1, alphabet_);
}

Complex NcPolynomial::coeff(const Word& w) const {
    check_same_alphabet(alphabet_, w.alphabet());
    return coeff(shortlex_index(w));
}

NcPolynomial NcPolynomial::left_multiply(Word::Letter k) const {
    if (coeffs_.empty()) {
        return *this;
    }
    if (k < 1 || k > alphabet_) {
        throw DomainError("letter outside alphabet in left_multiply");
    }
    // shortlex_index(k sigma) = k * d^{|sigma|} + shortlex_index(sigma).
    const ShortlexIndex d = static_cast<ShortlexIndex>(alphabet_);
    const ShortlexIndex new_top = shortlex_index(top().prepend(k));
    std::vector<Complex> out(new_top + 1, Complex(0));
    ShortlexIndex level_start = 0;  // index of the first word of the current length
    ShortlexIndex level_size = 1;   // d^{length}
    for (ShortlexIndex i = 0; i < coeffs_.size(); ++i) {
        while (i >= level_start + level_size) {
            level_start += level_size;
            level_size *= d;
        }
        if (coeffs_[i] != Complex(0)) {
            out[static_cast<ShortlexIndex>(k) * level_size + i] = coeffs_[i];
        }
    }
    return NcPolynomial(alphabet_, std::move(out));
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
    check_same_alphabet(alphabet_, other.alphabet_);
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Complex(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& other) {
    check_same_alphabet(alphabet_, other.alphabet_);
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Complex(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(Complex s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

void NcPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0)) {
        coeffs_.pop_back();
    }
}

}  // namespace ncopuc
