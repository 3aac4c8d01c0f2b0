#pragma once

#include <vector>

#include "ncopuc/types.hpp"
#include "ncopuc/word.hpp"

namespace ncopuc {

/// A noncommutative polynomial sum_sigma c_sigma Z^sigma in d variables.
///
/// Coefficients are stored densely in shortlex order, so the support is always
/// contained in {tau : tau <= top()}. Trailing zero coefficients are trimmed;
/// the zero polynomial has no coefficients at all.
class NcPolynomial {
public:
    explicit NcPolynomial(int alphabet);
    NcPolynomial(int alphabet, std::vector<Complex> shortlex_coeffs);

    static NcPolynomial constant(int alphabet, Complex value);
    static NcPolynomial monomial(const Word& w, Complex coeff = Complex(1));

    int alphabet() const noexcept { return alphabet_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Shortlex-maximal support word. Throws DomainError on the zero polynomial.
    Word top() const;
    /// Number of stored coefficients (shortlex_index(top()) + 1, or 0).
    std::size_t size() const noexcept { return coeffs_.size(); }

    Complex coeff(const Word& w) const;
    Complex coeff(ShortlexIndex i) const { return i < coeffs_.size() ? coeffs_[i] : Complex(0); }
    Complex leading() const { return coeffs_.empty() ? Complex(0) : coeffs_.back(); }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    /// Z_k · P: every monomial Z^sigma becomes Z^{k sigma}.
    NcPolynomial left_multiply(Word::Letter k) const;

    NcPolynomial& operator+=(const NcPolynomial& other);
    NcPolynomial& operator-=(const NcPolynomial& other);
    NcPolynomial& operator*=(Complex s);

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(Complex s, NcPolynomial p) { return p *= s; }
    friend NcPolynomial operator*(NcPolynomial p, Complex s) { return p *= s; }

private:
    void trim();

    int alphabet_;
    std::vector<Complex> coeffs_;
};

}  // namespace ncopuc
