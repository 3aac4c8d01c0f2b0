#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncopuc {

/// Position of a word in the shortlex enumeration of the free monoid; the
/// empty word sits at 0.
using ShortlexIndex = std::uint64_t;

/// A word over the alphabet {1, ..., d}, 1 <= d <= 255.
///
/// Words are immutable values. Comparison is shortlex: shorter words first,
/// then lexicographic on letters. Words over different alphabets never
/// compare equal; ordering them is a DomainError.
class Word {
public:
    using Letter = std::uint8_t;

    explicit Word(int alphabet);
    Word(int alphabet, std::vector<Letter> letters);
    Word(int alphabet, std::initializer_list<int> letters);

    /// Parses a digit string such as "112" (d <= 9 only); "" is the empty word.
    static Word parse(int alphabet, std::string_view digits);

    int alphabet() const noexcept { return alphabet_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    /// The word k·w (letter k prepended).
    Word prepend(Letter k) const;
    /// w with its first letter removed; the empty word maps to itself.
    Word tail() const;
    Word concat(const Word& other) const;
    bool is_prefix_of(const Word& other) const;

    /// Digit string for d <= 9 ("112"), dot-separated otherwise; "()" for the empty word.
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    int alphabet_;
    std::vector<Letter> letters_;
};

/// Returns d unchanged, or throws DomainError unless 1 <= d <= 255.
int checked_alphabet(int alphabet);

/// Shortlex rank of w: the bijective base-d numeral of its letters. Throws
/// SizeError if the rank does not fit in 64 bits.
ShortlexIndex shortlex_index(const Word& w);

/// Inverse of shortlex_index.
Word word_at(ShortlexIndex index, int alphabet);

/// Immediate shortlex predecessor. Throws DomainError on the empty word.
Word predecessor(const Word& w);

/// Immediate shortlex successor.
Word successor(const Word& w);

/// The shortlex-last word of length n: the letter d repeated n times.
Word sigma_n(int n, int alphabet);

/// Number of words of length <= n, i.e. (d^{n+1} - 1) / (d - 1).
ShortlexIndex count_up_to_length(int n, int alphabet);

/// All words w with w <= top in shortlex order, in that order.
std::vector<Word> words_up_to(const Word& top);

struct Reduction {
    enum class Kind { LeftRemainder, RightRemainder, Orthogonal };
    Kind kind;
    Word remainder;  // empty for Orthogonal
};

/// Classifies a pair of words by prefix relation:
/// LeftRemainder(a) when sigma = tau·a (including sigma == tau with a = empty),
/// RightRemainder(a) when tau = sigma·a with a nonempty, Orthogonal otherwise.
Reduction reduce_pair(const Word& sigma, const Word& tau);

/// The suffixes sigma_j...sigma_N for j = 1..N, longest first.
std::vector<Word> suffixes(const Word& w);

}  // namespace ncopuc
