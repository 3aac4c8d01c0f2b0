#include "ncopuc/word.hpp"

#include <algorithm>

#include "ncopuc/error.hpp"

namespace ncopuc {

namespace {

void check_alphabet(int alphabet) {
    if (alphabet < 1 || alphabet > 255) {
        throw DomainError("alphabet size must lie in [1, 255], got " + std::to_string(alphabet));
    }
}

void check_same_alphabet(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet()) {
        throw DomainError("words over different alphabets (" + std::to_string(a.alphabet()) +
                          " vs " + std::to_string(b.alphabet()) + ")");
    }
}

}  // namespace

int checked_alphabet(int alphabet) {
    check_alphabet(alphabet);
    return alphabet;
}

Word::Word(int alphabet) : alphabet_(alphabet) {
    check_alphabet(alphabet);
}

Word::Word(int alphabet, std::vector<Letter> letters) : alphabet_(alphabet), letters_(std::move(letters)) {
    check_alphabet(alphabet);
    for (Letter l : letters_) {
        if (l < 1 || l > alphabet_) {
            throw DomainError("letter " + std::to_string(l) + " outside alphabet {1.." +
                              std::to_string(alphabet_) + "}");
        }
    }
}

Word::Word(int alphabet, std::initializer_list<int> letters) : alphabet_(alphabet) {
    check_alphabet(alphabet);
    letters_.reserve(letters.size());
    for (int l : letters) {
        if (l < 1 || l > alphabet_) {
            throw DomainError("letter " + std::to_string(l) + " outside alphabet {1.." +
                              std::to_string(alphabet_) + "}");
        }
        letters_.push_back(static_cast<Letter>(l));
    }
}

Word Word::parse(int alphabet, std::string_view digits) {
    if (alphabet > 9) {
        throw DomainError("Word::parse supports alphabets of size <= 9");
    }
    std::vector<Letter> letters;
    letters.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9') {
            throw DomainError(std::string("non-digit letter '") + ch + "'");
        }
        letters.push_back(static_cast<Letter>(ch - '0'));
    }
    return Word(alphabet, std::move(letters));
}

Word Word::prepend(Letter k) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + 1);
    out.push_back(k);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(alphabet_, std::move(out));
}

Word Word::tail() const {
    if (letters_.empty()) {
        return *this;
    }
    return Word(alphabet_, std::vector<Letter>(letters_.begin() + 1, letters_.end()));
}

Word Word::concat(const Word& other) const {
    check_same_alphabet(*this, other);
    std::vector<Letter> out(letters_);
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    Word w(alphabet_);
    w.letters_ = std::move(out);
    return w;
}

bool Word::is_prefix_of(const Word& other) const {
    check_same_alphabet(*this, other);
    return letters_.size() <= other.letters_.size() &&
           std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

std::string Word::str() const {
    if (letters_.empty()) {
        return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (alphabet_ > 9 && i > 0) {
            out += '.';
        }
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    check_same_alphabet(a, b);
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

ShortlexIndex shortlex_index(const Word& w) {
    // Bijective base-d numeral: rank = sum_i letter_i * d^{|w|-i}, which equals
    // (number of shorter words) + (lexicographic rank among words of equal length).
    const auto d = static_cast<ShortlexIndex>(w.alphabet());
    ShortlexIndex index = 0;
    for (auto letter : w.letters()) {
        if (__builtin_mul_overflow(index, d, &index) ||
            __builtin_add_overflow(index, static_cast<ShortlexIndex>(letter), &index)) {
            throw SizeError("shortlex index of a word of length " + std::to_string(w.length()) +
                            " overflows 64 bits");
        }
    }
    return index;
}

Word word_at(ShortlexIndex index, int alphabet) {
    check_alphabet(alphabet);
    const auto d = static_cast<ShortlexIndex>(alphabet);
    std::vector<Word::Letter> letters;
    while (index > 0) {
        // Bijective numeration: digits run over 1..d rather than 0..d-1.
        const ShortlexIndex digit = (index - 1) % d + 1;
        letters.push_back(static_cast<Word::Letter>(digit));
        index = (index - digit) / d;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(alphabet, std::move(letters));
}

Word predecessor(const Word& w) {
    if (w.empty()) {
        throw DomainError("the empty word has no shortlex predecessor");
    }
    return word_at(shortlex_index(w) - 1, w.alphabet());
}

Word successor(const Word& w) {
    const ShortlexIndex index = shortlex_index(w);
    if (index == ~ShortlexIndex{0}) {
        throw SizeError("shortlex successor overflows 64 bits");
    }
    return word_at(index + 1, w.alphabet());
}

Word sigma_n(int n, int alphabet) {
    if (n < 0) {
        throw DomainError("sigma_n requires n >= 0");
    }
    check_alphabet(alphabet);
    return Word(alphabet, std::vector<Word::Letter>(static_cast<std::size_t>(n),
                                                    static_cast<Word::Letter>(alphabet)));
}

ShortlexIndex count_up_to_length(int n, int alphabet) {
    return shortlex_index(sigma_n(n, alphabet)) + 1;
}

std::vector<Word> words_up_to(const Word& top) {
    const ShortlexIndex count = shortlex_index(top) + 1;
    std::vector<Word> out;
    out.reserve(count);
    for (ShortlexIndex i = 0; i < count; ++i) {
        out.push_back(word_at(i, top.alphabet()));
    }
    return out;
}

Reduction reduce_pair(const Word& sigma, const Word& tau) {
    check_same_alphabet(sigma, tau);
    const auto s = sigma.letters();
    const auto t = tau.letters();
    if (tau.is_prefix_of(sigma)) {
        return {Reduction::Kind::LeftRemainder,
                Word(sigma.alphabet(), std::vector<Word::Letter>(s.begin() + t.size(), s.end()))};
    }
    if (sigma.is_prefix_of(tau)) {
        return {Reduction::Kind::RightRemainder,
                Word(sigma.alphabet(), std::vector<Word::Letter>(t.begin() + s.size(), t.end()))};
    }
    return {Reduction::Kind::Orthogonal, Word(sigma.alphabet())};
}

std::vector<Word> suffixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.length());
    const auto l = w.letters();
    for (std::size_t j = 0; j < l.size(); ++j) {
        out.emplace_back(w.alphabet(), std::vector<Word::Letter>(l.begin() + j, l.end()));
    }
    return out;
}

}  // namespace ncopuc
