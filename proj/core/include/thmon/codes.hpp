// codes.hpp -- alphabets, words and finite prefix codes.
//
// Letters are stored as small integers 0..k-1 packed into a std::string, so
// words compare in dictionary order (a proper prefix sorts before its
// extensions) and short words avoid heap allocation.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thmon {

class Alphabet {
public:
    explicit Alphabet(int k);

    int k() const { return k_; }
    bool operator==(const Alphabet&) const = default;

private:
    int k_;
};

class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<int> letters);

    // A word of n copies of one letter.
    static Word repeat(int letter, std::size_t n);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
    int back() const { return static_cast<unsigned char>(letters_.back()); }

    const std::string& raw() const { return letters_; }

    bool starts_with(const Word& prefix) const {
        return letters_.size() >= prefix.letters_.size() &&
               letters_.compare(0, prefix.letters_.size(), prefix.letters_) == 0;
    }
    bool comparable(const Word& other) const {
        return starts_with(other) || other.starts_with(*this);
    }

    Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
    Word drop(std::size_t n) const { return Word(letters_.substr(n)); }
    Word parent() const { return Word(letters_.substr(0, letters_.size() - 1)); }

    void push_back(int letter) { letters_.push_back(static_cast<char>(letter)); }
    void pop_back() { letters_.pop_back(); }
    Word& operator+=(const Word& w) {
        letters_ += w.letters_;
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }
    Word with(int letter) const {
        Word w = *this;
        w.push_back(letter);
        return w;
    }

    // Dictionary order on unsigned letter values.
    std::strong_ordering operator<=>(const Word& other) const {
        int c = letters_.compare(other.letters_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    bool operator==(const Word&) const = default;

private:
    std::string letters_;
};

// Text form: digits then lower-case letters; the empty word displays as "()".
std::string format_word(const Word& w);
// Same, but the empty word is "" (the form used inside JSON files).
std::string format_word_plain(const Word& w);
Word parse_word(std::string_view text, const Alphabet& alphabet);
void check_letters(const Word& w, const Alphabet& alphabet);

// All words of length n over the alphabet, in dictionary order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t n);

enum class CodeKind { NotACode, Code, MaximalCode };

class PrefixCode {
public:
    // Validates letters and the antichain property; duplicates are rejected.
    PrefixCode(Alphabet alphabet, std::vector<Word> words);

    static PrefixCode empty(Alphabet alphabet);
    static PrefixCode epsilon(Alphabet alphabet);
    static PrefixCode letters(Alphabet alphabet);

    // For callers that already hold a sorted antichain.
    struct Trusted {};
    PrefixCode(Trusted, Alphabet alphabet, std::vector<Word> sorted_words)
        : alphabet_(alphabet), words_(std::move(sorted_words)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    bool contains(const Word& w) const;
    bool is_epsilon() const { return words_.size() == 1 && words_.front().empty(); }

    // The element that is a prefix of w, if any; w lies in PA* iff it exists.
    const Word* prefix_of(const Word& w) const;
    bool generates(const Word& w) const { return prefix_of(w) != nullptr; }

    std::size_t max_length() const;
    std::size_t total_length() const;

    bool operator==(const PrefixCode& other) const {
        return alphabet_ == other.alphabet_ && words_ == other.words_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> words_;
};

std::string format_code(const PrefixCode& code);
PrefixCode parse_code(std::string_view text, const Alphabet& alphabet);

// Sorted, duplicate-free prefix-minimal elements of an arbitrary word set.
std::vector<Word> minimal_elements(std::vector<Word> words);

CodeKind code_kind(const std::vector<Word>& words, const Alphabet& alphabet);
bool is_maximal(const PrefixCode& code);

PrefixCode saturate(const PrefixCode& code, const std::vector<Word>& protect = {});
std::pair<PrefixCode, PrefixCode> equalize_sizes(const PrefixCode& p1, const PrefixCode& p2);
PrefixCode ideal_intersection(const PrefixCode& p1, const PrefixCode& p2);
bool is_essential_in(const PrefixCode& sub, const PrefixCode& code);
bool essentially_equal(const PrefixCode& p1, const PrefixCode& p2);
PrefixCode make_q_code(int i, int j, const Alphabet& alphabet);

// Replace q by its k children q a_1, ..., q a_k.
PrefixCode restriction_step(const PrefixCode& code, const Word& q);

}  // namespace thmon
