// codes.cpp -- prefix codes, saturation, ideal intersection.
#include "thmon/codes.hpp"

#include <algorithm>
#include <set>

#include "thmon/errors.hpp"

namespace thmon {

Alphabet::Alphabet(int k) : k_(k) {
    if (k < 2 || k > 36) {
        throw InvalidInput("alphabet size must be in 2..36, got " + std::to_string(k));
    }
}

Word::Word(std::initializer_list<int> letters) {
    for (int a : letters) push_back(a);
}

Word Word::repeat(int letter, std::size_t n) {
    return Word(std::string(n, static_cast<char>(letter)));
}

namespace {

char letter_char(int a) {
    return static_cast<char>(a < 10 ? '0' + a : 'a' + (a - 10));
}

int char_letter(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string format_word_plain(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(letter_char(w[i]));
    return out;
}

std::string format_word(const Word& w) {
    return w.empty() ? std::string("()") : format_word_plain(w);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    if (text == "()") return Word();
    Word w;
    for (char c : text) {
        int a = char_letter(c);
        if (a < 0 || a >= alphabet.k()) {
            throw InvalidInput("letter '" + std::string(1, c) + "' is not in the alphabet of size " +
                               std::to_string(alphabet.k()));
        }
        w.push_back(a);
    }
    return w;
}

void check_letters(const Word& w, const Alphabet& alphabet) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= alphabet.k()) {
            throw InvalidInput("word " + format_word(w) + " uses letter index " +
                               std::to_string(w[i]) + " >= k = " + std::to_string(alphabet.k()));
        }
    }
}

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t n) {
    std::vector<Word> out{Word()};
    for (std::size_t len = 0; len < n; ++len) {
        std::vector<Word> next;
        next.reserve(out.size() * alphabet.k());
        for (const Word& w : out)
            for (int a = 0; a < alphabet.k(); ++a) next.push_back(w.with(a));
        out = std::move(next);
    }
    return out;
}

// --- PrefixCode -------------------------------------------------------------

PrefixCode::PrefixCode(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(alphabet), words_(std::move(words)) {
    for (const Word& w : words_) check_letters(w, alphabet_);
    std::sort(words_.begin(), words_.end());
    for (std::size_t i = 1; i < words_.size(); ++i) {
        // In dictionary order a prefix of w is followed only by its own extensions,
        // so comparing neighbours is enough.
        if (words_[i].starts_with(words_[i - 1])) {
            throw InvalidInput("not a prefix code: " + format_word(words_[i - 1]) +
                               (words_[i] == words_[i - 1] ? " is repeated"
                                                           : " is a prefix of " +
                                                                 format_word(words_[i])));
        }
    }
}

PrefixCode PrefixCode::empty(Alphabet alphabet) { return PrefixCode(Trusted{}, alphabet, {}); }

PrefixCode PrefixCode::epsilon(Alphabet alphabet) {
    return PrefixCode(Trusted{}, alphabet, {Word()});
}

PrefixCode PrefixCode::letters(Alphabet alphabet) {
    return PrefixCode(Trusted{}, alphabet, all_words(alphabet, 1));
}

bool PrefixCode::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

const Word* PrefixCode::prefix_of(const Word& w) const {
    // The only candidate is the greatest element not exceeding w.
    auto it = std::upper_bound(words_.begin(), words_.end(), w);
    if (it == words_.begin()) return nullptr;
    --it;
    return w.starts_with(*it) ? &*it : nullptr;
}

std::size_t PrefixCode::max_length() const {
    std::size_t m = 0;
    for (const Word& w : words_) m = std::max(m, w.size());
    return m;
}

std::size_t PrefixCode::total_length() const {
    std::size_t s = 0;
    for (const Word& w : words_) s += w.size();
    return s;
}

std::string format_code(const PrefixCode& code) {
    std::string out = "{";
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) out += ',';
        out += format_word(code.words()[i]);
    }
    return out + "}";
}

PrefixCode parse_code(std::string_view text, const Alphabet& alphabet) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw InvalidInput("a prefix code is written as {w1,w2,...}");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<Word> words;
    while (!text.empty()) {
        std::size_t comma = text.find(',');
        words.push_back(parse_word(trim(text.substr(0, comma)), alphabet));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return PrefixCode(alphabet, std::move(words));
}

std::vector<Word> minimal_elements(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::vector<Word> out;
    for (Word& w : words) {
        if (!out.empty() && w.starts_with(out.back())) continue;
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

// Every proper prefix of an element, i.e. the internal vertices of the prefix tree.
std::set<Word> internal_vertices(const std::vector<Word>& words) {
    std::set<Word> inner;
    for (const Word& w : words)
        for (std::size_t n = 0; n < w.size(); ++n) inner.insert(w.prefix(n));
    return inner;
}

}  // namespace

CodeKind code_kind(const std::vector<Word>& words, const Alphabet& alphabet) {
    for (const Word& w : words) check_letters(w, alphabet);
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].starts_with(sorted[i - 1])) return CodeKind::NotACode;
    if (sorted.empty()) return CodeKind::Code;

    std::set<Word> inner = internal_vertices(sorted);
    for (const Word& v : inner) {
        for (int a = 0; a < alphabet.k(); ++a) {
            Word child = v.with(a);
            if (!inner.count(child) && !std::binary_search(sorted.begin(), sorted.end(), child))
                return CodeKind::Code;
        }
    }
    return CodeKind::MaximalCode;
}

bool is_maximal(const PrefixCode& code) {
    return code_kind(code.words(), code.alphabet()) == CodeKind::MaximalCode;
}

PrefixCode saturate(const PrefixCode& code, const std::vector<Word>& protect) {
    for (const Word& w : protect) {
        if (!code.contains(w)) {
            throw InvalidInput("protected word " + format_word(w) + " is not in the code");
        }
    }
    if (code.empty()) return PrefixCode::epsilon(code.alphabet());

    std::set<Word> inner = internal_vertices(code.words());
    std::vector<Word> out = code.words();
    for (const Word& v : inner) {
        for (int a = 0; a < code.alphabet().k(); ++a) {
            Word child = v.with(a);
            if (!inner.count(child) && !code.contains(child)) out.push_back(std::move(child));
        }
    }
    std::sort(out.begin(), out.end());
    return PrefixCode(PrefixCode::Trusted{}, code.alphabet(), std::move(out));
}

PrefixCode restriction_step(const PrefixCode& code, const Word& q) {
    if (!code.contains(q)) {
        throw InvalidInput("restriction step at " + format_word(q) + ", which is not in the code");
    }
    std::vector<Word> out;
    out.reserve(code.size() + code.alphabet().k() - 1);
    for (const Word& w : code.words()) {
        if (w == q) {
            for (int a = 0; a < code.alphabet().k(); ++a) out.push_back(q.with(a));
        } else {
            out.push_back(w);
        }
    }
    // Children of q sort exactly where q was, so the order is preserved.
    return PrefixCode(PrefixCode::Trusted{}, code.alphabet(), std::move(out));
}

std::pair<PrefixCode, PrefixCode> equalize_sizes(const PrefixCode& p1, const PrefixCode& p2) {
    if (is_maximal(p1) || is_maximal(p2)) {
        throw PreconditionViolation("equalize_sizes needs two non-maximal prefix codes");
    }
    PrefixCode a = saturate(p1);
    PrefixCode b = saturate(p2);
    auto grow = [](PrefixCode& code, const PrefixCode& original) {
        for (const Word& w : code.words()) {
            if (!original.contains(w)) {
                code = restriction_step(code, w);
                return;
            }
        }
        throw InternalError("equalize_sizes found no unprotected leaf");
    };
    while (a.size() != b.size()) {
        if (a.size() < b.size())
            grow(a, p1);
        else
            grow(b, p2);
    }
    return {std::move(a), std::move(b)};
}

PrefixCode ideal_intersection(const PrefixCode& p1, const PrefixCode& p2) {
    std::vector<Word> out;
    for (const Word& w : p1.words())
        if (p2.generates(w)) out.push_back(w);
    for (const Word& w : p2.words())
        if (p1.generates(w)) out.push_back(w);
    return PrefixCode(PrefixCode::Trusted{}, p1.alphabet(), minimal_elements(std::move(out)));
}

bool is_essential_in(const PrefixCode& sub, const PrefixCode& code) {
    for (const Word& w : sub.words()) {
        if (!code.generates(w)) {
            throw NotASubideal(format_word(w) + " does not lie in the ideal generated by " +
                               format_code(code));
        }
    }
    const auto& s = sub.words();
    for (const Word& p : code.words()) {
        // Elements of sub below p form a contiguous block in dictionary order.
        auto it = std::lower_bound(s.begin(), s.end(), p);
        std::vector<Word> residual;
        for (; it != s.end() && it->starts_with(p); ++it) residual.push_back(it->drop(p.size()));
        if (code_kind(residual, code.alphabet()) != CodeKind::MaximalCode) return false;
    }
    return true;
}

bool essentially_equal(const PrefixCode& p1, const PrefixCode& p2) {
    PrefixCode pi = ideal_intersection(p1, p2);
    return is_essential_in(pi, p1) && is_essential_in(pi, p2);
}

PrefixCode make_q_code(int i, int j, const Alphabet& alphabet) {
    const int k = alphabet.k();
    if (i < 1 || i > k || j < 0) {
        throw InvalidInput("Q-code parameters need 1 <= i <= k and j >= 0");
    }
    std::vector<Word> out;
    if (j == 0) {
        for (int a = 0; a < i; ++a) out.push_back(Word{a});
    } else {
        for (int a = 1; a < i; ++a) out.push_back(Word{a});
        for (int r = 1; r < j; ++r)
            for (int a = 1; a < k; ++a) out.push_back(Word::repeat(0, r).with(a));
        for (int a = 0; a < k; ++a) out.push_back(Word::repeat(0, j).with(a));
    }
    std::sort(out.begin(), out.end());
    return PrefixCode(PrefixCode::Trusted{}, alphabet, std::move(out));
}

}  // namespace thmon
