// morphisms.cpp -- tables, composition, maximal extension, normalization.
#include "thmon/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "thmon/errors.hpp"

namespace thmon {

namespace {

std::string format_pair(const Morphism::Entry& e) {
    return "(" + format_word(e.first) + "," + format_word(e.second) + ")";
}

using Table = std::map<Word, Word>;

Morphism from_table(const Alphabet& alphabet, const Table& t) {
    return Morphism(Morphism::Trusted{}, alphabet, std::vector<Morphism::Entry>(t.begin(), t.end()));
}

// If the k children of x are all present with images y a_1 ... y a_k, return y.
std::optional<Word> merge_target(const Table& t, const Word& x, int k) {
    Word child = x.with(0);
    auto it = t.find(child);
    if (it == t.end() || it->second.empty() || it->second.back() != 0) return std::nullopt;
    Word y = it->second.parent();
    for (int a = 1; a < k; ++a) {
        child.pop_back();
        child.push_back(a);
        ++it;  // siblings are adjacent in dictionary order
        if (it == t.end() || it->first != child) return std::nullopt;
        const Word& img = it->second;
        if (img.empty() || img.back() != a || img.size() != y.size() + 1 || !img.starts_with(y))
            return std::nullopt;
    }
    return y;
}

void merge_all(Table& t, int k) {
    // Candidate parents bucketed by length. A merge at depth d can only enable
    // a merge at depth d-1, so one sweep from the deepest level suffices.
    std::vector<std::set<Word>> pending;
    for (const auto& [x, y] : t) {
        if (x.empty()) continue;
        if (pending.size() < x.size()) pending.resize(x.size());
        pending[x.size() - 1].insert(x.parent());
    }
    for (std::size_t depth = pending.size(); depth-- > 0;) {
        for (const Word& x : pending[depth]) {
            std::optional<Word> y = merge_target(t, x, k);
            if (!y) continue;
            for (int a = 0; a < k; ++a) t.erase(x.with(a));
            t.emplace(x, std::move(*y));
            if (depth > 0) pending[depth - 1].insert(x.parent());
        }
    }
}

}  // namespace

Morphism::Morphism(Alphabet alphabet, std::vector<Entry> entries)
    : alphabet_(alphabet), entries_(std::move(entries)) {
    for (const Entry& e : entries_) {
        check_letters(e.first, alphabet_);
        check_letters(e.second, alphabet_);
    }
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].first.starts_with(entries_[i - 1].first)) {
            throw InvalidInput("domain is not a prefix code: entries " + format_pair(entries_[i - 1]) +
                               " and " + format_pair(entries_[i]) +
                               (entries_[i].first == entries_[i - 1].first
                                    ? " share a domain word"
                                    : " have prefix-comparable domain words"));
        }
    }
}

Morphism Morphism::zero(Alphabet alphabet) { return Morphism(Trusted{}, alphabet, {}); }

Morphism Morphism::one(Alphabet alphabet) {
    return Morphism(Trusted{}, alphabet, {{Word(), Word()}});
}

Morphism Morphism::identity_on(const PrefixCode& code) {
    std::vector<Entry> entries;
    entries.reserve(code.size());
    for (const Word& w : code.words()) entries.emplace_back(w, w);
    return Morphism(Trusted{}, code.alphabet(), std::move(entries));
}

PrefixCode Morphism::domain_code() const {
    std::vector<Word> words;
    words.reserve(entries_.size());
    for (const Entry& e : entries_) words.push_back(e.first);
    return PrefixCode(PrefixCode::Trusted{}, alphabet_, std::move(words));
}

std::vector<Word> Morphism::image_set() const {
    std::vector<Word> words;
    words.reserve(entries_.size());
    for (const Entry& e : entries_) words.push_back(e.second);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

const Morphism::Entry* Morphism::entry_for(const Word& w) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), w,
                               [](const Word& v, const Entry& e) { return v < e.first; });
    if (it == entries_.begin()) return nullptr;
    --it;
    return w.starts_with(it->first) ? &*it : nullptr;
}

std::optional<Word> Morphism::apply(const Word& w) const {
    const Entry* e = entry_for(w);
    if (!e) return std::nullopt;
    return e->second + w.drop(e->first.size());
}

Morphism maximal_extension(const Morphism& phi) {
    Table t(phi.entries().begin(), phi.entries().end());
    merge_all(t, phi.alphabet().k());
    return from_table(phi.alphabet(), t);
}

std::vector<Word> mergeable_parents(const Morphism& phi) {
    Table t(phi.entries().begin(), phi.entries().end());
    std::set<Word> parents;
    for (const auto& [x, y] : t)
        if (!x.empty()) parents.insert(x.parent());
    std::vector<Word> out;
    for (const Word& x : parents)
        if (merge_target(t, x, phi.alphabet().k())) out.push_back(x);
    return out;
}

Morphism extension_step(const Morphism& phi, const Word& x) {
    Table t(phi.entries().begin(), phi.entries().end());
    std::optional<Word> y = merge_target(t, x, phi.alphabet().k());
    if (!y) throw InvalidInput("no mergeable sibling block under " + format_word(x));
    for (int a = 0; a < phi.alphabet().k(); ++a) t.erase(x.with(a));
    t.emplace(x, std::move(*y));
    return from_table(phi.alphabet(), t);
}

Morphism restriction_step(const Morphism& phi, const Word& x) {
    std::vector<Morphism::Entry> out;
    out.reserve(phi.size() + phi.alphabet().k() - 1);
    bool found = false;
    for (const auto& [d, v] : phi.entries()) {
        if (d == x) {
            found = true;
            for (int a = 0; a < phi.alphabet().k(); ++a) out.emplace_back(d.with(a), v.with(a));
        } else {
            out.emplace_back(d, v);
        }
    }
    if (!found) throw InvalidInput(format_word(x) + " is not a domain word of the table");
    return Morphism(Morphism::Trusted{}, phi.alphabet(), std::move(out));
}

Morphism restrict_to_ideal(const Morphism& phi, const PrefixCode& code) {
    PrefixCode pi = ideal_intersection(phi.domain_code(), code);
    std::vector<Morphism::Entry> out;
    out.reserve(pi.size());
    for (const Word& w : pi.words()) out.emplace_back(w, *phi.apply(w));
    return Morphism(Morphism::Trusted{}, phi.alphabet(), std::move(out));
}

Morphism compose(const Morphism& phi2, const Morphism& phi1) {
    if (!(phi2.alphabet() == phi1.alphabet())) {
        throw InvalidInput("cannot compose morphisms over different alphabets");
    }
    const auto& e2 = phi2.entries();
    std::vector<Morphism::Entry> out;
    for (const auto& [x, y] : phi1.entries()) {
        if (const Morphism::Entry* e = phi2.entry_for(y)) {
            // y = p2 s
            out.emplace_back(x, e->second + y.drop(e->first.size()));
            continue;
        }
        // p2 = y t: all such p2 follow y contiguously.
        auto it = std::lower_bound(e2.begin(), e2.end(), y,
                                   [](const Morphism::Entry& e, const Word& v) { return e.first < v; });
        for (; it != e2.end() && it->first.starts_with(y); ++it)
            out.emplace_back(x + it->first.drop(y.size()), it->second);
    }
    if (!std::is_sorted(out.begin(), out.end())) std::sort(out.begin(), out.end());
    return Morphism(Morphism::Trusted{}, phi1.alphabet(), std::move(out));
}

Morphism multiply(const Morphism& phi2, const Morphism& phi1) {
    return maximal_extension(compose(phi2, phi1));
}

bool equal_in_M(const Morphism& phi, const Morphism& psi) {
    return maximal_extension(phi) == maximal_extension(psi);
}

PrefixCode image_code(const Morphism& phi) {
    return PrefixCode(PrefixCode::Trusted{}, phi.alphabet(), minimal_elements(phi.image_set()));
}

PrefixCode inverse_image_of_code(const Morphism& phi, const PrefixCode& z) {
    const auto& zw = z.words();
    std::vector<Word> out;
    for (const auto& [x, y] : phi.entries()) {
        auto it = std::lower_bound(zw.begin(), zw.end(), y);
        for (; it != zw.end() && it->starts_with(y); ++it) out.push_back(x + it->drop(y.size()));
    }
    return PrefixCode(phi.alphabet(), std::move(out));
}

bool is_normal(const Morphism& phi) {
    std::vector<Word> s = phi.image_set();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].starts_with(s[i - 1])) return false;
    return true;
}

Morphism normalize(const Morphism& phi) {
    const int k = phi.alphabet().k();
    const std::vector<Word> s = phi.image_set();
    std::vector<Morphism::Entry> out;
    for (const auto& [p, y] : phi.entries()) {
        auto first = std::lower_bound(s.begin(), s.end(), y);
        auto last = first;
        while (last != s.end() && last->starts_with(y)) ++last;
        if (last - first == 1) {
            out.emplace_back(p, y);  // the tree is the single vertex y
            continue;
        }
        // Vertices of T(y, Z): prefixes of Z lying at or below y.
        std::set<Word> vertices;
        for (auto it = first; it != last; ++it)
            for (std::size_t n = y.size(); n <= it->size(); ++n) vertices.insert(it->prefix(n));
        std::vector<Word> leaves;
        for (const Word& v : vertices) {
            bool internal = false;
            for (int a = 0; a < k && !internal; ++a) internal = vertices.count(v.with(a)) > 0;
            if (!internal) {
                leaves.push_back(v);
                continue;
            }
            for (int a = 0; a < k; ++a)
                if (!vertices.count(v.with(a))) leaves.push_back(v.with(a));
        }
        for (const Word& leaf : leaves) {
            Word w = leaf.drop(y.size());
            out.emplace_back(p + w, leaf);
        }
    }
    std::sort(out.begin(), out.end());
    return Morphism(Morphism::Trusted{}, phi.alphabet(), std::move(out));
}

MorphismClass classify(const Morphism& phi) {
    MorphismClass c;
    Morphism m = maximal_extension(phi);
    if (m.is_zero()) {
        c.injective = true;
        return c;
    }
    std::vector<Word> images = m.image_set();
    c.injective = images.size() == m.size() && is_normal(m);
    c.total = is_maximal(m.domain_code());
    c.surjective = is_maximal(image_code(m));
    c.unit = c.injective && c.total && c.surjective;
    return c;
}

Morphism invert(const Morphism& phi) {
    if (!classify(phi).injective) {
        throw NotInjective("cannot invert " + format_morphism(phi) + ": it is not injective");
    }
    std::vector<Morphism::Entry> swapped;
    swapped.reserve(phi.size());
    for (const auto& [x, y] : phi.entries()) swapped.emplace_back(y, x);
    return maximal_extension(Morphism(phi.alphabet(), std::move(swapped)));
}

std::string format_morphism(const Morphism& phi) {
    std::string out = "{";
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i) out += ',';
        out += format_pair(phi.entries()[i]);
    }
    return out + "}";
}

std::string to_json(const Morphism& phi) {
    nlohmann::ordered_json j;
    j["k"] = phi.alphabet().k();
    j["table"] = nlohmann::ordered_json::array();
    for (const auto& [x, y] : phi.entries())
        j["table"].push_back({format_word_plain(x), format_word_plain(y)});
    return j.dump();
}

namespace {

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

Morphism morphism_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed table JSON", line, column);
    }
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() || !j.contains("table") ||
        !j["table"].is_array()) {
        throw InvalidInput(R"(a table file looks like {"k":2,"table":[["0","1"],["1","0"]]})");
    }
    Alphabet alphabet(j["k"].get<int>());
    std::vector<Morphism::Entry> entries;
    for (const auto& pair : j["table"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            throw InvalidInput("each table entry must be a pair of strings, got " + pair.dump());
        }
        // In files the empty word is "", so "()" is not accepted here.
        auto word = [&](const std::string& s) {
            if (s == "()") throw InvalidInput("use \"\" for the empty word in table files");
            return parse_word(s, alphabet);
        };
        entries.emplace_back(word(pair[0].get<std::string>()), word(pair[1].get<std::string>()));
    }
    return Morphism(alphabet, std::move(entries));
}

Morphism morphism_from_json(std::string_view text, const Alphabet& expected) {
    Morphism m = morphism_from_json(text);
    if (!(m.alphabet() == expected)) {
        throw InvalidInput("table is over k = " + std::to_string(m.alphabet().k()) +
                           " but k = " + std::to_string(expected.k()) + " was requested");
    }
    return m;
}

}  // namespace thmon
