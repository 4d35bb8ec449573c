// structure.cpp -- generator words, Green's relations and factorization.
#include "thmon/structure.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "thmon/errors.hpp"

namespace thmon {

namespace {

struct NamedGenerator {
    Generator g;
    const char* name;
};

constexpr NamedGenerator kNames[] = {
    {Generator::Not, "Not"},     {Generator::S01_1, "S01_1"}, {Generator::S0_10, "S0_10"},
    {Generator::EtoZ, "EtoZ"},   {Generator::ZtoE, "ZtoE"},   {Generator::ZtoZZ, "ZtoZZ"},
    {Generator::ZZtoZ, "ZZtoZ"}, {Generator::M1, "M1"},       {Generator::M2, "M2"},
};

Morphism table_of(const Alphabet& alphabet, std::initializer_list<std::pair<const char*, const char*>> rows) {
    std::vector<Morphism::Entry> entries;
    for (const auto& [x, y] : rows) entries.emplace_back(parse_word(x, alphabet), parse_word(y, alphabet));
    return Morphism(alphabet, std::move(entries));
}

bool is_one(const Morphism& m) { return equal_in_M(m, Morphism::one(m.alphabet())); }

}  // namespace

std::string generator_name(Generator g) {
    for (const auto& n : kNames)
        if (n.g == g) return n.name;
    throw InternalError("unnamed generator");
}

std::optional<Generator> generator_from_name(std::string_view name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.g;
    return std::nullopt;
}

Morphism generator_table(Generator g, const Alphabet& alphabet) {
    switch (g) {
        case Generator::Not:
            return table_of(alphabet, {{"0", "1"}, {"1", "0"}});
        case Generator::S01_1:
            return table_of(alphabet, {{"00", "00"}, {"01", "1"}, {"1", "01"}});
        case Generator::S0_10:
            return table_of(alphabet, {{"0", "10"}, {"10", "0"}, {"11", "11"}});
        case Generator::EtoZ: {
            // (() -> 0) restricted once: a -> 0a for every letter a.
            std::vector<Morphism::Entry> e;
            for (int a = 0; a < alphabet.k(); ++a) e.emplace_back(Word{a}, Word{0, a});
            return Morphism(alphabet, std::move(e));
        }
        case Generator::ZtoE: {
            std::vector<Morphism::Entry> e;
            for (int a = 0; a < alphabet.k(); ++a) e.emplace_back(Word{0, a}, Word{a});
            return Morphism(alphabet, std::move(e));
        }
        case Generator::ZtoZZ:
            return table_of(alphabet, {{"0", "00"}});
        case Generator::ZZtoZ:
            return table_of(alphabet, {{"00", "0"}});
        case Generator::M1:
            return table_of(alphabet, {{"0", "0"}, {"1", "0"}});
        case Generator::M2:
            return table_of(alphabet, {{"00", "00"}, {"01", "01"}, {"1", "01"}});
    }
    throw InternalError("unknown generator");
}

Morphism tau(int i, int j, const Alphabet& alphabet) {
    if (i < 1 || j <= i) throw InvalidInput("tau(i,j) needs 0 < i < j");
    std::vector<Morphism::Entry> entries;
    for (const Word& w : all_words(alphabet, static_cast<std::size_t>(j))) {
        std::string s = w.raw();
        std::swap(s[i - 1], s[j - 1]);
        entries.emplace_back(w, Word(std::move(s)));
    }
    return Morphism(Morphism::Trusted{}, alphabet, std::move(entries));
}

Morphism token_table(const GeneratorToken& token, const Alphabet& alphabet) {
    if (const auto* g = std::get_if<Generator>(&token)) return generator_table(*g, alphabet);
    if (const auto* t = std::get_if<TauToken>(&token)) return tau(t->i, t->j, alphabet);
    const Morphism& m = std::get<TableToken>(token).table;
    if (!(m.alphabet() == alphabet)) {
        throw InvalidInput("inline table is over k = " + std::to_string(m.alphabet().k()) +
                           ", expected k = " + std::to_string(alphabet.k()));
    }
    return m;
}

std::vector<std::pair<std::string, Morphism>> standard_generators(const Alphabet& alphabet) {
    if (alphabet.k() != 2) {
        throw UnsupportedAlphabet(
            "the explicit generating set is only available for k = 2; for larger k a generating "
            "set of G_{k,1} must be supplied as tables");
    }
    std::vector<std::pair<std::string, Morphism>> out;
    for (Generator g : {Generator::Not, Generator::S01_1, Generator::S0_10}) {
        out.emplace_back(generator_name(g), generator_table(g, alphabet));
    }
    out.emplace_back("tau(1,2)", tau(1, 2, alphabet));
    for (Generator g : {Generator::EtoZ, Generator::ZtoE, Generator::ZtoZZ, Generator::ZZtoZ,
                        Generator::M1, Generator::M2}) {
        out.emplace_back(generator_name(g), generator_table(g, alphabet));
    }
    return out;
}

// --- generator words --------------------------------------------------------

std::string format_token(const GeneratorToken& token) {
    if (const auto* g = std::get_if<Generator>(&token)) return generator_name(*g);
    if (const auto* t = std::get_if<TauToken>(&token))
        return "tau(" + std::to_string(t->i) + "," + std::to_string(t->j) + ")";
    return "@{" + to_json(std::get<TableToken>(token).table) + "}";
}

std::string format_genword(const GenWord& w) {
    std::string out;
    for (const auto& t : w.tokens) {
        if (!out.empty()) out += ' ';
        out += format_token(t);
    }
    return out;
}

namespace {

class GenWordParser {
public:
    explicit GenWordParser(std::string_view text) : text_(text) {}

    GenWord parse() {
        GenWord w;
        skip_space();
        while (pos_ < text_.size()) {
            w.tokens.push_back(token());
            if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
                fail("expected whitespace between tokens");
            skip_space();
        }
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(what, line, column);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    GeneratorToken token() {
        if (text_[pos_] == '@') return inline_table();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name.empty()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        if (name == "tau") return tau_token(start);
        if (auto g = generator_from_name(name)) return *g;
        fail_at("unknown generator '" + std::string(name) + "'", start);
    }

    int number() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 6) fail("expected a number");
        int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
        skip_space();
        return v;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    GeneratorToken tau_token(std::size_t start) {
        expect('(');
        int i = number();
        expect(',');
        int j = number();
        expect(')');
        if (i < 1 || j <= i) fail_at("tau(i,j) needs 0 < i < j", start);
        return TauToken{i, j};
    }

    GeneratorToken inline_table() {
        std::size_t start = pos_;
        ++pos_;
        expect('{');
        std::string json;
        if (pos_ < text_.size() && text_[pos_] == '{') {
            // Literal JSON object: match braces, ignoring those inside strings.
            std::size_t begin = pos_;
            int depth = 0;
            bool in_string = false;
            for (; pos_ < text_.size(); ++pos_) {
                char c = text_[pos_];
                if (in_string) {
                    if (c == '\\') ++pos_;
                    else if (c == '"') in_string = false;
                } else if (c == '"') {
                    in_string = true;
                } else if (c == '{') {
                    ++depth;
                } else if (c == '}' && --depth == 0) {
                    break;
                }
            }
            if (pos_ >= text_.size()) fail_at("unterminated inline table", start);
            ++pos_;
            json = std::string(text_.substr(begin, pos_ - begin));
        } else {
            std::size_t close = text_.find('}', pos_);
            if (close == std::string_view::npos) fail_at("unterminated table reference", start);
            std::string path(text_.substr(pos_, close - pos_));
            pos_ = close;
            std::ifstream in(path);
            if (!in) fail_at("cannot open table file '" + path + "'", start);
            std::stringstream ss;
            ss << in.rdbuf();
            json = ss.str();
        }
        expect('}');
        try {
            return TableToken{morphism_from_json(json)};
        } catch (const ParseError& e) {
            fail_at(std::string("inline table: ") + e.what(), start);
        } catch (const InvalidInput& e) {
            fail_at(std::string("inline table: ") + e.what(), start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GenWord parse_genword(std::string_view text) { return GenWordParser(text).parse(); }

GenWord concat(const GenWord& left, const GenWord& right) {
    GenWord w = left;
    w.tokens.insert(w.tokens.end(), right.tokens.begin(), right.tokens.end());
    return w;
}

Morphism evaluate(const GenWord& w, const Alphabet& alphabet, std::size_t row_cap) {
    Morphism acc = Morphism::one(alphabet);
    std::map<std::string, Morphism> cache;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        std::string key = format_token(*it);
        auto found = cache.find(key);
        if (found == cache.end()) found = cache.emplace(key, token_table(*it, alphabet)).first;
        Morphism raw = compose(found->second, acc);
        if (row_cap && raw.size() > row_cap) {
            throw ResourceLimit("materialized table would exceed " + std::to_string(row_cap) +
                                " rows");
        }
        acc = maximal_extension(raw);
    }
    return acc;
}

GenWord exponential_family_word(int n) {
    if (n < 1) throw InvalidInput("the exponential family starts at n = 1");
    GenWord w;
    for (int i = 1; i < n; ++i) {
        w.tokens.emplace_back(Generator::M1);
        w.tokens.emplace_back(Generator::ZtoE);
    }
    w.tokens.emplace_back(Generator::M1);
    return w;
}

// --- Green's relations ------------------------------------------------------

DClassIndex d_class_index(const Morphism& phi) {
    if (maximal_extension(phi).is_zero()) return {true, 0};
    const int m = phi.alphabet().k() - 1;
    int r = static_cast<int>(image_code(phi).size() % static_cast<std::size_t>(m));
    return {false, r == 0 ? m : r};
}

std::string format_d_class(const DClassIndex& d) {
    return d.zero ? std::string("Zero") : std::to_string(d.residue);
}

bool verify_link(const GreenLink& l) {
    if (l.relation == Green::R) {
        return equal_in_M(multiply(l.from, l.forward), l.to) &&
               equal_in_M(multiply(l.to, l.backward), l.from);
    }
    return equal_in_M(multiply(l.forward, l.from), l.to) &&
           equal_in_M(multiply(l.backward, l.to), l.from);
}

namespace {

// phi R id_Q with Q = imC of the normal form of phi.
GreenLink link_to_image_identity(const Morphism& phi) {
    Morphism n = normalize(maximal_extension(phi));
    std::map<Word, Word> representative;  // q -> least p with n(p) = q
    for (const auto& [p, q] : n.entries()) representative.emplace(q, p);
    std::vector<Morphism::Entry> alpha;
    std::vector<Word> q_words;
    for (const auto& [q, p] : representative) {
        alpha.emplace_back(q, p);
        q_words.push_back(q);
    }
    PrefixCode q(phi.alphabet(), q_words);
    return GreenLink{Green::R, phi, Morphism::identity_on(q), Morphism(phi.alphabet(), alpha), phi};
}

GreenLink reversed(const GreenLink& l) { return GreenLink{l.relation, l.to, l.from, l.backward, l.forward}; }

}  // namespace

std::optional<std::vector<GreenLink>> d_witness(const Morphism& phi, const Morphism& psi) {
    const Alphabet& alphabet = phi.alphabet();
    std::vector<GreenLink> chain;
    if (equal_in_M(phi, psi)) {
        chain.push_back({Green::R, phi, psi, Morphism::one(alphabet), Morphism::one(alphabet)});
    } else {
        DClassIndex a = d_class_index(phi), b = d_class_index(psi);
        if (a.zero || b.zero || !(a == b)) return std::nullopt;

        GreenLink first = link_to_image_identity(phi);
        GreenLink last = reversed(link_to_image_identity(psi));
        // Bring both identities to equal size by restriction steps.
        PrefixCode s = first.to.domain_code();
        PrefixCode t = last.from.domain_code();
        while (s.size() < t.size()) s = restriction_step(s, s.words().front());
        while (t.size() < s.size()) t = restriction_step(t, t.words().front());
        if (s.size() != t.size()) throw InternalError("image codes are not congruent mod k-1");
        std::vector<Morphism::Entry> bij, inv;
        for (std::size_t i = 0; i < s.size(); ++i) {
            bij.emplace_back(s.words()[i], t.words()[i]);
            inv.emplace_back(t.words()[i], s.words()[i]);
        }
        Morphism alpha(alphabet, bij), alpha_inv(alphabet, inv);
        chain.push_back(first);
        chain.push_back({Green::L, first.to, alpha, alpha, alpha_inv});
        chain.push_back({Green::R, alpha, last.from, alpha_inv, alpha});
        chain.push_back(last);
    }
    for (const GreenLink& l : chain)
        if (!verify_link(l)) throw InternalError("a Green's relation witness failed verification");
    return chain;
}

std::pair<Morphism, Morphism> j_witness(const Morphism& phi) {
    Morphism m = maximal_extension(phi);
    if (m.is_zero()) throw PreconditionViolation("the zero element has no J-witness");
    const auto& [x0, y0] = m.entries().front();
    Morphism alpha(phi.alphabet(), {{Word(), x0}});
    Morphism beta(phi.alphabet(), {{y0, Word()}});
    if (!is_one(multiply(beta, multiply(phi, alpha))))
        throw InternalError("J-witness failed verification");
    return {beta, alpha};
}

// --- factorization ----------------------------------------------------------

namespace {

class Factorizer {
public:
    explicit Factorizer(const Alphabet& alphabet) : alphabet_(alphabet), k_(alphabet.k()) {}

    Factorization run(const Morphism& phi) {
        Morphism m = maximal_extension(phi);
        Factorization out;
        if (m.is_zero()) {
            out.word = zero_word();
        } else {
            Morphism n = normalize(m);
            if (n.image_set().size() == n.size())
                out.word = injective(n);
            else
                out.word = non_injective(n);
        }
        out.pieces = std::move(pieces_);
        return out;
    }

private:
    using Tokens = std::vector<GeneratorToken>;

    static void append(Tokens& out, const Tokens& more) { out.insert(out.end(), more.begin(), more.end()); }

    void append_table(Tokens& out, const Morphism& table) {
        if (!is_one(table)) out.emplace_back(TableToken{table});
    }

    // id_{0} o Not o id_{0} o Not is the zero element for every k.
    GenWord zero_word() {
        GenWord w;
        for (int r = 0; r < 2; ++r) {
            w.tokens.emplace_back(Generator::ZZtoZ);
            w.tokens.emplace_back(Generator::ZtoZZ);
            w.tokens.emplace_back(Generator::Not);
        }
        return w;
    }

    // Bijection between two equal-size lists of words.
    Morphism pairing(const std::vector<Word>& from, const std::vector<Word>& to) {
        std::vector<Morphism::Entry> e;
        for (std::size_t i = 0; i < from.size(); ++i) e.emplace_back(from[i], to[i]);
        return Morphism(alphabet_, std::move(e));
    }

    // id on {a_1 a_1, ..., a_1 a_i}.
    Tokens partial_identity_generator(int i) {
        if (i == 1) return {Generator::ZtoZZ, Generator::ZZtoZ};
        std::vector<Word> s;
        for (int a = 0; a < i; ++a) s.push_back(Word{0, a});
        return {TableToken{Morphism::identity_on(PrefixCode(alphabet_, s))}};
    }

    // Tokens for id_S with S = a_1^j {a_1, ..., a_i}, 1 <= i < k.
    Tokens partial_identity(const Morphism& id) {
        const auto& e = id.entries();
        const std::size_t depth = e.front().first.size();
        const int i = static_cast<int>(e.size());
        bool shape = depth >= 1 && i < k_;
        for (int a = 0; a < i && shape; ++a) {
            Word expected = Word::repeat(0, depth - 1).with(a);
            shape = e[a].first == expected && e[a].second == expected;
        }
        if (!shape) throw InternalError("unexpected partial identity " + format_morphism(id));
        const std::size_t j = depth - 1;
        Tokens out;
        if (j == 0) {
            out.emplace_back(Generator::ZtoE);
            append(out, partial_identity_generator(i));
            out.emplace_back(Generator::EtoZ);
            return out;
        }
        for (std::size_t r = 1; r < j; ++r) out.emplace_back(Generator::ZtoZZ);
        append(out, partial_identity_generator(i));
        for (std::size_t r = 1; r < j; ++r) out.emplace_back(Generator::ZZtoZ);
        return out;
    }

    // Canonical maximal code with 1 + (k-1) n elements.
    PrefixCode comb(std::size_t n) {
        return n == 0 ? PrefixCode::epsilon(alphabet_) : make_q_code(k_, static_cast<int>(n) - 1, alphabet_);
    }
    std::size_t comb_index(std::size_t size) const { return (size - 1) / static_cast<std::size_t>(k_ - 1); }

    static std::vector<Word> difference(const std::vector<Word>& all, const std::vector<Word>& remove) {
        std::vector<Word> out;
        std::set_difference(all.begin(), all.end(), remove.begin(), remove.end(), std::back_inserter(out));
        return out;
    }

    Tokens invert_tokens(const Tokens& tokens) {
        Tokens out;
        for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
            if (const auto* g = std::get_if<Generator>(&*it)) {
                switch (*g) {
                    case Generator::EtoZ: out.emplace_back(Generator::ZtoE); break;
                    case Generator::ZtoE: out.emplace_back(Generator::EtoZ); break;
                    case Generator::ZtoZZ: out.emplace_back(Generator::ZZtoZ); break;
                    case Generator::ZZtoZ: out.emplace_back(Generator::ZtoZZ); break;
                    case Generator::M1:
                    case Generator::M2: throw InternalError("non-injective token in an inverse word");
                    default: out.push_back(*it);
                }
            } else if (const auto* t = std::get_if<TableToken>(&*it)) {
                out.emplace_back(TableToken{invert(t->table)});
            } else {
                out.push_back(*it);
            }
        }
        return out;
    }

    // Bijection P -> Q between prefix codes (an element of Inv_{k,1}).
    Tokens injective_tokens(const Morphism& phi) {
        Morphism m = maximal_extension(phi);
        if (is_one(m)) return {};
        PrefixCode p = m.domain_code();
        PrefixCode q = image_code(m);
        const bool p_max = is_maximal(p), q_max = is_maximal(q);
        Tokens out;
        if (p_max && q_max) {
            out.emplace_back(TableToken{m});
            return out;
        }
        if (!p_max && q_max) return invert_tokens(injective_tokens(invert(m)));

        std::vector<Word> p_words = p.words();
        std::vector<Word> q_words;
        for (const Word& x : p_words) q_words.push_back(*m.apply(x));

        if (!p_max) {
            // Both codes non-maximal: conjugate into a partial identity on a comb.
            auto [p_full, q_full] = equalize_sizes(p, q);
            PrefixCode c = comb(comb_index(p_full.size()));
            const std::vector<Word>& cw = c.words();
            std::vector<Word> g1_to = p_words;
            append_words(g1_to, difference(p_full.words(), p.words()));
            Morphism g1 = pairing(cw, g1_to);
            std::vector<Word> q_sorted = q.words();
            std::vector<Word> g2_from = q_words;
            append_words(g2_from, difference(q_full.words(), q_sorted));
            Morphism g2 = pairing(g2_from, cw);
            Morphism psi = maximal_extension(compose(g2, compose(m, g1)));
            append_table(out, invert(g2));
            append(out, partial_identity(psi));
            append_table(out, invert(g1));
            return out;
        }

        // P maximal, Q not: conjugate into (() -> a_1^d).
        PrefixCode q_full = saturate(q);
        const std::size_t n = comb_index(p.size());
        const std::size_t n2 = comb_index(q_full.size());
        PrefixCode c = comb(n);
        PrefixCode c2 = comb(n2);
        Morphism g1 = pairing(c.words(), p_words);
        std::vector<Word> g2_from = q_words;
        append_words(g2_from, difference(q_full.words(), q.words()));
        std::vector<Word> g2_to(c2.words().begin(), c2.words().begin() + c.size());
        append_words(g2_to, std::vector<Word>(c2.words().begin() + c.size(), c2.words().end()));
        Morphism g2 = pairing(g2_from, g2_to);
        Morphism psi = maximal_extension(compose(g2, compose(m, g1)));
        const std::size_t d = n2 - n;
        Morphism expected(alphabet_, {{Word(), Word::repeat(0, d)}});
        if (!(psi == expected)) throw InternalError("unexpected conjugate " + format_morphism(psi));
        append_table(out, invert(g2));
        for (std::size_t r = 1; r < d; ++r) out.emplace_back(Generator::ZtoZZ);
        out.emplace_back(Generator::EtoZ);
        append_table(out, invert(g1));
        return out;
    }

    static void append_words(std::vector<Word>& out, const std::vector<Word>& more) {
        out.insert(out.end(), more.begin(), more.end());
    }

    GenWord injective(const Morphism& phi) {
        GenWord w;
        w.tokens = injective_tokens(phi);
        return w;
    }

    // The collapse generator equal to psi2 in M.
    GeneratorToken collapse_token(const Morphism& psi2, std::size_t n) {
        if (k_ == 2) {
            Generator g = n == 2 ? Generator::M1 : Generator::M2;
            if (!equal_in_M(generator_table(g, alphabet_), psi2))
                throw InternalError("collapse factor does not match " + generator_name(g));
            return g;
        }
        return TableToken{normalize(maximal_extension(psi2))};
    }

    // A normal table P -> Q with |P| = |Q| + 1.
    Tokens deficiency_one(const Morphism& chi) {
        std::map<Word, std::vector<Word>> preimages;
        for (const auto& [p, q] : chi.entries()) preimages[q].push_back(p);
        std::vector<Word> collapsed, rest;
        for (const auto& [q, ps] : preimages) {
            if (ps.size() == 2) collapsed = ps;
        }
        for (const auto& [p, q] : chi.entries())
            if (p != collapsed[0] && p != collapsed[1]) rest.push_back(p);
        std::vector<Word> p_order = rest;
        p_order.push_back(collapsed[0]);
        p_order.push_back(collapsed[1]);

        const std::size_t n = p_order.size();
        const int j = static_cast<int>((n - 2) / static_cast<std::size_t>(k_ - 1));
        const int i = static_cast<int>(n) - (k_ - 1) * j;
        const std::vector<Word> c = make_q_code(i, j, alphabet_).words();

        Morphism psi1 = pairing(p_order, c);
        std::vector<Morphism::Entry> e2, e3;
        for (std::size_t r = 0; r + 1 < n; ++r) {
            e2.emplace_back(c[r], c[r]);
            e3.emplace_back(c[r], *chi.apply(p_order[r]));
        }
        e2.emplace_back(c[n - 1], c[n - 2]);
        Morphism psi2(alphabet_, e2), psi3(alphabet_, e3);
        pieces_.push_back(psi1);
        pieces_.push_back(psi2);
        pieces_.push_back(psi3);

        Tokens out = injective_tokens(psi3);
        out.push_back(collapse_token(psi2, n));
        append(out, injective_tokens(psi1));
        return out;
    }

    GenWord non_injective(const Morphism& phi) {
        // Split off one collapse at a time: phi = rest o sigma, sigma: x1 -> x2.
        std::vector<Morphism> split;
        Morphism current = phi;
        while (current.size() - current.image_set().size() > 1) {
            std::map<Word, Word> first_preimage;
            Word x1, x2;
            bool found = false;
            for (const auto& [p, q] : current.entries()) {
                auto [it, fresh] = first_preimage.emplace(q, p);
                if (!fresh && (!found || it->second < x1)) {
                    // Smallest domain word with a partner, paired with its least partner.
                    x1 = it->second;
                    x2 = p;
                    found = true;
                }
            }
            std::vector<Morphism::Entry> sigma, rest;
            for (const auto& [p, q] : current.entries()) {
                sigma.emplace_back(p, p == x1 ? x2 : p);
                if (p != x1) rest.emplace_back(p, q);
            }
            split.emplace_back(alphabet_, sigma);
            current = Morphism(alphabet_, rest);
        }
        split.push_back(current);
        for (const Morphism& s : split) pieces_.push_back(s);

        GenWord w;
        for (auto it = split.rbegin(); it != split.rend(); ++it) append(w.tokens, deficiency_one(*it));
        return w;
    }

    Alphabet alphabet_;
    int k_;
    std::vector<Morphism> pieces_;
};

}  // namespace

Factorization factor_with_pieces(const Morphism& phi) { return Factorizer(phi.alphabet()).run(phi); }

GenWord factor(const Morphism& phi) { return factor_with_pieces(phi).word; }

}  // namespace thmon
