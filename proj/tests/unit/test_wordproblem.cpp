#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "thmon/errors.hpp"
#include "thmon/wordproblem.hpp"

using namespace thmon;

namespace {

const Alphabet k2(2), k3(3);

Morphism m(const oracle::Table& t, int k = 2) { return oracle::morphism(k, t); }
Morphism gen(Generator g, const Alphabet& a = k2) { return generator_table(g, a); }

std::set<std::string> language(const AcyclicDfa& dfa) {
    std::set<std::string> out;
    for (const auto& w : enumerate(dfa, dfa.depth())) out.insert(oracle::text(w));
    return out;
}

std::set<std::string> preimage(const std::vector<oracle::Table>& seq, const std::set<std::string>& target, int k,
                               std::size_t bound) {
    std::set<std::string> out;
    for (const auto& w : oracle::words_up_to(k, bound)) {
        auto y = oracle::apply_seq(seq, w);
        if (y && target.count(*y)) out.insert(w);
    }
    return out;
}

// The tables of the counter-example to the image code formula for non-normal
// left factors.
std::pair<Morphism, Morphism> counter_example(int n) {
    oracle::Table p1{{"01", "00"}, {"00", "01"}, {"10", "1011"}, {"11", "1100"}};
    oracle::Table p2{{"10", "000"}, {"11", "001"}};
    for (const auto& u : oracle::words_of_length(2, n - 1)) {
        p2.emplace_back("00" + u + "0", "000" + u + "1");
        p2.emplace_back("01" + u + "0", "001" + u + "1");
    }
    return {m(p2), m(p1)};
}

}  // namespace

TEST(Dfa, ForWord) {
    AcyclicDfa e = dfa_for_word(Word{}, k2);
    EXPECT_EQ(e.size(), 1);
    EXPECT_EQ(e.start(), e.accept());
    AcyclicDfa d = dfa_for_word(oracle::word("01"), k2);
    EXPECT_EQ(d.size(), 3);
    EXPECT_EQ(language(d), (std::set<std::string>{"01"}));
    EXPECT_THROW(enumerate(d, 1), InvalidInput);
}

TEST(Dfa, ValidationRejectsCyclesAndAcceptEdges) {
    EXPECT_THROW(AcyclicDfa(k2, 2, 0, 1, {{0, 0, 1}, {1, 0, 0}}), InvalidInput);
    EXPECT_THROW(AcyclicDfa(k2, 2, 0, 1, {{0, 0, 0}}), InvalidInput);
    EXPECT_THROW(AcyclicDfa(k2, 2, 0, 1, {{0, 2, 1}}), InvalidInput);
    AcyclicDfa two(k2, 2, 0, 1, {{0, 0, 1}, {0, 1, 1}});
    EXPECT_EQ(language(two), (std::set<std::string>{"0", "1"}));
}

TEST(Dfa, JsonAndDot) {
    AcyclicDfa d = dfa_for_word(oracle::word("10"), k2);
    std::string j = dfa_to_json(d);
    EXPECT_EQ(dfa_from_json(j, k2), d);
    EXPECT_EQ(dfa_to_json(dfa_from_json(j, k2)), j);
    EXPECT_EQ(dfa_to_json(AcyclicDfa::empty(k2)), R"({"states":0,"start":null,"accept":null,"edges":[]})");
    EXPECT_TRUE(dfa_from_json(dfa_to_json(AcyclicDfa::empty(k2)), k2).is_empty());
    std::string dot = dfa_to_dot(d);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}

TEST(InverseImageDfa, Examples) {
    AcyclicDfa a = inverse_image_dfa(gen(Generator::M1), dfa_for_word(oracle::word("0"), k2));
    EXPECT_EQ(language(a), (std::set<std::string>{"0", "1"}));
    EXPECT_EQ(a.size(), 2);
    AcyclicDfa b = inverse_image_dfa(gen(Generator::Not), dfa_for_word(oracle::word("01"), k2));
    EXPECT_EQ(language(b), (std::set<std::string>{"11"}));
    AcyclicDfa c = inverse_image_dfa(gen(Generator::ZtoZZ), dfa_for_word(oracle::word("1"), k2));
    EXPECT_TRUE(c.is_empty());
}

TEST(InverseImageDfa, PreconditionsAreChecked) {
    AcyclicDfa d = dfa_for_word(oracle::word("0"), k2);
    EXPECT_THROW(inverse_image_dfa(m({{"0", "0"}, {"1", "00"}}), d), PreconditionViolation);
    EXPECT_THROW(inverse_image_dfa(Morphism::one(k2), d), PreconditionViolation);
    EXPECT_THROW(inverse_image_dfa(m({{"0", ""}}), d), PreconditionViolation);
}

TEST(InverseImageDfa, LanguageAndSizeBound) {
    std::mt19937 rng(31);
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 2;
        Morphism phi = normalize(m(oracle::random_table(rng, k, 3), k));
        if (phi.is_zero() || phi.domain_code().is_epsilon() || image_code(phi).is_epsilon()) continue;
        std::string r = oracle::random_word(rng, k, 4);
        AcyclicDfa target = dfa_for_word(oracle::word(r), Alphabet(k));
        std::size_t raw = 0;
        AcyclicDfa inv = inverse_image_dfa(phi, target, &raw);
        EXPECT_LT(raw, target.size() + phi.domain_code().total_length());
        EXPECT_LE(static_cast<std::size_t>(inv.size()), raw);
        std::size_t bound = phi.domain_code().max_length() + r.size();
        auto expect = preimage({oracle::table(phi)}, {r}, k, bound);
        EXPECT_EQ(language(inv), expect);
        EXPECT_TRUE(oracle::is_prefix_code({expect.begin(), expect.end()}));
    }
}

TEST(IteratedInverseImage, Examples) {
    AcyclicDfa d = iterated_inverse_image_dfa({gen(Generator::M1), gen(Generator::M1)},
                                              dfa_for_word(oracle::word("0"), k2));
    EXPECT_EQ(language(d), (std::set<std::string>{"0", "1"}));
    // The exponential family: 2^n accepted words, O(n) states.
    for (int n = 2; n <= 12; ++n) {
        auto seq = resolve_for_poly(exponential_family_word(n), k2, 8);
        AcyclicDfa a = iterated_inverse_image_dfa(seq, dfa_for_word(oracle::word("0"), k2));
        EXPECT_EQ(enumerate(a, a.depth()).size(), std::size_t{1} << n);
        EXPECT_LE(a.size(), n + 1);
    }
}

TEST(DfaEquivalent, Examples) {
    AcyclicDfa a = dfa_for_word(oracle::word("01"), k2);
    EXPECT_TRUE(dfa_equivalent(a, a));
    EXPECT_FALSE(dfa_equivalent(a, dfa_for_word(oracle::word("10"), k2)));
    AcyclicDfa two(k2, 2, 0, 1, {{0, 0, 1}, {0, 1, 1}});
    AcyclicDfa three(k2, 3, 0, 2, {{0, 0, 2}, {0, 1, 1}, {1, 0, 2}});
    AcyclicDfa other(k2, 3, 1, 2, {{1, 0, 2}, {1, 1, 2}, {0, 0, 2}});
    EXPECT_TRUE(dfa_equivalent(two, other));
    EXPECT_FALSE(dfa_equivalent(two, three));
    EXPECT_TRUE(dfa_equivalent(AcyclicDfa::empty(k2), AcyclicDfa::empty(k2)));
    EXPECT_FALSE(dfa_equivalent(AcyclicDfa::empty(k2), two));
}

TEST(ImageCodes, Examples) {
    Morphism m2p = m({{"0", "0"}, {"1", "01"}});
    EXPECT_EQ(format_code(imc_of_genword({gen(Generator::M1), m2p})), "{0}");
    EXPECT_EQ(imc_of_genword({gen(Generator::S01_1)}), image_code(gen(Generator::S01_1)));
    EXPECT_TRUE(imc_of_genword({gen(Generator::ZtoZZ), gen(Generator::Not), gen(Generator::ZZtoZ)}).empty());
    std::vector<std::string> cover;
    for (const auto& w : covering_image_set({gen(Generator::M1), m2p})) cover.push_back(oracle::text(w));
    EXPECT_EQ(cover, (std::vector<std::string>{"0", "01"}));
}

TEST(ImageCodes, AgreeWithMaterializedProduct) {
    std::mt19937 rng(32);
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 2;
        std::vector<Morphism> seq;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) seq.push_back(m(oracle::random_table(rng, k, 3, 8), k));
        Morphism raw = seq[0];
        for (int i = 1; i < n; ++i) raw = compose(seq[i], raw);
        EXPECT_EQ(imc_of_genword(seq), image_code(raw));
        auto cover = covering_image_set(seq);
        for (const auto& y : raw.image_set()) EXPECT_TRUE(std::binary_search(cover.begin(), cover.end(), y));
    }
}

TEST(ImageCodes, CounterExampleGrowsWithN) {
    // 2 + 6 * 2^(n-3) words for n >= 3; at n = 2 the two families overlap.
    auto [p2, p1] = counter_example(3);
    EXPECT_EQ(image_code(compose(p2, p1)).size(), 8u);
    EXPECT_EQ(imc_of_genword({p1, p2}).size(), 8u);
    EXPECT_EQ(image_code(compose(counter_example(4).first, counter_example(4).second)).size(), 14u);
    EXPECT_EQ(image_code(p1).size() + image_code(p2).size(), 6u);
}

TEST(WordProblem, Examples) {
    EXPECT_TRUE(word_problem_poly(parse_genword("Not Not"), parse_genword(""), k2));
    EXPECT_TRUE(word_problem_poly(parse_genword("M1 M1"), parse_genword("M1"), k2));
    EXPECT_FALSE(word_problem_poly(parse_genword("M1"), parse_genword("M2"), k2));
    EXPECT_TRUE(word_problem_poly(exponential_family_word(14), exponential_family_word(14), k2));
    EXPECT_TRUE(word_problem_bruteforce(parse_genword(""), parse_genword(""), k2));
}

// The two sides differ only by a domain restriction that is essential; the
// image-ideal check alone accepts this pair but the preimages of the covering
// words differ, so a decider must compare domains too.
TEST(WordProblem, EssentialDomainRestriction) {
    GenWord a = parse_genword("M1 S01_1 S01_1"), b = parse_genword("M1");
    EXPECT_TRUE(word_problem_bruteforce(a, b, k2));
    EXPECT_TRUE(equal_in_M(evaluate(a, k2), evaluate(b, k2)));
    EXPECT_TRUE(word_problem_poly(a, b, k2));
    EXPECT_TRUE(word_problem_poly(b, a, k2));
}

TEST(WordProblem, NotAndTau) {
    GenWord a = parse_genword("Not"), b = parse_genword("tau(1,2) Not tau(1,2)");
    bool brute = word_problem_bruteforce(a, b, k2);
    EXPECT_EQ(brute, word_problem_bruteforce(a, b, k2));
    EXPECT_EQ(word_problem_poly(a, b, k2), brute);
    EXPECT_EQ(equal_in_M(evaluate(a, k2), evaluate(b, k2)), brute);
}

TEST(WordProblem, Preconditions) {
    GenWord bad = parse_genword("@{{\"k\":2,\"table\":[[\"0\",\"0\"],[\"1\",\"00\"]]}}");
    EXPECT_THROW(word_problem_poly(bad, parse_genword("M1"), k2), PreconditionViolation);
    EXPECT_THROW(word_problem_poly(parse_genword("tau(1,9)"), parse_genword("M1"), k2), ResourceLimit);
    EXPECT_THROW(word_problem_bruteforce(exponential_family_word(20), parse_genword(""), k2), ResourceLimit);
}

TEST(WordProblem, AgreesWithTablesAndBruteForce) {
    std::mt19937 rng(33);
    const char* names[] = {"Not", "S01_1", "S0_10", "EtoZ", "ZtoE", "ZtoZZ", "ZZtoZ", "M1", "M2", "tau(1,2)", "tau(2,3)"};
    int equal = 0;
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 2;
        Alphabet a(k);
        auto random_word = [&] {
            std::string s;
            int len = static_cast<int>(rng() % 5);
            for (int i = 0; i < len; ++i) s += std::string(names[rng() % 11]) + " ";
            return s;
        };
        std::string s1 = random_word();
        std::string s2 = t % 3 == 0 ? "Not Not " + s1 : (t % 3 == 1 ? s1 + " M1 M1" : random_word());
        GenWord w1 = parse_genword(s1), w2 = parse_genword(s2);
        if (t % 3 == 1) w1 = concat(w1, parse_genword("M1"));
        if (bruteforce_length(w1, a) > 12 || bruteforce_length(w2, a) > 12) continue;
        bool poly = word_problem_poly(w1, w2, a, {8, t % 2 == 0});
        bool brute = word_problem_bruteforce(w1, w2, a, 12);
        bool table = equal_in_M(evaluate(w1, a), evaluate(w2, a));
        EXPECT_EQ(poly, brute) << s1 << " | " << s2 << " k=" << k;
        EXPECT_EQ(table, brute) << s1 << " | " << s2 << " k=" << k;
        equal += brute;
    }
    EXPECT_GT(equal, 50);
}
