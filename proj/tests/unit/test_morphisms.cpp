#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "thmon/errors.hpp"
#include "thmon/morphisms.hpp"

using namespace thmon;

namespace {

const Alphabet k2(2), k3(3);

Morphism m(const oracle::Table& t, int k = 2) { return oracle::morphism(k, t); }
std::string show(const Morphism& phi) { return format_morphism(phi); }

std::string zeros(int n) { return std::string(static_cast<std::size_t>(n), '0'); }

}  // namespace

TEST(Morphism, ValidationNamesTheOffendingPair) {
    try {
        m({{"0", "1"}, {"01", "0"}});
        FAIL() << "expected InvalidInput";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("01"), std::string::npos);
    }
    EXPECT_THROW(m({{"2", "0"}}), InvalidInput);
}

TEST(Apply, Examples) {
    Morphism no = m({{"0", "1"}, {"1", "0"}});
    EXPECT_EQ(oracle::text(*no.apply(oracle::word("011"))), "111");
    EXPECT_FALSE(Morphism::zero(k2).apply(oracle::word("0")));
    Morphism theta = m({{"01", "0"}, {"1", ""}});
    EXPECT_EQ(oracle::text(*theta.apply(oracle::word("10"))), "0");
    EXPECT_FALSE(theta.apply(oracle::word("0")));
}

TEST(MaximalExtension, Examples) {
    EXPECT_EQ(show(maximal_extension(m({{"00", "00"}, {"01", "01"}, {"1", "00"}}))), "{(0,0),(1,00)}");
    EXPECT_EQ(maximal_extension(m({{"0", "0"}, {"1", "1"}})), Morphism::one(k2));
    EXPECT_EQ(show(maximal_extension(m({{"00", "0"}, {"01", "0"}}))), "{(00,0),(01,0)}");
    EXPECT_TRUE(mergeable_parents(m({{"00", "0"}, {"01", "0"}})).empty());
}

TEST(MaximalExtension, IdempotentAndPointwiseEqual) {
    std::mt19937 rng(1);
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 2;
        auto tab = oracle::random_table(rng, k, 4);
        Morphism phi = m(tab, k);
        Morphism e = maximal_extension(phi);
        EXPECT_EQ(maximal_extension(e), e);
        EXPECT_TRUE(mergeable_parents(e).empty());
        EXPECT_TRUE(oracle::same_element(k, tab, oracle::table(e)));
        EXPECT_LE(e.size(), phi.size());
    }
}

TEST(RestrictToIdeal, Examples) {
    EXPECT_EQ(show(restrict_to_ideal(Morphism::one(k2), parse_code("{0}", k2))), "{(0,0)}");
    EXPECT_EQ(show(restrict_to_ideal(m({{"0", "1"}, {"1", "0"}}), parse_code("{01}", k2))), "{(01,11)}");
    EXPECT_TRUE(restrict_to_ideal(m({{"0", "0"}}), parse_code("{1}", k2)).is_zero());
}

TEST(RestrictToIdeal, AgreesWithPointwiseDefinition) {
    std::mt19937 rng(2);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + t % 2;
        auto tab = oracle::random_table(rng, k, 3);
        auto code = oracle::random_code(rng, k, 3, false);
        std::vector<Word> ws;
        for (auto& s : code) ws.push_back(oracle::word(s));
        Morphism r = restrict_to_ideal(m(tab, k), PrefixCode(Alphabet(k), ws));
        auto rt = oracle::table(r);
        for (const auto& w : oracle::words_of_length(k, 6)) {
            bool in = false;
            for (auto& p : code) in = in || oracle::is_prefix(p, w);
            auto expect = in ? oracle::apply(tab, w) : std::nullopt;
            ASSERT_EQ(oracle::apply(rt, w), expect) << show(r);
        }
        // The domain code must be exactly the minimal generators.
        std::set<std::string> dom;
        for (const auto& w : oracle::words_up_to(k, 6)) {
            bool in = false;
            for (auto& p : code) in = in || oracle::is_prefix(p, w);
            if (in && oracle::apply(tab, w)) dom.insert(w);
        }
        EXPECT_EQ(oracle::as_set(r.domain_code()), oracle::minimal(dom));
    }
}

TEST(Multiply, Examples) {
    Morphism g = m({{"0", "0"}, {"1", "0"}});
    Morphism f = m({{"0", "0"}, {"1", "10"}});
    EXPECT_EQ(show(multiply(g, f)), "{(0,0),(1,00)}");
    Morphism no = m({{"0", "1"}, {"1", "0"}});
    EXPECT_EQ(multiply(no, no), Morphism::one(k2));
    for (int n = 2; n <= 6; ++n) {
        Morphism p2 = m({{"0", zeros(n + 1)}, {"1", "0"}});
        Morphism p1 = m({{"0", zeros(n)}});
        EXPECT_EQ(multiply(p2, p1), m({{"0", zeros(2 * n)}}));
    }
    EXPECT_TRUE(multiply(Morphism::zero(k2), no).is_zero());
    EXPECT_TRUE(multiply(no, Morphism::zero(k2)).is_zero());
}

TEST(Multiply, PointwiseComposition) {
    std::mt19937 rng(4);
    for (int t = 0; t < 400; ++t) {
        int k = 2 + t % 2;
        auto a = oracle::random_table(rng, k, 3);
        auto b = oracle::random_table(rng, k, 3);
        Morphism raw = compose(m(a, k), m(b, k));
        Morphism prod = multiply(m(a, k), m(b, k));
        std::size_t n = oracle::max_domain_length(a) + oracle::max_domain_length(b) + 2;
        for (const auto& w : oracle::words_of_length(k, n)) {
            auto expect = oracle::apply_seq({b, a}, w);
            ASSERT_EQ(oracle::apply(oracle::table(prod), w), expect);
            ASSERT_EQ(oracle::apply(oracle::table(raw), w), expect);
        }
        EXPECT_EQ(code_kind(raw.domain_code().words(), Alphabet(k)) != CodeKind::NotACode, true);
    }
}

TEST(Multiply, Associative) {
    std::mt19937 rng(6);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + t % 2;
        Morphism a = m(oracle::random_table(rng, k, 3), k);
        Morphism b = m(oracle::random_table(rng, k, 3), k);
        Morphism c = m(oracle::random_table(rng, k, 3), k);
        EXPECT_TRUE(equal_in_M(multiply(multiply(c, b), a), multiply(c, multiply(b, a))));
    }
}

TEST(EqualInM, Examples) {
    EXPECT_TRUE(equal_in_M(m({{"0", "0"}, {"1", "00"}}), m({{"00", "00"}, {"01", "01"}, {"1", "00"}})));
    EXPECT_FALSE(equal_in_M(Morphism::one(k2), Morphism::zero(k2)));
}

TEST(EqualInM, EssentialRestrictionPreservesTheClass) {
    std::mt19937 rng(8);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + t % 2;
        Morphism phi = m(oracle::random_table(rng, k, 3), k);
        if (phi.is_zero()) continue;
        PrefixCode dom = phi.domain_code();
        PrefixCode finer = restriction_step(dom, dom.words()[rng() % dom.size()]);
        EXPECT_TRUE(equal_in_M(phi, restrict_to_ideal(phi, finer)));
        EXPECT_TRUE(equal_in_M(phi, restrict_to_ideal(phi, saturate(finer))));
    }
}

TEST(EqualInM, AgreesWithPointwiseOracle) {
    std::mt19937 rng(9);
    int equal = 0;
    for (int t = 0; t < 500; ++t) {
        auto a = oracle::random_table(rng, 2, 2, 4);
        oracle::Table b;
        if (t % 2 == 0 || a.empty()) {
            b = oracle::random_table(rng, 2, 2, 4);
        } else {
            // Split one entry into its two children, sometimes spoiling one image.
            b = a;
            auto [x, y] = b[rng() % b.size()];
            b.erase(std::find(b.begin(), b.end(), std::make_pair(x, y)));
            b.emplace_back(x + "0", y + "0");
            b.emplace_back(x + "1", t % 4 == 1 ? y + "1" : y + "0");
        }
        bool expect = oracle::same_element(2, a, b);
        equal += expect;
        EXPECT_EQ(equal_in_M(m(a), m(b)), expect);
    }
    EXPECT_GT(equal, 100);
}

TEST(ImageCode, Examples) {
    EXPECT_EQ(format_code(image_code(m({{"0", "0"}, {"1", "00"}}))), "{0}");
    EXPECT_EQ(format_code(image_code(m({{"01", "0"}, {"1", ""}}))), "{()}");
    EXPECT_TRUE(image_code(Morphism::zero(k2)).empty());
}

TEST(InverseImageOfCode, Examples) {
    Morphism theta = m({{"01", "0"}, {"1", ""}});
    EXPECT_EQ(format_code(inverse_image_of_code(theta, parse_code("{()}", k2))), "{1}");
    PrefixCode z = parse_code("{00,1}", k2);
    EXPECT_EQ(inverse_image_of_code(Morphism::one(k2), z), z);
    EXPECT_EQ(format_code(inverse_image_of_code(m({{"0", "0"}, {"1", "0"}}), parse_code("{0}", k2))), "{0,1}");
}

TEST(InverseImageOfCode, AgreesWithEnumeration) {
    std::mt19937 rng(10);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + t % 2;
        auto tab = oracle::random_table(rng, k, 3);
        auto zc = oracle::random_code(rng, k, 3, false);
        std::vector<Word> ws;
        for (auto& s : zc) ws.push_back(oracle::word(s));
        PrefixCode got = inverse_image_of_code(m(tab, k), PrefixCode(Alphabet(k), ws));
        std::set<std::string> expect;
        std::set<std::string> zs(zc.begin(), zc.end());
        for (const auto& w : oracle::words_up_to(k, 6)) {
            auto y = oracle::apply(tab, w);
            if (y && zs.count(*y)) expect.insert(w);
        }
        EXPECT_EQ(oracle::as_set(got), expect);
        EXPECT_TRUE(oracle::is_prefix_code({expect.begin(), expect.end()}));
    }
}

TEST(Normal, Examples) {
    EXPECT_FALSE(is_normal(m({{"0", "0"}, {"1", "00"}})));
    EXPECT_TRUE(is_normal(Morphism::zero(k2)));
    std::mt19937 rng(12);
    for (int t = 0; t < 100; ++t) EXPECT_TRUE(is_normal(m(oracle::random_injective_table(rng, 2, 3))));
}

TEST(Normalize, Examples) {
    EXPECT_EQ(show(normalize(m({{"0", "0"}, {"1", "00"}}))), "{(00,00),(01,01),(1,00)}");
    Morphism no = m({{"0", "1"}, {"1", "0"}});
    EXPECT_EQ(normalize(no), no);
    EXPECT_TRUE(normalize(Morphism::zero(k2)).is_zero());
}

TEST(Normalize, NormalAndClassEqual) {
    std::mt19937 rng(14);
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 2;
        auto tab = oracle::random_table(rng, k, 3);
        Morphism n = normalize(m(tab, k));
        EXPECT_TRUE(is_normal(n));
        EXPECT_TRUE(oracle::same_element(k, tab, oracle::table(n)));
    }
}

TEST(Classify, Examples) {
    MorphismClass no = classify(m({{"0", "1"}, {"1", "0"}}));
    EXPECT_EQ(no, (MorphismClass{true, true, true, true}));
    EXPECT_EQ(classify(m({{"", "0"}})), (MorphismClass{true, true, false, false}));
    // imC = {0} is not maximal, so this element is not surjective.
    EXPECT_EQ(classify(m({{"0", "0"}, {"1", "0"}})), (MorphismClass{false, true, false, false}));
    EXPECT_EQ(classify(Morphism::zero(k2)), (MorphismClass{true, false, false, false}));
}

TEST(Classify, AgreesWithDefinitions) {
    std::mt19937 rng(15);
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 2;
        auto tab = oracle::random_table(rng, k, 2, 6);
        MorphismClass c = classify(m(tab, k));
        // A collision phi(p s) = phi(p') needs |s| at most the longest image.
        std::size_t n = oracle::max_domain_length(tab);
        for (auto& e : tab) n = std::max(n, oracle::max_domain_length(tab) + e.second.size());
        std::set<std::string> seen;
        std::vector<std::string> dom, img;
        bool inj = true;
        for (const auto& w : oracle::words_up_to(k, n))
            if (auto y = oracle::apply(tab, w)) inj = inj && seen.insert(*y).second;
        for (auto& [x, y] : tab) {
            dom.push_back(x);
            img.push_back(y);
        }
        std::set<std::string> im(img.begin(), img.end());
        auto mins = oracle::minimal(im);
        EXPECT_EQ(c.injective, inj);
        EXPECT_EQ(c.total, oracle::is_maximal_code(k, dom));
        EXPECT_EQ(c.surjective, oracle::is_maximal_code(k, {mins.begin(), mins.end()}));
        EXPECT_EQ(c.unit, c.injective && c.total && c.surjective);
    }
}

TEST(Invert, Examples) {
    EXPECT_EQ(show(invert(m({{"", "0"}}))), "{(0,())}");
    Morphism no = m({{"0", "1"}, {"1", "0"}});
    EXPECT_EQ(invert(no), no);
    Morphism t12 = m({{"00", "00"}, {"01", "10"}, {"10", "01"}, {"11", "11"}});
    EXPECT_EQ(invert(t12), t12);
    EXPECT_THROW(invert(m({{"0", "0"}, {"1", "0"}})), NotInjective);
}

TEST(Invert, PartialIdentityOnTheDomain) {
    std::mt19937 rng(16);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + t % 2;
        Morphism phi = m(oracle::random_injective_table(rng, k, 3), k);
        EXPECT_TRUE(equal_in_M(multiply(invert(phi), phi), Morphism::identity_on(phi.domain_code())));
    }
}

TEST(RestrictionStep, ModKMinusOneInvariance) {
    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
        int k = 2 + t % 3;
        Morphism phi = m(oracle::random_injective_table(rng, k, 3), k);
        const Word& x = phi.entries()[rng() % phi.size()].first;
        Morphism r = restriction_step(phi, x);
        EXPECT_EQ(r.size(), phi.size() + k - 1);
        EXPECT_EQ(r.image_set().size(), phi.image_set().size() + k - 1);
        EXPECT_TRUE(equal_in_M(r, phi));
    }
}

TEST(Json, RoundTripAndErrors) {
    Morphism t = m({{"", "0"}});
    EXPECT_EQ(to_json(t), R"({"k":2,"table":[["","0"]]})");
    EXPECT_EQ(morphism_from_json(to_json(t)), t);
    try {
        morphism_from_json("{\"k\":2,\n \"table\": [[\"0\",]]}");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(morphism_from_json(R"({"k":2,"table":[["0","1"],["01","0"]]})"), InvalidInput);
    EXPECT_THROW(morphism_from_json(R"j({"k":2,"table":[["()","1"]]})j"), Error);
}
