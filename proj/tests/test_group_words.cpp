#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "hopfcalc/group_word.hpp"

using namespace hopfcalc;

namespace {

int letter_count(const std::string& monomial) {
    int c = 0;
    for (char ch : monomial) c += (ch == '(');
    return c;
}

}  // namespace

TEST_CASE("rho sends a generator to its unit series") {
    Context ctx{4, 2};
    GroupWord w = generator(ctx, {1, 2});
    CoordinateSeries s = rho(w);
    REQUIRE(s.constant_term() == 1);
    REQUIRE(s.coefficient(monokey::from_letter(TupleLetter({1, 2}))) == 1);
    REQUIRE(s.to_coeff_map().size() == 2);

    GroupWord rep = generator(ctx, {1, 1}, 7);
    REQUIRE(rho(rep).is_one());
}

TEST_CASE("commutator of two letters has the expected leading terms") {
    Context ctx{2, 1};
    GroupWord c = commutator({generator(ctx, {1}), generator(ctx, {2})});
    REQUIRE(c.factors().size() == 4);
    REQUIRE(c.factors()[0].exponent == -1);
    REQUIRE(c.factors()[1].exponent == -1);
    REQUIRE(c.factors()[2].letter.indices() == std::vector<int>{1});
    REQUIRE(c.factors()[3].letter.indices() == std::vector<int>{2});

    CoordinateSeries s = rho(c);
    std::uint64_t k12 = monokey::concat(monokey::from_letter(TupleLetter({1})),
                                        monokey::from_letter(TupleLetter({2})));
    std::uint64_t k21 = monokey::concat(monokey::from_letter(TupleLetter({2})),
                                        monokey::from_letter(TupleLetter({1})));
    REQUIRE(s.constant_term() == 1);
    REQUIRE(s.coefficient(k12) == 1);
    REQUIRE(s.coefficient(k21) == -1);

    REQUIRE_THROWS_AS(commutator({generator(ctx, {1})}), std::invalid_argument);
}

TEST_CASE("decorations multiply into the exponent") {
    Context ctx{5, 1};
    GeneratorPower p(TupleLetter({3}), 2, {-1, 3});
    REQUIRE(p.exponent == -6);

    GroupWord w(ctx);
    w.append(GeneratorPower(TupleLetter({3}), 2, {-1, 3}));
    GroupWord direct(ctx);
    direct.append({TupleLetter({3}), -6});
    REQUIRE(rho(w) == rho(direct));

    // exponent zero is pruned on append
    GroupWord z(ctx);
    z.append({TupleLetter({1}), 0});
    REQUIRE(z.factors().empty());
    REQUIRE(rho(z).is_one());
}

TEST_CASE("word algebra respects the group laws under rho") {
    Rng rng(311);
    Context ctx{5, 1};
    for (int t = 0; t < 30; ++t) {
        GroupWord a(ctx), b(ctx);
        for (int i = rng.range(1, 4); i > 0; --i)
            a.append({TupleLetter({int(rng.range(1, ctx.n))}), rng.range(-2, 2)});
        for (int i = rng.range(1, 4); i > 0; --i)
            b.append({TupleLetter({int(rng.range(1, ctx.n))}), rng.range(-2, 2)});

        REQUIRE(rho(word_mul(a, b)) == ring_mul(rho(a), rho(b)));
        REQUIRE(rho(word_mul(a, word_inverse(a))).is_one());
        for (int m = -2; m <= 2; ++m) {
            REQUIRE(rho(word_pow(a, m)) == ring_pow(rho(a), m));
        }
    }
}

TEST_CASE("gamma test elements start at the basic commutators") {
    std::vector<GroupWord> ws = gamma_test_elements(3, 2, 5, {1}, 7);
    REQUIRE(ws.size() == 5);
    Context ctx{3, 1};
    REQUIRE(ws[0] == commutator({generator(ctx, {1}), generator(ctx, {2})}));

    std::vector<GroupWord> deep = gamma_test_elements(3, 3, 4, {1}, 7);
    GroupWord expect = commutator(
        {commutator({generator(ctx, {1}), generator(ctx, {2})}), generator(ctx, {3})});
    REQUIRE(deep[0] == expect);
}

TEST_CASE("gamma test elements live in the weight filtration") {
    for (int c = 2; c <= 4; ++c) {
        std::vector<GroupWord> ws = gamma_test_elements(3, c, 12, {-2, -1, 1, 2, 3}, 99);
        REQUIRE(ws.size() == 12);
        for (const GroupWord& w : ws) {
            for (const auto& [mono, coeff] : rho(w).to_coeff_map()) {
                if (mono == "1") continue;
                REQUIRE(letter_count(mono) >= c);
            }
        }
    }
    // deterministic for a fixed seed
    REQUIRE(gamma_test_elements(4, 2, 9, {-1, 1, 2}, 5) ==
            gamma_test_elements(4, 2, 9, {-1, 1, 2}, 5));
    REQUIRE_THROWS_AS(gamma_test_elements(1, 2, 3, {1}, 0), std::invalid_argument);
}

TEST_CASE("word parser accepts the documented grammar") {
    Context ctx{4, 2};
    GroupWord w = parse_word("{1,2}^3 {2,4}^-1", ctx);
    REQUIRE(w.factors().size() == 2);
    REQUIRE(w.factors()[0].letter.indices() == std::vector<int>{1, 2});
    REQUIRE(w.factors()[0].exponent == 3);
    REQUIRE(w.factors()[1].letter.indices() == std::vector<int>{2, 4});
    REQUIRE(w.factors()[1].exponent == -1);

    Context c1{4, 1};
    REQUIRE(parse_word("[{1},{2}]", c1) ==
            commutator({generator(c1, {1}), generator(c1, {2})}));
    REQUIRE(parse_word("[{1},{2}]^2", c1) ==
            word_pow(commutator({generator(c1, {1}), generator(c1, {2})}), 2));
    REQUIRE(parse_word("[[{1},{2}],{3}]", c1) ==
            commutator({commutator({generator(c1, {1}), generator(c1, {2})}),
                        generator(c1, {3})}));
    REQUIRE(parse_word("  {1} ^ 2  ", c1) == generator(c1, {1}, 2));
    REQUIRE(parse_word("", c1).factors().empty());
}

TEST_CASE("word parser rejects malformed input") {
    Context ctx{4, 1};
    REQUIRE_THROWS_AS(parse_word("{1", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("{0}", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("{5}", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("[{1}]", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("{1}]", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("{1}^", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("{1,2}", ctx), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("{1} x", ctx), std::invalid_argument);
}

TEST_CASE("word printing is stable") {
    Context ctx{4, 2};
    GroupWord w(ctx);
    w.append({TupleLetter({1, 2}), 3});
    w.append({TupleLetter({2, 4}), -1});
    REQUIRE(w.to_string() == "g(1,2)^3 g(2,4)^-1");
    REQUIRE(GroupWord(ctx).to_string() == "1");
}
