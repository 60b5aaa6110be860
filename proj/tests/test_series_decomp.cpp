#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hopfcalc/series_decomp.hpp"

using namespace hopfcalc;

namespace {

PowerSeries from_ints(const std::vector<long>& v) {
    PowerSeries s(int(v.size()) - 1);
    for (std::size_t i = 0; i < v.size(); ++i) s[int(i)] = Int(v[i]);
    return s;
}

}  // namespace

TEST_CASE("power series arithmetic is exact at a fixed truncation") {
    PowerSeries a = from_ints({1, 2, 3});
    PowerSeries b = from_ints({1, -1, 0});
    REQUIRE((a + b) == from_ints({2, 1, 3}));
    REQUIRE((a - b) == from_ints({0, 3, 3}));
    REQUIRE((a * b) == from_ints({1, 1, 1}));
    REQUIRE(PowerSeries::one(2) == from_ints({1, 0, 0}));
    REQUIRE(a.truncation() == 2);
    REQUIRE_FALSE(from_ints({1, -2}).is_nonnegative());
    REQUIRE(a.to_string() == "[1,2,3]");

    PowerSeries longer(5);
    REQUIRE_THROWS_AS(a + longer, std::invalid_argument);
    REQUIRE_THROWS_AS(PowerSeries(-1), std::invalid_argument);
}

TEST_CASE("div_exact inverts multiplication by a unital series") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        PowerSeries a(8), b(8);
        b[0] = 1;
        for (int d = 0; d <= 8; ++d) {
            a[d] = Int(long(rng.range(-5, 5)));
            if (d > 0) b[d] = Int(long(rng.range(-5, 5)));
        }
        REQUIRE(div_exact(a * b, b) == a);
    }
    REQUIRE_THROWS_AS(div_exact(from_ints({1, 1}), from_ints({2, 1})), std::invalid_argument);
}

TEST_CASE("james series solves (1 - v) r = 1") {
    PowerSeries v(5, {{1, Int(2)}});
    PowerSeries r = james_series(v);
    REQUIRE(r == from_ints({1, 2, 4, 8, 16, 32}));
    REQUIRE((r * (PowerSeries::one(5) - v)) == PowerSeries::one(5));

    PowerSeries moore(6, {{3, Int(1)}, {4, Int(1)}});
    PowerSeries rm = james_series(moore);
    REQUIRE((rm * (PowerSeries::one(6) - moore)) == PowerSeries::one(6));
    REQUIRE(rm == from_ints({1, 0, 0, 1, 1, 0, 1}));

    REQUIRE_THROWS_AS(james_series(from_ints({1, 1})), std::invalid_argument);
}

TEST_CASE("alphabet series counts letters by degree") {
    REQUIRE(alphabet_series(GradedAlphabet::with_degrees({1, 2, 2}), 3) ==
            from_ints({0, 1, 2, 0}));
    REQUIRE(alphabet_series(GradedAlphabet::ungraded(3), 2) == from_ints({0, 3, 0}));
}

TEST_CASE("lie series table reproduces witt numbers on ungraded alphabets") {
    LieSeriesTable table(GradedAlphabet::ungraded(2), 6, 6, SignMode::ungraded);
    for (int n = 1; n <= 6; ++n) {
        REQUIRE(table.dim(n, n) == witt(n, 2));
    }
    REQUIRE(table.dim(2, 3) == 0);
    REQUIRE(ln_series(2, GradedAlphabet::ungraded(2), 0, 2)[2] == 1);
    REQUIRE(ln_series(3, GradedAlphabet::ungraded(1), 2, 3)[3] == 0);
    REQUIRE(ln_series(1, GradedAlphabet::with_degrees({2, 5}), 0, 6) ==
            from_ints({0, 0, 1, 0, 0, 1, 0}));
    REQUIRE_THROWS_AS(ln_series(3, GradedAlphabet::ungraded(2), 3, 5),
                      std::invalid_argument);
}

TEST_CASE("closed-form and matrix routes agree in both sign modes") {
    for (GradedAlphabet ab :
         {GradedAlphabet::ungraded(2), GradedAlphabet::with_degrees({1, 2})}) {
        for (SignMode mode : {SignMode::ungraded, SignMode::graded}) {
            for (int n = 2; n <= 4; ++n) {
                int D = 2 * n;
                REQUIRE(ln_series(n, ab, 0, D, mode) == ln_series_matrix(n, ab, D, mode));
            }
        }
    }
    // one odd letter: the graded square survives
    REQUIRE(ln_series(2, GradedAlphabet::ungraded(1), 0, 2, SignMode::graded)[2] == 1);
    REQUIRE(ln_series(2, GradedAlphabet::ungraded(1), 0, 2, SignMode::ungraded)[2] == 0);

    GradedAlphabet mixed = GradedAlphabet::with_degrees({1, 2});
    REQUIRE(ln_series(4, mixed, 0, 8, SignMode::ungraded) ==
            from_ints({0, 0, 0, 0, 0, 1, 1, 1, 0}));
    REQUIRE(ln_series(4, mixed, 0, 8, SignMode::graded) ==
            from_ints({0, 0, 0, 0, 0, 1, 2, 1, 0}));
}

TEST_CASE("weight list conditions are enforced with named diagnostics") {
    REQUIRE_NOTHROW(validate_ks({2, 5, 7}, 3));
    REQUIRE_THROWS_WITH(validate_ks({5}, 5),
                        Catch::Matchers::ContainsSubstring("condition (1)"));
    REQUIRE_THROWS_WITH(validate_ks({2, 4}, 5),
                        Catch::Matchers::ContainsSubstring("condition (2)"));
    REQUIRE_THROWS_AS(validate_ks({1, 2}, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_ks({3, 2}, 5), std::invalid_argument);
}

TEST_CASE("decomposition residual on a hand-checked instance") {
    // v = 2t at D = 4 with weights {2,3,5,7,11}: the factors above the
    // truncation drop out and the division was worked by hand
    PowerSeries v(4, {{1, Int(2)}});
    DecompositionReport r =
        decomposition_residual(v, {2, 3, 5, 7, 11}, GradedAlphabet::ungraded(2), 13);
    REQUIRE(r.residual == from_ints({1, 2, 3, 4, 8}));
    REQUIRE(r.nonnegative);
}

TEST_CASE("pinned residual of the rank-two wedge instance") {
    DecompositionReport r = cor41_instance();
    REQUIRE(r.residual.truncation() == 30);
    REQUIRE(r.nonnegative);
    std::vector<long> expect{
        1,      2,       3,       6,        12,       18,       36,       60,
        120,    258,     516,     846,      1800,     3156,     6204,     13038,
        27192,  46674,   99360,   178836,   361884,   751362,   1537644,  2690478,
        5756220, 11829210, 23733588, 47535216, 98196132, 176343714, 365619816};
    REQUIRE(r.residual == from_ints(expect));

    DecompositionReport g = cor41_instance(30, SignMode::graded);
    REQUIRE(g.nonnegative);
}

TEST_CASE("pinned residual of the mod-2 Moore space instance") {
    DecompositionReport r = cor42_instance();
    REQUIRE(r.residual.truncation() == 30);
    REQUIRE(r.nonnegative);
    std::vector<long> expect{1, 0, 0, 1, 1, 0, 1, 2, 1,  1,  2,  2,  2,  3,  4, 4,
                             4, 5, 6, 7, 9, 11, 12, 13, 15, 18, 23, 30, 37, 44, 54};
    REQUIRE(r.residual == from_ints(expect));
}
