#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "hopfcalc/shuffle_maps.hpp"

using namespace hopfcalc;

TEST_CASE("grouped shuffles for k=2, l=2 are the three textbook rows") {
    std::vector<GroupedShuffle> sh = grouped_shuffles(2, 2);
    REQUIRE(sh.size() == 3);
    REQUIRE(sh[0].flattened == std::vector<int>{1, 2, 3, 4});
    REQUIRE(sh[1].flattened == std::vector<int>{1, 3, 2, 4});
    REQUIRE(sh[2].flattened == std::vector<int>{2, 3, 1, 4});
    REQUIRE(sh[0].blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    REQUIRE(sh[1].blocks == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    REQUIRE(sh[2].blocks == std::vector<std::vector<int>>{{2, 3}, {1, 4}});
    REQUIRE(sh[0].inversions() == 0);
    REQUIRE(sh[1].inversions() == 1);
    REQUIRE(sh[2].inversions() == 2);
}

TEST_CASE("grouped shuffle counts match the multinomial quotient") {
    REQUIRE(grouped_shuffles(2, 3).size() == 15);
    REQUIRE(grouped_shuffles(3, 2).size() == 10);
    REQUIRE(grouped_shuffles(2, 4).size() == 105);
    REQUIRE(grouped_shuffles(1, 3).size() == 1);
    REQUIRE(grouped_shuffles(3, 1).size() == 1);
}

TEST_CASE("grouped shuffles satisfy the defining constraints in canonical order") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        std::vector<GroupedShuffle> sh = grouped_shuffles(k, l);
        std::vector<std::vector<int>> flats;
        for (const GroupedShuffle& s : sh) {
            REQUIRE(int(s.blocks.size()) == l);
            std::set<int> seen;
            int prev_max = 0;
            for (const auto& block : s.blocks) {
                REQUIRE(int(block.size()) == k);
                REQUIRE(std::is_sorted(block.begin(), block.end()));
                REQUIRE(block.back() > prev_max);
                prev_max = block.back();
                seen.insert(block.begin(), block.end());
            }
            REQUIRE(int(seen.size()) == k * l);
            REQUIRE(*seen.begin() == 1);
            REQUIRE(*seen.rbegin() == k * l);
            flats.push_back(s.flattened);
        }
        REQUIRE(std::is_sorted(flats.begin(), flats.end()));
        REQUIRE(std::adjacent_find(flats.begin(), flats.end()) == flats.end());
    }
}

TEST_CASE("koszul degree alternates with the letter degree") {
    for (int d = 1; d <= 6; ++d) {
        Int expected = (d % 2 == 0) ? 3 : 1;
        REQUIRE(koszul_degree(2, 2, d) == expected);
    }
    // with a single block there is nothing to shuffle
    REQUIRE(koszul_degree(1, 3, 1) == 1);
    REQUIRE(koszul_degree(3, 1, 5) == 1);
    // never larger than the raw shuffle count
    REQUIRE(koszul_degree(2, 3, 2) == 15);
    REQUIRE(koszul_degree(3, 2, 2) == 10);
}

TEST_CASE("L_star expands a single letter across all grouped shuffles") {
    Context ctx{4, 4};
    GroupWord w(ctx);
    w.append({TupleLetter({1, 2, 3, 4}), 1});
    GroupWord img = L_star(2, 2, w);
    REQUIRE(img.context() == Context{4, 4});
    REQUIRE(img.factors().size() == 3);
    REQUIRE(img.factors()[0].letter.indices() == std::vector<int>{1, 2, 3, 4});
    REQUIRE(img.factors()[1].letter.indices() == std::vector<int>{1, 3, 2, 4});
    REQUIRE(img.factors()[2].letter.indices() == std::vector<int>{2, 3, 1, 4});
    for (const auto& f : img.factors()) REQUIRE(f.exponent == 1);
}

TEST_CASE("L_star sends an inverse letter to the reversed inverse factors") {
    Context ctx{4, 4};
    GroupWord w(ctx);
    w.append({TupleLetter({1, 2, 3, 4}), -1});
    GroupWord img = L_star(2, 2, w);
    REQUIRE(img.factors().size() == 3);
    REQUIRE(img.factors()[0].letter.indices() == std::vector<int>{2, 3, 1, 4});
    REQUIRE(img.factors()[1].letter.indices() == std::vector<int>{1, 3, 2, 4});
    REQUIRE(img.factors()[2].letter.indices() == std::vector<int>{1, 2, 3, 4});
    for (const auto& f : img.factors()) REQUIRE(f.exponent == -1);
}

TEST_CASE("L_star validates its inputs") {
    Context ctx{4, 4};
    GroupWord w(ctx);
    w.append({TupleLetter({1, 2, 3, 4}), 2});
    REQUIRE_THROWS_AS(L_star(2, 2, w), std::invalid_argument);

    Context wrong{4, 3};
    GroupWord v(wrong);
    v.append({TupleLetter({1, 2, 3}), 1});
    REQUIRE_THROWS_AS(L_star(2, 2, v), std::invalid_argument);
}

TEST_CASE("the shuffle order cannot be seen through rho") {
    Context ctx{4, 4};
    GroupWord w(ctx);
    w.append({TupleLetter({1, 2, 3, 4}), 1});
    w.append({TupleLetter({2, 1, 4, 3}), -1});
    CoordinateSeries base = rho(L_star(2, 2, w));
    REQUIRE(base == rho(L_star(2, 2, w, ShuffleOrder::reversed)));
    REQUIRE(base == rho(L_star(2, 2, w, ShuffleOrder::scrambled, 99)));
    REQUIRE(shuffle_order_from_string("canonical") == ShuffleOrder::canonical);
    REQUIRE(shuffle_order_from_string("reversed") == ShuffleOrder::reversed);
    REQUIRE(shuffle_order_from_string("scrambled") == ShuffleOrder::scrambled);
    REQUIRE_THROWS_AS(shuffle_order_from_string("shuffled"), std::invalid_argument);
}

TEST_CASE("composite of the two James maps equals the grouped shuffle image") {
    SECTION("smallest instance") {
        Prop314Report r = verify_prop314(4, 2, 2);
        REQUIRE(r.equal);
        REQUIRE(r.lhs == r.rhs);
        REQUIRE_FALSE(r.lhs.is_one());
    }
    SECTION("rectangular instances") {
        REQUIRE(verify_prop314(5, 2, 2).equal);
        REQUIRE(verify_prop314(6, 2, 3).equal);
        REQUIRE(verify_prop314(6, 3, 2).equal);
    }
    SECTION("insensitive to the shuffle enumeration order") {
        REQUIRE(verify_prop314(4, 2, 2, ShuffleOrder::reversed).equal);
        REQUIRE(verify_prop314(4, 2, 2, ShuffleOrder::scrambled, 12345).equal);
        REQUIRE(verify_prop314(5, 2, 2, ShuffleOrder::scrambled, 999).equal);
    }
    SECTION("collapses to the unit when n < kl") {
        Prop314Report t = verify_prop314(3, 2, 2);
        REQUIRE(t.equal);
        REQUIRE(t.lhs.is_one());
        REQUIRE(t.rhs.is_one());
    }
    SECTION("parameter validation") {
        REQUIRE_THROWS_AS(verify_prop314(4, 0, 2), std::invalid_argument);
    }
}
