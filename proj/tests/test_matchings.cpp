#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "snakefrac/matchings.hpp"

using namespace snakefrac;
using namespace snakefrac::testing;

namespace {



}  // namespace

TEST_CASE("edge bookkeeping") {
    SnakeShape s = cf_to_snake(ContinuedFraction{2, 3, 1}).shape;  // 5:RRUR
    CHECK(all_edges(s).size() == 3 * 5 + 1);
    // shared edges alias to the lower tile
    CHECK(canonical_edge(s, 2, Side::W) == EdgeId{1, Side::E});
    CHECK(canonical_edge(s, 4, Side::S) == EdgeId{3, Side::N});
    CHECK(canonical_edge(s, 2, Side::S) == EdgeId{2, Side::S});
    CHECK(chain_edge(s, 0) == EdgeId{1, Side::S});
    CHECK(chain_edge(s, 3) == EdgeId{3, Side::N});
    CHECK(b0_edge(s) == EdgeId{1, Side::W});
    CHECK(bn_edge(s, NeChoice::East) == EdgeId{5, Side::N});
    CHECK(edge_str(EdgeId{3, Side::N}) == "3.N");
    CHECK(parse_edge("3.N") == EdgeId{3, Side::N});
    CHECK_THROWS_AS(parse_edge("3N"), Error);

    CHECK(all_edges(SnakeShape()).size() == 1);
}

TEST_CASE("enumeration of small graphs") {
    auto single = enumerate_matchings(SnakeShape(1, {}));
    REQUIRE(single.size() == 2);
    CHECK(single[0] == PerfectMatching{{1, Side::S}, {1, Side::N}});
    CHECK(single[1] == PerfectMatching{{1, Side::W}, {1, Side::E}});

    CHECK(enumerate_matchings(cf_to_snake(ContinuedFraction{2, 3, 1}).shape).size() == 9);
    // straight 4 tiles = G[1,1,1,1,1]
    CHECK(enumerate_matchings(SnakeShape(4, {Turn::Up, Turn::Up, Turn::Up})).size() == 8);

    auto edge_only = enumerate_matchings(SnakeShape());
    REQUIRE(edge_only.size() == 1);
    CHECK(edge_only[0] == PerfectMatching{{1, Side::S}});

    CHECK_THROWS_AS(enumerate_matchings(cf_to_snake(ContinuedFraction{30}).shape), Error);
}

TEST_CASE("matchings are valid, distinct and canonically ordered") {
    for (int d = 0; d <= 7; ++d)
        for_each_shape(d, [](const SnakeShape& s) {
            auto ms = enumerate_matchings(s);
            std::set<PerfectMatching> seen(ms.begin(), ms.end());
            CHECK(seen.size() == ms.size());
            for (size_t k = 0; k < ms.size(); ++k) {
                CHECK(is_perfect_matching(s, ms[k]));
                if (k) CHECK(ms[k - 1] < ms[k]);
            }
        });
}

TEST_CASE("count, DP and enumeration agree") {
    for (int d = 0; d <= 10; ++d)
        for_each_shape(d, [](const SnakeShape& s) {
            BigInt n = count_matchings(s);
            CHECK(n == count_matchings_dp(s));
            CHECK(n == BigInt(enumerate_matchings(s).size()));
        });
}

TEST_CASE("counts of the named families") {
    CHECK(count_matchings(cf_to_snake(ContinuedFraction{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}).shape) ==
          89);
    CHECK(count_matchings(cf_to_snake(ContinuedFraction{2, 2, 2, 2, 2, 2, 2, 2, 2, 2}).shape) ==
          5741);
    CHECK(count_matchings(SnakeShape()) == 1);
    CHECK(count_matchings_dp(cf_to_snake(ContinuedFraction{2, 3, 1, 2, 3}).shape) == 84);
    CHECK(count_matchings_dp(SnakeShape(2, {Turn::Up})) == 3);
    CHECK(count_matchings_dp(SnakeShape(2, {Turn::Right})) == 3);
}

TEST_CASE("rotation preserves the count") {
    for (int d = 0; d <= 12; ++d)
        for_each_shape(d, [](const SnakeShape& s) {
            CHECK(count_matchings_dp(rotate180(s)) == count_matchings_dp(s));
        });
}

TEST_CASE("numerator and denominator of the canonical reading") {
    for (int total = 2; total <= 12; ++total)
        for_each_composition(total, [](const ContinuedFraction& cf) {
            SnakeShape s = cf_to_snake(cf).shape;
            Rational v = evaluate(snake_to_cf_canonical(s));
            CHECK(count_matchings_dp(s) == v.get_num());
            if (cf.n() >= 2)
                CHECK(count_matchings_dp(remove_H1(s, cf)) == v.get_den());
            else
                CHECK(v.get_den() == 1);  // G \ H_1 is the single edge
        });
}

TEST_CASE("zigzag boundary-matching facts") {
    for (int a = 2; a <= 9; ++a) {
        SnakeShape z = cf_to_snake(ContinuedFraction{a}).shape;
        auto ms = enumerate_matchings(z);
        auto contains = [](const PerfectMatching& m, const EdgeId& e) {
            return std::binary_search(m.begin(), m.end(), e);
        };
        // exactly one matching contains e_0
        int with_e0 = 0;
        for (const auto& m : ms)
            if (contains(m, chain_edge(z, 0))) ++with_e0;
        CHECK(with_e0 == 1);
        // exactly one contains e_{d-1} and no earlier chain edge
        int boundary_last = 0;
        for (const auto& m : ms) {
            if (!contains(m, chain_edge(z, z.d - 1))) continue;
            bool clean = true;
            for (int j = 0; j <= z.d - 2; ++j)
                if (contains(m, chain_edge(z, j))) clean = false;
            if (clean) ++boundary_last;
        }
        CHECK(boundary_last == 1);
    }
}

TEST_CASE("weighted sums specialize to counts") {
    for (int d = 0; d <= 9; ++d)
        for_each_shape(d, [](const SnakeShape& s) {
            Rational w = weighted_matching_sum(s, [](const EdgeId&) { return Rational(1); });
            CHECK(w == Rational(count_matchings(s)));
        });
    // doubling one edge weight counts matchings through that edge twice
    SnakeShape tile(1, {});
    Rational w = weighted_matching_sum(
        tile, [](const EdgeId& e) { return e == EdgeId{1, Side::S} ? Rational(2) : Rational(1); });
    CHECK(w == Rational(3));  // {S,N} weighted 2, {W,E} weighted 1
}

TEST_CASE("matching text format") {
    auto ms = enumerate_matchings(SnakeShape(1, {}));
    CHECK(matching_str(ms[0]) == "1.S 1.N");
    CHECK(matching_str(ms[1]) == "1.W 1.E");
}
