#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "snakefrac/identities.hpp"
#include "snakefrac/labeled.hpp"

using namespace snakefrac;
using namespace snakefrac::testing;

namespace {



LaurentPoly mono(const LabeledSnakeGraph& g, const std::map<std::string, int>& exps) {
    return LaurentPoly::monomial(g.vars, exps);
}

}  // namespace

TEST_CASE("cross products") {
    LabeledSnakeGraph tile = distinct_labeling(SnakeShape(1, {}), NeChoice::North);
    CHECK(cross(tile) == LaurentPoly::var(tile.vars, "x1"));
    LabeledSnakeGraph ex = example_graph(NeChoice::East);
    CHECK(cross(ex) == mono(ex, {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}, {"x5", 1}}));
}

TEST_CASE("expansion of a single tile is the exchange-relation shape") {
    LabeledSnakeGraph tile = distinct_labeling(SnakeShape(1, {}), NeChoice::North);
    // matchings {S,N} and {W,E}, over the tile label
    LaurentPoly expect = parse_poly(tile.vars, "e0*e1*x1^-1 + c1W*c1E*x1^-1");
    CHECK(cluster_expansion(tile) == expect);
}

TEST_CASE("matching weights") {
    LabeledSnakeGraph tile = distinct_labeling(SnakeShape(1, {}), NeChoice::North);
    auto ms = enumerate_matchings(tile.shape);
    REQUIRE(ms.size() == 2);
    CHECK(matching_weight(tile, ms[0]) == mono(tile, {{"e0", 1}, {"e1", 1}}));
    CHECK(matching_weight(tile, ms[1]) == mono(tile, {{"c1W", 1}, {"c1E", 1}}));
    CHECK_THROWS_AS(matching_weight(tile, PerfectMatching{{1, Side::S}}), Error);

    // the all-boundary matching of the example graph carries the
    // documented monomial b0 x1 x3 x4 x5 times the H_3 edge
    LabeledSnakeGraph ex = example_graph(NeChoice::East);
    LaurentPoly expect =
        mono(ex, {{"b0", 1}, {"x1", 1}, {"x3", 1}, {"x4", 1}, {"x5", 1}, {"y5", 1}});
    int hits = 0;
    for (const auto& m : enumerate_matchings(ex.shape))
        if (matching_weight(ex, m) == expect) ++hits;
    CHECK(hits == 1);
}

TEST_CASE("boundary data and applicability of the example graph") {
    LabeledSnakeGraph g = example_graph(NeChoice::East);
    CHECK(reading(g) == ContinuedFraction{2, 3, 1});
    CHECK(labels_applicable(g));
    CHECK(boundary_data(g) == std::vector<std::string>{"b0", "x2", "x5", "b3"});

    LabeledSnakeGraph g2 = example_graph(NeChoice::North);
    CHECK(reading(g2) == ContinuedFraction{2, 4});
    CHECK(labels_applicable(g2));
    CHECK(boundary_data(g2) == std::vector<std::string>{"b0", "x2", "y5"});

    LabeledSnakeGraph broken = example_graph(NeChoice::East);
    broken.edge_weight[{3, Side::S}] = "y1";
    CHECK(!labels_applicable(broken));
}

TEST_CASE("H expansions match the closed form") {
    LabeledSnakeGraph g = example_graph(NeChoice::East);
    // H_1 is the first tile
    LaurentPoly h1 = x_H(g, 1);
    CHECK(h1 == parse_poly(g.vars, "y0*x2*x1^-1 + b0*y1*x1^-1"));
    CHECK(h1 == x_H_formula(g, 1));
    CHECK(x_H(g, 2) == x_H_formula(g, 2));
    // H_3 is the single east edge
    CHECK(x_H(g, 3) == LaurentPoly::var(g.vars, "y5"));
    CHECK(x_H(g, 3) == x_H_formula(g, 3));

    LabeledSnakeGraph g2 = example_graph(NeChoice::North);
    CHECK(x_H(g2, 1) == x_H(g, 1));
    CHECK(x_H(g2, 2) == x_H_formula(g2, 2));

    // a_1 = 1: H_1 is the single edge e_0
    LabeledSnakeGraph col = distinct_labeling(cf_to_snake(ContinuedFraction{1, 2}).shape,
                                              cf_to_snake(ContinuedFraction{1, 2}).ne);
    CHECK(x_H(col, 1) == LaurentPoly::var(col.vars, "e0"));
    CHECK(x_H_formula(col, 1) == LaurentPoly::var(col.vars, "e0"));
}

TEST_CASE("x_H equals the closed form on random labelings") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 150; ++t) {
        LabeledSnakeGraph g = random_valid_labeling(rng, 9);
        ContinuedFraction cf = reading(g);
        for (int i = 1; i <= cf.n(); ++i) CHECK(x_H(g, i) == x_H_formula(g, i));
    }
    // and exhaustively over shapes with distinct surface labels
    for (int d = 1; d <= 7; ++d)
        for_each_shape(d, [](const SnakeShape& s) {
            for (NeChoice ne : {NeChoice::North, NeChoice::East}) {
                LabeledSnakeGraph g = surface_labeling(s, ne);
                ContinuedFraction cf = reading(g);
                for (int i = 1; i <= cf.n(); ++i) CHECK(x_H(g, i) == x_H_formula(g, i));
                CHECK(verify_quotient(g).holds);
            }
        });
}

TEST_CASE("L sequence of the example graph") {
    LabeledSnakeGraph g = example_graph(NeChoice::East);
    auto L = L_sequence(g);
    REQUIRE(L.size() == 3);
    CHECK(L[0] == x_H(g, 1) * mono(g, {{"x2", -1}}));
    CHECK(L[1] == x_H(g, 2) * mono(g, {{"x2", 1}, {"b0", -1}, {"x5", -1}}));
    CHECK(L[2] == x_H(g, 3) * mono(g, {{"b0", 1}, {"x5", 1}, {"x2", -2}, {"b3", -1}}));

    LabeledSnakeGraph g2 = example_graph(NeChoice::North);
    auto L2 = L_sequence(g2);
    REQUIRE(L2.size() == 2);
    CHECK(L2[0] == L[0]);
    CHECK(L2[1] == x_H(g2, 2) * mono(g, {{"x2", 1}, {"b0", -1}, {"y5", -1}}));
}

TEST_CASE("gamma prime") {
    LabeledSnakeGraph g = example_graph(NeChoice::East);
    LabeledSnakeGraph gp = gamma_prime(g);
    CHECK(gp.shape.d == 3);
    CHECK(gp.tile_label == std::map<int, std::string>{{1, "x3"}, {2, "x4"}, {3, "x5"}});
    CHECK(enumerate_matchings(gp.shape).size() == 4);

    // single-coefficient graph degenerates to the b_n edge
    CfSnake z = cf_to_snake(ContinuedFraction{4});
    LabeledSnakeGraph zz = distinct_labeling(z.shape, z.ne);
    LabeledSnakeGraph zp = gamma_prime(zz);
    CHECK(zp.shape.d == 0);
    CHECK(cluster_expansion(zp) == weight_poly(zz, bn_edge(zz.shape, zz.ne)));
}

TEST_CASE("quotient identity on the example graph, both readings") {
    LabeledSnakeGraph east = example_graph(NeChoice::East);
    QuotientReport r1 = verify_quotient(east);
    CHECK(r1.holds);
    LabeledSnakeGraph north = example_graph(NeChoice::North);
    QuotientReport r2 = verify_quotient(north);
    CHECK(r2.holds);

    // the two readings encode the same quotient of Laurent polynomials
    auto L_east = L_sequence(east);
    auto L_north = L_sequence(north);
    LaurentPoly one = LaurentPoly::one(east.vars), zero = LaurentPoly::zero(east.vars);
    auto tail = [&](const std::vector<LaurentPoly>& L) {
        return std::vector<LaurentPoly>(L.begin() + 1, L.end());
    };
    RationalFunction q_east{continuant_ring(L_east, one, zero),
                            continuant_ring(tail(L_east), one, zero)};
    RationalFunction q_north{continuant_ring(L_north, one, zero),
                             continuant_ring(tail(L_north), one, zero)};
    CHECK(frac_eq(q_east, q_north));
    // and both equal the expansion quotient
    RationalFunction direct{cluster_expansion(east), cluster_expansion(gamma_prime(east))};
    CHECK(frac_eq(q_east, direct));
}

TEST_CASE("quotient identity on single tiles and random labelings") {
    for (NeChoice ne : {NeChoice::North, NeChoice::East}) {
        LabeledSnakeGraph tile = distinct_labeling(SnakeShape(1, {}), ne);
        CHECK(verify_quotient(tile).holds);
    }
    std::mt19937_64 rng(211);
    for (int t = 0; t < 60; ++t) CHECK(verify_quotient(random_valid_labeling(rng, 9)).holds);
}

TEST_CASE("the two readings of a graph give the same quotient") {
    std::mt19937_64 rng(223);
    auto quotient = [](const LabeledSnakeGraph& g) {
        auto L = L_sequence(g);
        std::vector<LaurentPoly> tail(L.begin() + 1, L.end());
        LaurentPoly one = LaurentPoly::one(g.vars), zero = LaurentPoly::zero(g.vars);
        return RationalFunction{continuant_ring(L, one, zero), continuant_ring(tail, one, zero)};
    };
    for (int t = 0; t < 40; ++t) {
        LabeledSnakeGraph g = random_valid_labeling(rng, 8);
        if (g.shape.d < 1) continue;
        LabeledSnakeGraph flipped = g;
        flipped.ne = g.ne == NeChoice::North ? NeChoice::East : NeChoice::North;
        CHECK(labels_applicable(flipped));
        CHECK(verify_quotient(flipped).holds);
        CHECK(frac_eq(quotient(g), quotient(flipped)));
    }
}

TEST_CASE("expansion at all ones counts matchings") {
    for (int d = 0; d <= 8; ++d)
        for_each_shape(d, [](const SnakeShape& s) {
            LabeledSnakeGraph g = distinct_labeling(s, NeChoice::North);
            CHECK(cluster_expansion(g).eval_all_ones() == GaussRational(Rational(count_matchings(s))));
        });
}

TEST_CASE("complex specialization of the worked example") {
    GaussRational z1{Rational(0), Rational(2)};   // 2i
    GaussRational z2{Rational(-3), Rational(1)};  // -3+i
    ComplexSpecialization cs = complex_specialize({z1, z2});
    CHECK(cs.cf == ContinuedFraction{2, 4});
    CHECK(cs.graph.shape.d == 5);
    // the special weights sit on e_1 and the final chain edge
    auto at = [&](int j) {
        EdgeId e = j == cs.graph.shape.d ? ne_edge(cs.graph.shape, cs.graph.ne)
                                         : chain_edge(cs.graph.shape, j);
        return cs.point.at(cs.graph.weight(e));
    };
    CHECK(at(1) == GaussRational(Rational(-1), Rational(2)));  // 2i - 1
    CHECK(at(5) == GaussRational(Rational(-6), Rational(1)));  // -6 + i
    CHECK(at(0) == GaussRational(1));

    // eval(x_H(i)) = z_i and the L-continuant equals the plain continuant
    CHECK(x_H(cs.graph, 1).eval(cs.point) == z1);
    CHECK(x_H(cs.graph, 2).eval(cs.point) == z2);
    auto L = L_sequence(cs.graph);
    LaurentPoly one = LaurentPoly::one(cs.graph.vars), zero = LaurentPoly::zero(cs.graph.vars);
    CHECK(continuant_ring(L, one, zero).eval(cs.point) == continuant_ring({z1, z2}));
    CHECK(continuant_ring({z1, z2}) == GaussRational(Rational(-1), Rational(-6)));
}

TEST_CASE("positive integer entries specialize to weight one everywhere") {
    ComplexSpecialization cs = complex_specialize({GaussRational(3), GaussRational(2)});
    CHECK(cs.cf == ContinuedFraction{3, 2});
    for (const auto& [name, value] : cs.point) CHECK(value == GaussRational(1));
    auto L = L_sequence(cs.graph);
    LaurentPoly one = LaurentPoly::one(cs.graph.vars), zero = LaurentPoly::zero(cs.graph.vars);
    CHECK(continuant_ring(L, one, zero).eval(cs.point) ==
          GaussRational(Rational(continuant(cs.cf))));
}

TEST_CASE("complex specialization identity on random entries") {
    std::mt19937_64 rng(307);
    std::uniform_int_distribution<int> len(1, 5), num(-5, 5), den(1, 3);
    for (int t = 0; t < 100; ++t) {
        int n = len(rng);
        std::vector<GaussRational> zs;
        for (int k = 0; k < n; ++k) {
            GaussRational z{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
            if (z.is_zero()) z = GaussRational(1);
            zs.push_back(z);
        }
        ComplexSpecialization cs = complex_specialize(zs);
        for (int i = 1; i <= cs.cf.n(); ++i)
            CHECK(x_H(cs.graph, i).eval(cs.point) == zs[static_cast<size_t>(i - 1)]);
        auto L = L_sequence(cs.graph);
        LaurentPoly one = LaurentPoly::one(cs.graph.vars), zero = LaurentPoly::zero(cs.graph.vars);
        CHECK(continuant_ring(L, one, zero).eval(cs.point) == continuant_ring(zs));
    }
    CHECK_THROWS_AS(complex_specialize({GaussRational(0)}), Error);
}

TEST_CASE("rescaling entries at the Laurent level") {
    // the move used to absorb b_1/b_0 into the deeper entries: scaling a
    // continued fraction of rational functions multiplies its value by r
    LabeledSnakeGraph g = example_graph(NeChoice::East);
    LaurentPoly one = LaurentPoly::one(g.vars);
    auto L = L_sequence(g);
    std::vector<RationalFunction> entries;
    for (const auto& p : L) entries.emplace_back(p, one);
    RationalFunction r{LaurentPoly::var(g.vars, "x2"), LaurentPoly::var(g.vars, "b0")};
    auto scaled = scale_general(entries, r);
    RationalFunction lhs = evaluate_general(scaled);
    RationalFunction rhs = frac_mul(r, evaluate_general(entries));
    CHECK(frac_eq(lhs, rhs));
}

TEST_CASE("labeled graph text form round trips") {
    for (NeChoice ne : {NeChoice::East, NeChoice::North}) {
        LabeledSnakeGraph g = example_graph(ne);
        LabeledSnakeGraph back = parse_labeled_graph(labeled_graph_str(g));
        CHECK(back.shape == g.shape);
        CHECK(back.ne == g.ne);
        CHECK(back.edge_weight == g.edge_weight);
        CHECK(back.tile_label == g.tile_label);
        CHECK(labeled_graph_str(back) == labeled_graph_str(g));
    }
    CHECK_THROWS_AS(parse_labeled_graph("shape 1:\n"), Error);  // missing assignments

    // an interior edge can be named from the upper tile too
    std::string twin =
        "shape 2:U\nne N\nedge 1.S = a\nedge 1.W = b\nedge 2.S = m\nedge 1.E = c\n"
        "edge 2.W = d\nedge 2.N = e\nedge 2.E = f\ntile 1 = x\ntile 2 = y\n";
    LabeledSnakeGraph via_alias = parse_labeled_graph(twin);
    CHECK(via_alias.weight(EdgeId{1, Side::N}) == "m");
    CHECK_THROWS_AS(
        parse_labeled_graph(twin + "edge 1.N = other\n"), Error);  // conflicting alias
}
