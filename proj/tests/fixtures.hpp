#ifndef SNAKEFRAC_TEST_FIXTURES_HPP
#define SNAKEFRAC_TEST_FIXTURES_HPP

#include <functional>

#include "snakefrac/labeled.hpp"

namespace snakefrac::testing {

// Every positive continued fraction with coefficient sum = total.
inline void for_each_composition(int total,
                                 const std::function<void(const ContinuedFraction&)>& fn) {
    std::vector<BigInt> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            fn(ContinuedFraction(cur));
            return;
        }
        for (int a = 1; a <= left; ++a) {
            cur.emplace_back(a);
            self(self, left - a);
            cur.pop_back();
        }
    };
    rec(rec, total);
}

// All 2^(d-1) snake shapes with d tiles.
inline void for_each_shape(int d, const std::function<void(const SnakeShape&)>& fn) {
    int turns = d > 1 ? d - 1 : 0;
    for (int mask = 0; mask < (1 << turns); ++mask) {
        std::vector<Turn> ts;
        for (int k = 0; k < turns; ++k) ts.push_back(mask >> k & 1 ? Turn::Up : Turn::Right);
        fn(SnakeShape(d, std::move(ts)));
    }
}

// The 5-tile example graph: shape of [2,3,1] with tiles labeled x1..x5
// and chain edges y0..y5. Every boundary flank follows the local surface
// rule, with b0 and b3 on the two corner edges.
inline LabeledSnakeGraph example_graph(NeChoice ne) {
    LabeledSnakeGraph g;
    g.shape = parse_shape("5:RRUR");
    g.ne = ne;
    for (int t = 1; t <= 5; ++t) g.tile_label[t] = "x" + std::to_string(t);
    g.edge_weight[{1, Side::S}] = "y0";
    g.edge_weight[{1, Side::W}] = "b0";
    g.edge_weight[{1, Side::N}] = "x2";
    g.edge_weight[{1, Side::E}] = "y1";
    g.edge_weight[{2, Side::S}] = "x1";
    g.edge_weight[{2, Side::N}] = "x3";
    g.edge_weight[{2, Side::E}] = "y2";
    g.edge_weight[{3, Side::S}] = "x2";
    g.edge_weight[{3, Side::N}] = "y3";
    g.edge_weight[{3, Side::E}] = "x4";
    g.edge_weight[{4, Side::W}] = "x3";
    g.edge_weight[{4, Side::N}] = "x5";
    g.edge_weight[{4, Side::E}] = "y4";
    g.edge_weight[{5, Side::S}] = "x4";
    g.edge_weight[{5, Side::N}] = "b3";
    g.edge_weight[{5, Side::E}] = "y5";
    g.vars = make_varset(
        {"b0", "b3", "x1", "x2", "x3", "x4", "x5", "y0", "y1", "y2", "y3", "y4", "y5"});
    check_labeled(g);
    return g;
}

}  // namespace snakefrac::testing

#endif
