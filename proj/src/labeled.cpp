#include "snakefrac/labeled.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace snakefrac {

const std::string& LabeledSnakeGraph::weight(const EdgeId& e) const {
    auto it = edge_weight.find(e);
    if (it == edge_weight.end()) throw Error("no weight for edge " + edge_str(e));
    return it->second;
}

const std::string& LabeledSnakeGraph::label(int tile) const {
    auto it = tile_label.find(tile);
    if (it == tile_label.end()) throw Error("no label for tile " + std::to_string(tile));
    return it->second;
}

void check_labeled(const LabeledSnakeGraph& g) {
    if (!g.vars) throw Error("labeled graph without variable set");
    for (const auto& e : all_edges(g.shape))
        if (!g.vars->contains(g.weight(e))) throw Error("edge weight not in variable set");
    for (int t = 1; t <= g.shape.d; ++t)
        if (!g.vars->contains(g.label(t))) throw Error("tile label not in variable set");
}

ContinuedFraction reading(const LabeledSnakeGraph& g) {
    if (g.shape.d == 0) return ContinuedFraction{1};
    return snake_to_cf(g.shape, g.ne);
}

bool labels_applicable(const LabeledSnakeGraph& g) {
    if (g.shape.d == 0) return true;
    std::set<EdgeId> free_edges{b0_edge(g.shape), bn_edge(g.shape, g.ne)};
    for (int j = 0; j <= g.shape.d - 1; ++j) free_edges.insert(chain_edge(g.shape, j));
    free_edges.insert(ne_edge(g.shape, g.ne));
    for (const auto& e : all_edges(g.shape)) {
        if (free_edges.count(e)) continue;
        // boundary flank: next tile's label above/right, previous below/left
        const std::string& expect = e.side == Side::N || e.side == Side::E
                                        ? g.label(e.tile + 1)
                                        : g.label(e.tile - 1);
        if (g.weight(e) != expect) return false;
    }
    return true;
}

LaurentPoly weight_poly(const LabeledSnakeGraph& g, const EdgeId& e) {
    return LaurentPoly::var(g.vars, g.weight(e));
}

LaurentPoly matching_weight(const LabeledSnakeGraph& g, const PerfectMatching& m) {
    if (!is_perfect_matching(g.shape, m)) throw Error("not a perfect matching of this shape");
    std::map<std::string, int> exps;
    for (const auto& e : m) exps[g.weight(e)] += 1;
    return LaurentPoly::monomial(g.vars, exps);
}

LaurentPoly cross(const LabeledSnakeGraph& g) {
    std::map<std::string, int> exps;
    for (int t = 1; t <= g.shape.d; ++t) exps[g.label(t)] += 1;
    return LaurentPoly::monomial(g.vars, exps);
}

LaurentPoly cluster_expansion(const LabeledSnakeGraph& g) {
    LaurentPoly sum = LaurentPoly::zero(g.vars);
    for (const auto& m : enumerate_matchings(g.shape)) sum = sum + matching_weight(g, m);
    return div_by_monomial(sum, cross(g));
}

namespace {

Side map_side(Side s, bool transposed) {
    if (!transposed) return s;
    switch (s) {
        case Side::S: return Side::W;
        case Side::W: return Side::S;
        case Side::N: return Side::E;
        case Side::E: return Side::N;
    }
    throw Error("unreachable");
}

// Chain edge e_j extended to j = d, where it is the chosen NE edge.
EdgeId chain_or_ne(const LabeledSnakeGraph& g, int j) {
    if (j == g.shape.d && g.shape.d >= 1) return ne_edge(g.shape, g.ne);
    return chain_edge(g.shape, j);
}

}  // namespace

LabeledSnakeGraph restrict_labeled(const LabeledSnakeGraph& g, int from, int to) {
    ShapeRestriction r = restrict_shape(g.shape, from, to);
    LabeledSnakeGraph sub;
    sub.shape = r.shape;
    sub.vars = g.vars;
    if (r.shape.d == 0) {
        sub.edge_weight[{1, Side::S}] = g.weight(chain_or_ne(g, from - 1));
        return sub;
    }
    for (const auto& e : all_edges(sub.shape)) {
        EdgeId parent = canonical_edge(g.shape, from + e.tile - 1, map_side(e.side, r.transposed));
        sub.edge_weight[e] = g.weight(parent);
    }
    for (int t = 1; t <= sub.shape.d; ++t) sub.tile_label[t] = g.label(from + t - 1);
    if (to == g.shape.d && g.shape.d >= 1)
        sub.ne = r.transposed ? (g.ne == NeChoice::North ? NeChoice::East : NeChoice::North) : g.ne;
    return sub;
}

std::vector<std::string> boundary_data(const LabeledSnakeGraph& g) {
    if (g.shape.d < 1) throw Error("boundary data needs at least one tile");
    ContinuedFraction cf = reading(g);
    auto ell = ell_positions(cf);
    std::vector<std::string> b;
    b.push_back(g.weight(b0_edge(g.shape)));
    for (int i = 1; i <= cf.n() - 1; ++i)
        b.push_back(g.label(static_cast<int>(ell[static_cast<size_t>(i - 1)])));
    b.push_back(g.weight(bn_edge(g.shape, g.ne)));
    return b;
}

namespace {

// Tile range of H_i; empty range encodes the single edge e_{l_{i-1}}.
std::pair<int, int> h_range(const ContinuedFraction& cf, int i) {
    auto ell = ell_positions(cf);
    if (i < 1 || i > cf.n()) throw Error("H index out of range");
    long long lo = i == 1 ? 0 : ell[static_cast<size_t>(i - 2)];
    return {static_cast<int>(lo) + 1, static_cast<int>(ell[static_cast<size_t>(i - 1)]) - 1};
}

}  // namespace

LaurentPoly x_H(const LabeledSnakeGraph& g, int i) {
    auto [from, to] = h_range(reading(g), i);
    return cluster_expansion(restrict_labeled(g, from, to));
}

LaurentPoly x_H_formula(const LabeledSnakeGraph& g, int i) {
    ContinuedFraction cf = reading(g);
    auto ell = ell_positions(cf);
    if (i < 1 || i > cf.n()) throw Error("H index out of range");
    // x_0 = b_0 and x_{d+1} = b_n extend the tile labels.
    auto label_at = [&](long long j) -> const std::string& {
        if (j == 0) return g.weight(b0_edge(g.shape));
        if (j == g.shape.d + 1) return g.weight(bn_edge(g.shape, g.ne));
        return g.label(static_cast<int>(j));
    };
    long long lo = i == 1 ? 0 : ell[static_cast<size_t>(i - 2)];
    long long hi = ell[static_cast<size_t>(i - 1)];
    LaurentPoly sum = LaurentPoly::zero(g.vars);
    for (long long j = lo; j <= hi - 1; ++j) {
        std::map<std::string, int> exps;
        exps[g.weight(chain_or_ne(g, static_cast<int>(j)))] += 1;
        exps[label_at(lo)] += 1;
        exps[label_at(hi)] += 1;
        exps[label_at(j)] -= 1;
        exps[label_at(j + 1)] -= 1;
        sum = sum + LaurentPoly::monomial(g.vars, exps);
    }
    return sum;
}

std::vector<LaurentPoly> L_sequence(const LabeledSnakeGraph& g) {
    if (!labels_applicable(g)) throw Error("labels do not satisfy the quotient conditions");
    if (g.shape.d == 0) return {cluster_expansion(g)};  // no b_1 edge exists for [1]
    ContinuedFraction cf = reading(g);
    int n = cf.n();
    std::vector<std::string> b = boundary_data(g);
    std::vector<LaurentPoly> L;
    for (int i = 1; i <= n; ++i) {
        std::map<std::string, int> exps;
        if (i == 1) {
            exps[b[1]] -= 1;
        } else if (i % 2 == 1) {
            exps[b[0]] += 1;
            for (int j = 2; j <= i - 3; j += 2) exps[b[static_cast<size_t>(j)]] += 2;
            exps[b[static_cast<size_t>(i - 1)]] += 1;
            for (int j = 1; j <= i - 2; j += 2) exps[b[static_cast<size_t>(j)]] -= 2;
            exps[b[static_cast<size_t>(i)]] -= 1;
        } else {
            for (int j = 1; j <= i - 3; j += 2) exps[b[static_cast<size_t>(j)]] += 2;
            exps[b[static_cast<size_t>(i - 1)]] += 1;
            exps[b[0]] -= 1;
            for (int j = 2; j <= i - 2; j += 2) exps[b[static_cast<size_t>(j)]] -= 2;
            exps[b[static_cast<size_t>(i)]] -= 1;
        }
        L.push_back(x_H(g, i) * LaurentPoly::monomial(g.vars, exps));
    }
    return L;
}

LabeledSnakeGraph gamma_prime(const LabeledSnakeGraph& g) {
    ContinuedFraction cf = reading(g);
    if (cf.n() == 1) {
        LabeledSnakeGraph degenerate;
        degenerate.vars = g.vars;
        degenerate.edge_weight[{1, Side::S}] = g.weight(bn_edge(g.shape, g.ne));
        return degenerate;
    }
    auto ell = ell_positions(cf);
    return restrict_labeled(g, static_cast<int>(ell[0]) + 1, g.shape.d);
}

QuotientReport verify_quotient(const LabeledSnakeGraph& g) {
    if (g.shape.d == 0) throw Error("the single-edge graph has no quotient partner");
    std::vector<LaurentPoly> L = L_sequence(g);
    std::vector<LaurentPoly> tail(L.begin() + 1, L.end());
    LaurentPoly one = LaurentPoly::one(g.vars), zero = LaurentPoly::zero(g.vars);
    LaurentPoly lhs = cluster_expansion(g) * continuant_ring(tail, one, zero);
    LaurentPoly rhs = cluster_expansion(gamma_prime(g)) * continuant_ring(L, one, zero);
    return {lhs == rhs, lhs, rhs};
}

LaurentPoly x_piece(const LabeledSnakeGraph& g, int lo, int hi) {
    ContinuedFraction cf = reading(g);
    int n = cf.n();
    if (lo == hi + 2) return LaurentPoly::zero(g.vars);
    if (lo == 1 && hi == 0) return weight_poly(g, b0_edge(g.shape));
    if (lo == n + 1 && hi == n) return weight_poly(g, bn_edge(g.shape, g.ne));
    if (lo < 1 || hi > n || lo > hi) throw Error("piece range out of bounds");
    auto ell = ell_positions(cf);
    int from = (lo == 1 ? 0 : static_cast<int>(ell[static_cast<size_t>(lo - 2)])) + 1;
    int to = static_cast<int>(ell[static_cast<size_t>(hi - 1)]) - 1;
    return cluster_expansion(restrict_labeled(g, from, to));
}

LabeledSnakeGraph distinct_labeling(const SnakeShape& s, NeChoice ne) {
    LabeledSnakeGraph g;
    g.shape = s;
    g.ne = ne;
    std::vector<std::string> names;
    for (int t = 1; t <= s.d; ++t) {
        g.tile_label[t] = "x" + std::to_string(t);
        names.push_back(g.tile_label[t]);
    }
    std::map<EdgeId, int> chain;
    for (int j = 0; j <= s.d - 1; ++j) chain.emplace(chain_edge(s, j), j);
    if (s.d >= 1) chain.emplace(ne_edge(s, ne), s.d);
    for (const auto& e : all_edges(s)) {
        std::string name;
        if (s.d == 0)
            name = "e0";
        else if (auto it = chain.find(e); it != chain.end())
            name = "e" + std::to_string(it->second);
        else
            name = std::string("c") + std::to_string(e.tile) + side_char(e.side);
        g.edge_weight[e] = name;
        names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    g.vars = make_varset(std::move(names));
    return g;
}

LabeledSnakeGraph surface_labeling(const SnakeShape& s, NeChoice ne) {
    LabeledSnakeGraph g;
    g.shape = s;
    g.ne = ne;
    std::vector<std::string> names;
    for (int t = 1; t <= s.d; ++t) {
        g.tile_label[t] = "x" + std::to_string(t);
        names.push_back(g.tile_label[t]);
    }
    std::map<EdgeId, int> chain;
    for (int j = 0; j <= s.d - 1; ++j) chain.emplace(chain_edge(s, j), j);
    if (s.d >= 1) chain.emplace(ne_edge(s, ne), s.d);
    for (const auto& e : all_edges(s)) {
        std::string name;
        if (s.d == 0)
            name = "e0";
        else if (auto it = chain.find(e); it != chain.end())
            name = "e" + std::to_string(it->second);
        else if (e == b0_edge(s))
            name = "b0";
        else if (e == bn_edge(s, ne))
            name = "bn";
        else
            name = e.side == Side::N || e.side == Side::E ? g.label(e.tile + 1)
                                                          : g.label(e.tile - 1);
        g.edge_weight[e] = name;
        if (name[0] != 'x') names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    g.vars = make_varset(std::move(names));
    return g;
}

ComplexSpecialization complex_specialize(const std::vector<GaussRational>& zs) {
    if (zs.empty()) throw Error("empty entry list");
    std::vector<BigInt> as;
    for (const auto& z : zs) {
        BigInt a = ceil_sqrt(z.norm());
        if (a == 0) throw Error("specialization requires nonzero entries");
        as.push_back(a);
    }
    ComplexSpecialization out{LabeledSnakeGraph{}, {}, ContinuedFraction(as)};
    CfSnake built = cf_to_snake(out.cf);
    out.graph = surface_labeling(built.shape, built.ne);
    for (const auto& name : out.graph.vars->names()) out.point[name] = GaussRational(1);
    auto ell = ell_positions(out.cf);
    for (size_t j = 0; j < zs.size(); ++j) {
        EdgeId e = chain_or_ne(out.graph, static_cast<int>(ell[j]) - 1);
        out.point[out.graph.weight(e)] = zs[j] - GaussRational(Rational(as[j])) + GaussRational(1);
    }
    return out;
}

// ---- text form ----

LabeledSnakeGraph parse_labeled_graph(const std::string& text) {
    LabeledSnakeGraph g;
    std::map<EdgeId, std::string> edges;
    std::map<int, std::string> tiles;
    bool have_shape = false, have_ne = false;
    NeChoice ne = NeChoice::North;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    auto remember = [&](const std::string& n) {
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "shape") {
            std::string s;
            ls >> s;
            g.shape = parse_shape(s);
            have_shape = true;
        } else if (head == "ne") {
            std::string s;
            ls >> s;
            if (s != "N" && s != "E") throw Error("ne must be N or E");
            ne = s == "N" ? NeChoice::North : NeChoice::East;
            have_ne = true;
        } else if (head == "edge") {
            std::string e, eq, var;
            ls >> e >> eq >> var;
            if (eq != "=" || var.empty()) throw Error("edge line format: edge 1.S = name");
            edges[parse_edge(e)] = var;
            remember(var);
        } else if (head == "tile") {
            std::string t, eq, var;
            ls >> t >> eq >> var;
            if (eq != "=" || var.empty()) throw Error("tile line format: tile 1 = name");
            tiles[std::stoi(t)] = var;
            remember(var);
        } else {
            throw Error("unknown line '" + line + "'");
        }
    }
    if (!have_shape) throw Error("missing shape line");
    if (g.shape.d >= 1) {
        if (have_ne) {
            g.ne = ne;
        } else {
            // default: the canonical choice, extending the last interior sign
            Sign last = interior_signs(g.shape).back();
            g.ne = ne_sign(g.shape, NeChoice::East) == last ? NeChoice::East : NeChoice::North;
        }
    }
    // interior edges may be addressed from either side
    std::map<EdgeId, std::string> canonical;
    for (const auto& [e, name] : edges) {
        EdgeId c = canonical_edge(g.shape, e.tile, e.side);
        auto [it, fresh] = canonical.emplace(c, name);
        if (!fresh && it->second != name)
            throw Error("conflicting weights for edge " + edge_str(c));
    }
    for (const auto& e : all_edges(g.shape)) {
        auto it = canonical.find(e);
        if (it == canonical.end()) throw Error("missing weight for edge " + edge_str(e));
        g.edge_weight[e] = it->second;
    }
    for (int t = 1; t <= g.shape.d; ++t) {
        auto it = tiles.find(t);
        if (it == tiles.end()) throw Error("missing label for tile " + std::to_string(t));
        g.tile_label[t] = it->second;
    }
    if (tiles.size() != g.tile_label.size()) throw Error("label on a tile outside the shape");
    g.vars = make_varset(std::move(names));
    return g;
}

std::string labeled_graph_str(const LabeledSnakeGraph& g) {
    std::string out = "shape " + shape_str(g.shape) + "\n";
    if (g.shape.d >= 1) out += std::string("ne ") + (g.ne == NeChoice::North ? "N" : "E") + "\n";
    for (const auto& e : all_edges(g.shape))
        out += "edge " + edge_str(e) + " = " + g.weight(e) + "\n";
    for (int t = 1; t <= g.shape.d; ++t)
        out += "tile " + std::to_string(t) + " = " + g.label(t) + "\n";
    return out;
}

}  // namespace snakefrac
