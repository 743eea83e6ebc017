#include "snakefrac/matchings.hpp"

#include <algorithm>
#include <map>

namespace snakefrac {

Side parse_side(char c) {
    switch (c) {
        case 'S': return Side::S;
        case 'W': return Side::W;
        case 'N': return Side::N;
        case 'E': return Side::E;
        default: throw Error(std::string("bad side character '") + c + "'");
    }
}

std::string edge_str(const EdgeId& e) {
    return std::to_string(e.tile) + "." + side_char(e.side);
}

EdgeId parse_edge(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos || dot + 2 != text.size())
        throw Error("edge format is tile.side: '" + text + "'");
    return EdgeId{std::stoi(text.substr(0, dot)), parse_side(text[dot + 1])};
}

EdgeId canonical_edge(const SnakeShape& s, int tile, Side side) {
    if (s.d == 0) {
        if (tile == 1 && side == Side::S) return {1, Side::S};
        throw Error("single-edge graph has only the edge 1.S");
    }
    if (tile < 1 || tile > s.d) throw Error("tile index out of range");
    if (tile > 1) {
        Turn in = s.turns[static_cast<size_t>(tile - 2)];
        if (side == Side::S && in == Turn::Up) return {tile - 1, Side::N};
        if (side == Side::W && in == Turn::Right) return {tile - 1, Side::E};
    }
    return {tile, side};
}

std::vector<EdgeId> all_edges(const SnakeShape& s) {
    if (s.d == 0) return {{1, Side::S}};
    std::vector<EdgeId> es = {{1, Side::S}, {1, Side::W}, {1, Side::N}, {1, Side::E}};
    for (int i = 2; i <= s.d; ++i) {
        Turn in = s.turns[static_cast<size_t>(i - 2)];
        es.push_back({i, in == Turn::Up ? Side::W : Side::S});
        es.push_back({i, Side::N});
        es.push_back({i, Side::E});
    }
    std::sort(es.begin(), es.end());
    return es;
}

EdgeId chain_edge(const SnakeShape& s, int j) {
    if (j == 0) return {1, Side::S};  // e_0, also the single-edge graph
    if (j < 0 || j > s.d - 1) throw Error("chain edge index out of range");
    return {j, s.turns[static_cast<size_t>(j - 1)] == Turn::Up ? Side::N : Side::E};
}

EdgeId ne_edge(const SnakeShape& s, NeChoice ne) {
    if (s.d < 1) throw Error("single-edge graph has no north-east edges");
    return {s.d, ne == NeChoice::North ? Side::N : Side::E};
}

EdgeId b0_edge(const SnakeShape& s) {
    if (s.d < 1) throw Error("single-edge graph has no b_0 edge");
    return {1, Side::W};
}

EdgeId bn_edge(const SnakeShape& s, NeChoice ne) {
    return ne_edge(s, ne == NeChoice::North ? NeChoice::East : NeChoice::North);
}

std::array<std::pair<int, int>, 2> edge_endpoints(const SnakeShape& s, const EdgeId& e) {
    std::pair<int, int> sw{0, 0};
    if (s.d > 0) {
        auto pos = tile_positions(s);
        sw = pos[static_cast<size_t>(e.tile - 1)];
    }
    auto [x, y] = sw;
    switch (e.side) {
        case Side::S: return {{{x, y}, {x + 1, y}}};
        case Side::W: return {{{x, y}, {x, y + 1}}};
        case Side::N: return {{{x, y + 1}, {x + 1, y + 1}}};
        case Side::E: return {{{x + 1, y}, {x + 1, y + 1}}};
    }
    throw Error("unreachable");
}

bool is_perfect_matching(const SnakeShape& s, const PerfectMatching& m) {
    std::map<std::pair<int, int>, int> covered;
    auto edges = all_edges(s);
    for (const auto& e : edges)
        for (auto v : edge_endpoints(s, e)) covered.emplace(v, 0);
    for (const auto& e : m) {
        if (!std::binary_search(edges.begin(), edges.end(), e)) return false;
        for (auto v : edge_endpoints(s, e)) covered[v] += 1;
    }
    for (const auto& [v, c] : covered)
        if (c != 1) return false;
    return true;
}

std::vector<PerfectMatching> enumerate_matchings(const SnakeShape& s) {
    if (s.d > kEnumerationGuard)
        throw Error("enumeration guard exceeded: d = " + std::to_string(s.d) + " > " +
                    std::to_string(kEnumerationGuard));
    std::vector<EdgeId> edges = all_edges(s);
    std::map<std::pair<int, int>, int> vid;
    for (const auto& e : edges)
        for (auto v : edge_endpoints(s, e)) vid.emplace(v, 0);
    int nv = 0;
    for (auto& [v, id] : vid) id = nv++;
    std::vector<std::array<int, 2>> ends(edges.size());
    std::vector<std::vector<int>> incident(static_cast<size_t>(nv));
    for (size_t k = 0; k < edges.size(); ++k) {
        auto pts = edge_endpoints(s, edges[k]);
        ends[k] = {vid[pts[0]], vid[pts[1]]};
        incident[static_cast<size_t>(ends[k][0])].push_back(static_cast<int>(k));
        incident[static_cast<size_t>(ends[k][1])].push_back(static_cast<int>(k));
    }
    std::vector<PerfectMatching> out;
    std::vector<bool> covered(static_cast<size_t>(nv), false);
    std::vector<int> chosen;
    auto rec = [&](auto&& self) -> void {
        int v = -1;
        for (int u = 0; u < nv; ++u)
            if (!covered[static_cast<size_t>(u)]) {
                v = u;
                break;
            }
        if (v < 0) {
            PerfectMatching m;
            for (int k : chosen) m.push_back(edges[static_cast<size_t>(k)]);
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        for (int k : incident[static_cast<size_t>(v)]) {
            int a = ends[static_cast<size_t>(k)][0], b = ends[static_cast<size_t>(k)][1];
            if (covered[static_cast<size_t>(a)] || covered[static_cast<size_t>(b)]) continue;
            covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = true;
            chosen.push_back(k);
            self(self);
            chosen.pop_back();
            covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = false;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_matchings(const SnakeShape& s) {
    if (s.d == 0) return 1;
    return continuant(snake_to_cf_canonical(s));
}

BigInt count_matchings_dp(const SnakeShape& s) {
    return matching_interface_sum<BigInt>(s, [](const EdgeId&) { return BigInt(1); });
}

Rational weighted_matching_sum(const SnakeShape& s,
                               const std::function<Rational(const EdgeId&)>& w) {
    return matching_interface_sum<Rational>(s, w);
}

std::string matching_str(const PerfectMatching& m) {
    std::string out;
    for (const auto& e : m) {
        if (!out.empty()) out += " ";
        out += edge_str(e);
    }
    return out;
}

}  // namespace snakefrac
