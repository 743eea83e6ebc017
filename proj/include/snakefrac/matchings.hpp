#ifndef SNAKEFRAC_MATCHINGS_HPP
#define SNAKEFRAC_MATCHINGS_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "snakefrac/snake.hpp"

namespace snakefrac {

enum class Side : unsigned char { S, W, N, E };

inline char side_char(Side s) { return std::array{'S', 'W', 'N', 'E'}[static_cast<int>(s)]; }
Side parse_side(char c);

// Interior edges have two tile addresses; the canonical one is the lower
// tile's N or E side. e_0 = (1,S); the single-edge graph reuses (1,S).
struct EdgeId {
    int tile;
    Side side;

    friend bool operator==(const EdgeId& a, const EdgeId& b) {
        return a.tile == b.tile && a.side == b.side;
    }
    friend bool operator<(const EdgeId& a, const EdgeId& b) {
        if (a.tile != b.tile) return a.tile < b.tile;
        return static_cast<int>(a.side) < static_cast<int>(b.side);
    }
};

std::string edge_str(const EdgeId& e);  // "3.N"
EdgeId parse_edge(const std::string& text);

EdgeId canonical_edge(const SnakeShape& s, int tile, Side side);
std::vector<EdgeId> all_edges(const SnakeShape& s);

// Chain edges: e_0, the interior edges e_1..e_{d-1}, and e_d per choice.
EdgeId chain_edge(const SnakeShape& s, int j);
EdgeId ne_edge(const SnakeShape& s, NeChoice ne);
// The companion boundary edges b_0 (south-west) and b_n (north-east).
EdgeId b0_edge(const SnakeShape& s);
EdgeId bn_edge(const SnakeShape& s, NeChoice ne);

// Both lattice endpoints of an edge, tiles embedded as unit squares.
std::array<std::pair<int, int>, 2> edge_endpoints(const SnakeShape& s, const EdgeId& e);

using PerfectMatching = std::vector<EdgeId>;  // sorted canonical edges

bool is_perfect_matching(const SnakeShape& s, const PerfectMatching& m);

// Complete list in lexicographic order of the sorted edge lists.
// Guarded at d <= 25; the count grows like a Fibonacci number of d.
std::vector<PerfectMatching> enumerate_matchings(const SnakeShape& s);
inline constexpr int kEnumerationGuard = 25;

// Fast path via the canonical continued fraction.
BigInt count_matchings(const SnakeShape& s);

// Independent fast path: tile-by-tile interface sum. The state tracks
// which endpoints of the interface edge e_k are already covered; starting
// from e_0 only the none/both states ever occur, weighted by the edges
// chosen in each transition.
template <typename T>
T matching_interface_sum(const SnakeShape& s, const std::function<T(const EdgeId&)>& w) {
    if (s.d == 0) return w(EdgeId{1, Side::S});
    T full = w(EdgeId{1, Side::S});  // e_0 in the matching
    T none = T(1);
    Turn entered = Turn::Up;
    for (int k = 1; k <= s.d - 1; ++k) {
        Turn leaving = s.turns[static_cast<size_t>(k - 1)];
        T nfull, nnone;
        if (entered == leaving) {  // straight: e_{k-1}, e_k opposite in tile k
            EdgeId f1{k, entered == Turn::Up ? Side::W : Side::S};
            EdgeId f2{k, entered == Turn::Up ? Side::E : Side::N};
            EdgeId ek{k, entered == Turn::Up ? Side::N : Side::E};
            nfull = full * w(ek) + none * w(f1) * w(f2);
            nnone = full;
        } else {  // zigzag: they share a corner
            EdgeId far_flank{k, entered == Turn::Up ? Side::W : Side::S};
            EdgeId near_flank{k, entered == Turn::Up ? Side::N : Side::E};
            EdgeId ek{k, entered == Turn::Up ? Side::E : Side::N};
            nfull = full * w(near_flank) + none * w(far_flank) * w(ek);
            nnone = none * w(far_flank);
        }
        full = nfull;
        none = nnone;
        entered = leaving;
    }
    if (entered == Turn::Up)
        return full * w(EdgeId{s.d, Side::N}) + none * w(EdgeId{s.d, Side::W}) * w(EdgeId{s.d, Side::E});
    return full * w(EdgeId{s.d, Side::E}) + none * w(EdgeId{s.d, Side::S}) * w(EdgeId{s.d, Side::N});
}

BigInt count_matchings_dp(const SnakeShape& s);
Rational weighted_matching_sum(const SnakeShape& s, const std::function<Rational(const EdgeId&)>& w);

std::string matching_str(const PerfectMatching& m);

}  // namespace snakefrac

#endif
