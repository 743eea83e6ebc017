#ifndef SNAKEFRAC_SNAKE_HPP
#define SNAKEFRAC_SNAKE_HPP

#include <string>
#include <utility>
#include <vector>

#include "snakefrac/cf.hpp"

namespace snakefrac {

// Placement of tile G_{i+1} relative to tile G_i.
enum class Turn : unsigned char { Up, Right };
enum class Sign : signed char { Minus = -1, Plus = 1 };
enum class NeChoice : unsigned char { North, East };

inline Turn flip(Turn t) { return t == Turn::Up ? Turn::Right : Turn::Up; }
inline Sign flip(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }

// Tile chain of a snake graph. d = 0 is the single-edge graph.
struct SnakeShape {
    int d = 0;
    std::vector<Turn> turns;  // length max(d-1, 0); turns[i] places tile i+2

    SnakeShape() = default;
    SnakeShape(int tiles, std::vector<Turn> ts);

    friend bool operator==(const SnakeShape& a, const SnakeShape& b) {
        return a.d == b.d && a.turns == b.turns;
    }
};

bool is_straight(const SnakeShape& s);  // all tiles in one row or column
bool is_zigzag(const SnakeShape& s);    // no three consecutive tiles straight

SnakeShape parse_shape(const std::string& text);  // "10:RRURRRUUR", "1:", "0:"
std::string shape_str(const SnakeShape& s);

// Lattice positions of the tiles' SW corners, G_1 at the origin.
std::vector<std::pair<int, int>> tile_positions(const SnakeShape& s);

// Signs (f(e_0),...,f(e_{d-1})) of the south edge and the interior edges,
// normalized to f(e_0) = Minus. The sign is constant across a zigzag step
// and flips across a straight step.
std::vector<Sign> interior_signs(const SnakeShape& s);

// Sign of the chosen edge e_d in the north-east corner.
Sign ne_sign(const SnakeShape& s, NeChoice ne);

struct CfSnake {
    SnakeShape shape;
    std::vector<Sign> signs;  // (f(e_0),...,f(e_d)), length d+1
    NeChoice ne;              // edge e_d singled out by the sign sequence
};

// The snake graph of a positive continued fraction; d = sum(a_i) - 1.
CfSnake cf_to_snake(const ContinuedFraction& cf);

// Map F: run lengths of (f(e_0),...,f(e_{d-1}),f(e_d)). Needs d >= 1.
ContinuedFraction snake_to_cf(const SnakeShape& s, NeChoice ne);

// Map F': the sign of e_{d-1} is taken twice; image has last coefficient >= 2.
ContinuedFraction snake_to_cf_canonical(const SnakeShape& s);

// Partial sums l_i = a_1 + ... + a_i; the sign changes at tiles G_{l_i}.
std::vector<long long> ell_positions(const ContinuedFraction& cf);

// Tiles [from..to] of s as a standalone shape, re-normalized so that the
// entering edge becomes the new south edge e_0. from = to+1 yields the
// single-edge shape. Returns the shape and whether the tile frame was
// transposed (sides S<->W, N<->E) during normalization.
struct ShapeRestriction {
    SnakeShape shape;
    bool transposed = false;
};
ShapeRestriction restrict_shape(const SnakeShape& s, int from, int to);

// Zigzag piece H_i of G[cf]: tiles G_{l_{i-1}+1} .. G_{l_i - 1}.
SnakeShape subgraph_H(const SnakeShape& s, const ContinuedFraction& cf, int i);

// Shape of G[a_2,...,a_n], the complement of H_1.
SnakeShape remove_H1(const SnakeShape& s, const ContinuedFraction& cf);

SnakeShape rotate180(const SnakeShape& s);

// m(G) / m(G \ H_1) as a reduced rational; equals Ev(F'(G)).
Rational chi(const SnakeShape& s);

// All snake graphs with exactly N perfect matchings, as (canonical CF,
// shape) pairs sorted lexicographically by CF. Cardinality is phi(N).
std::vector<std::pair<ContinuedFraction, SnakeShape>> snakes_with_matching_count(const BigInt& N);

}  // namespace snakefrac

#endif
