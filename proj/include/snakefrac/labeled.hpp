#ifndef SNAKEFRAC_LABELED_HPP
#define SNAKEFRAC_LABELED_HPP

#include <map>
#include <string>
#include <vector>

#include "snakefrac/laurent.hpp"
#include "snakefrac/matchings.hpp"

namespace snakefrac {

// Snake shape with a variable name on every canonical edge and every tile.
// The single-edge graph (d = 0) carries one weight under the key (1,S).
struct LabeledSnakeGraph {
    SnakeShape shape;
    NeChoice ne = NeChoice::North;
    VarSetPtr vars;
    std::map<EdgeId, std::string> edge_weight;
    std::map<int, std::string> tile_label;

    const std::string& weight(const EdgeId& e) const;
    const std::string& label(int tile) const;
};

// Completeness of the weight/label maps against the shape.
void check_labeled(const LabeledSnakeGraph& g);

// Continued fraction the graph is read as, per its NeChoice.
ContinuedFraction reading(const LabeledSnakeGraph& g);

// Condition for the quotient formula and the closed form of x(H_i): the
// local surface rule. Each boundary flank of tile t carries the label of
// tile t+1 (N/E flank) or tile t-1 (S/W flank); the chain edges e_0..e_d
// and the corner edges b_0, b_n are unconstrained. In particular the two
// opposite boundary edges around each straight triple share that triple's
// middle label.
bool labels_applicable(const LabeledSnakeGraph& g);

LaurentPoly weight_poly(const LabeledSnakeGraph& g, const EdgeId& e);

// Product of the edge weights of a matching; errors if m is not a
// perfect matching of the shape.
LaurentPoly matching_weight(const LabeledSnakeGraph& g, const PerfectMatching& m);

// Product of all tile labels, with multiplicity.
LaurentPoly cross(const LabeledSnakeGraph& g);

// Sum of matching weights divided by cross.
LaurentPoly cluster_expansion(const LabeledSnakeGraph& g);

// Tiles [from..to] with inherited weights. from = to+1 gives the single
// parent edge e_{from-1} as a degenerate graph.
LabeledSnakeGraph restrict_labeled(const LabeledSnakeGraph& g, int from, int to);

// Names (b_0, b_1, ..., b_n): boundary edge, sign-change tile labels,
// boundary edge.
std::vector<std::string> boundary_data(const LabeledSnakeGraph& g);

// Expansion of the zigzag piece H_i, by matchings and by the closed form.
LaurentPoly x_H(const LabeledSnakeGraph& g, int i);
LaurentPoly x_H_formula(const LabeledSnakeGraph& g, int i);

// Continued-fraction entries L_1..L_n of the quotient expansion.
std::vector<LaurentPoly> L_sequence(const LabeledSnakeGraph& g);

// The graph of [a_2,...,a_n]; for n = 1 the single b_n edge.
LabeledSnakeGraph gamma_prime(const LabeledSnakeGraph& g);

struct QuotientReport {
    bool holds;
    LaurentPoly lhs, rhs;  // the two cross-multiplied sides
};

// Cross-multiplied form of x_gamma / x_gamma' = [L_1,...,L_n]:
// expansion(g) * N[L_2..L_n] = expansion(gamma') * N[L_1..L_n].
QuotientReport verify_quotient(const LabeledSnakeGraph& g);

// x(G[a_lo..a_hi]) as a labeled piece of g, with the boundary conventions
// x(G[a_1..a_0]) = b_0, x(G[a_{n+1}..a_n]) = b_n, and 0 one step beyond.
LaurentPoly x_piece(const LabeledSnakeGraph& g, int lo, int hi);

// Fresh distinct variables everywhere: tiles x1..xd, chain edges e0..ed,
// remaining boundary edges named after tile and side.
LabeledSnakeGraph distinct_labeling(const SnakeShape& s, NeChoice ne);

// Labeling following the local surface rule, with distinct tile labels
// x1..xd, chain edges e0..ed and corner edges b0, bn.
LabeledSnakeGraph surface_labeling(const SnakeShape& s, NeChoice ne);

struct ComplexSpecialization {
    LabeledSnakeGraph graph;
    std::map<std::string, GaussRational> point;
    ContinuedFraction cf;  // the ceilings a_j = ceil|z_j|
};

// Snake graph of the ceilings with weight z_j - a_j + 1 on edge
// e_{l_j - 1} and 1 elsewhere; under the point, eval(L_i) = z_i.
ComplexSpecialization complex_specialize(const std::vector<GaussRational>& zs);

// Text form: "shape d:TURNS", optional "ne N|E", then one line per edge
// and tile assignment.
LabeledSnakeGraph parse_labeled_graph(const std::string& text);
std::string labeled_graph_str(const LabeledSnakeGraph& g);

}  // namespace snakefrac

#endif
