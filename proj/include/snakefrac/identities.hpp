#ifndef SNAKEFRAC_IDENTITIES_HPP
#define SNAKEFRAC_IDENTITIES_HPP

#include <random>
#include <string>

#include "snakefrac/labeled.hpp"

namespace snakefrac {

struct IdentityReport {
    std::string instance;
    BigInt lhs, rhs;
    bool holds;
};

// Continuant of any integer sequence by the three-term recurrence; the
// derived sequences below may contain zeros.
BigInt continuant_ints(const std::vector<BigInt>& entries);

// N[a_lo,...,a_hi], 1-based inclusive window; the empty window is 1 and
// the window one step past empty is 0.
BigInt continuant_window(const ContinuedFraction& cf, int lo, int hi);

// N[a_1..a_n] = N[a_1..a_i] N[a_{i+1}..a_n] + N[a_1..a_{i-1}] N[a_{i+2}..a_n].
IdentityReport check_a(const ContinuedFraction& cf, int i);

// N[a_1..a_{i+j}] N[a_i..a_n] = N[a_1..a_n] N[a_i..a_{i+j}]
//                             + (-1)^j N[a_1..a_{i-2}] N[a_{i+j+2}..a_n].
IdentityReport check_b(const ContinuedFraction& cf, int i, int j);

// Overlap identity for two continued fractions sharing the window
// [a_i..a_{i+k}] = [b_j..b_{j+k}]. The correction sign depends on which
// side of a_{i+k+1} != b_{j+k+1} holds.
IdentityReport check_c(const ContinuedFraction& cfa, const ContinuedFraction& cfb, int i, int j,
                       int k);

struct LaurentIdentityReport {
    std::string instance;
    LaurentPoly lhs, rhs;
    bool holds;
    LaurentIdentityReport(std::string ins, LaurentPoly l, LaurentPoly r)
        : instance(std::move(ins)), lhs(std::move(l)), rhs(std::move(r)), holds(lhs == rhs) {}
};

// Grafting with the single edge b_i, at the Laurent level:
// b_i x(G) = x(G[a_1..a_i]) x(G[a_{i+1}..a_n]) + x(G[a_1..a_{i-1}]) x(G[a_{i+2}..a_n]).
LaurentIdentityReport check_grafting_laurent(const LabeledSnakeGraph& g, int i);

// Seeded instance generators for fuzzing.
ContinuedFraction random_cf(std::mt19937_64& rng, int max_len, int max_coeff);

struct COverlapInstance {
    ContinuedFraction a, b;
    int i, j, k;
};
// greater_branch selects a_{i+k+1} > b_{j+k+1} vs the < branch.
COverlapInstance random_c_instance(std::mt19937_64& rng, bool greater_branch);

// Random shape with labels following the local surface rule, reusing
// names from a small pool so repeated weights get exercised.
LabeledSnakeGraph random_valid_labeling(std::mt19937_64& rng, int max_d);

}  // namespace snakefrac

#endif
