#include "snakefrac/identities.hpp"

#include <algorithm>
#include <sstream>

namespace snakefrac {

BigInt continuant_ints(const std::vector<BigInt>& entries) {
    return continuant_ring(entries, BigInt(1), BigInt(0));
}

BigInt continuant_window(const ContinuedFraction& cf, int lo, int hi) {
    if (lo == hi + 1) return 1;
    if (lo == hi + 2) return 0;
    if (lo < 1 || hi > cf.n() || lo > hi) throw Error("continuant window out of range");
    std::vector<BigInt> w(cf.coeffs.begin() + (lo - 1), cf.coeffs.begin() + hi);
    return continuant_ints(w);
}

IdentityReport check_a(const ContinuedFraction& cf, int i) {
    int n = cf.n();
    if (i < 1 || i > n) throw Error("index i out of range");
    BigInt lhs = continuant_window(cf, 1, n);
    BigInt rhs = continuant_window(cf, 1, i) * continuant_window(cf, i + 1, n) +
                 continuant_window(cf, 1, i - 1) * continuant_window(cf, i + 2, n);
    std::ostringstream d;
    d << "a: [" << cf_str(cf) << "] i=" << i;
    return {d.str(), lhs, rhs, lhs == rhs};
}

IdentityReport check_b(const ContinuedFraction& cf, int i, int j) {
    int n = cf.n();
    if (i < 1 || j < 0 || i + j > n - 1) throw Error("indices out of range");
    BigInt lhs = continuant_window(cf, 1, i + j) * continuant_window(cf, i, n);
    BigInt sign = j % 2 == 0 ? 1 : -1;
    BigInt rhs = continuant_window(cf, 1, n) * continuant_window(cf, i, i + j) +
                 sign * continuant_window(cf, 1, i - 2) * continuant_window(cf, i + j + 2, n);
    std::ostringstream d;
    d << "b: [" << cf_str(cf) << "] i=" << i << " j=" << j;
    return {d.str(), lhs, rhs, lhs == rhs};
}

IdentityReport check_c(const ContinuedFraction& cfa, const ContinuedFraction& cfb, int i, int j,
                       int k) {
    const auto& a = cfa.coeffs;
    const auto& b = cfb.coeffs;
    int n = cfa.n(), m = cfb.n();
    auto at = [](const std::vector<BigInt>& v, int idx) -> const BigInt& {
        return v[static_cast<size_t>(idx - 1)];
    };
    if (i < 3 || j < 3 || k < 0) throw Error("overlap hypotheses need i,j > 2 and k >= 0");
    if (i + k + 1 > n || j + k + 1 > m) throw Error("overlap window exceeds a sequence");
    for (int t = 0; t <= k; ++t)
        if (at(a, i + t) != at(b, j + t)) throw Error("windows [a_i..a_{i+k}], [b_j..b_{j+k}] differ");
    if (!(at(a, i - 1) < at(b, j - 1))) throw Error("requires a_{i-1} < b_{j-1}");
    if (at(a, i + k + 1) == at(b, j + k + 1)) throw Error("requires a_{i+k+1} != b_{j+k+1}");
    bool greater = at(a, i + k + 1) > at(b, j + k + 1);
    if (greater && j + k + 2 > m) throw Error("branch needs b_{j+k+2} to exist");
    if (!greater && i + k + 2 > n) throw Error("branch needs a_{i+k+2} to exist");

    std::vector<BigInt> main1(a.begin(), a.begin() + (i - 1));
    main1.insert(main1.end(), b.begin() + (j - 1), b.end());
    std::vector<BigInt> main2(b.begin(), b.begin() + (j - 1));
    main2.insert(main2.end(), a.begin() + (i - 1), a.end());

    std::vector<BigInt> corr(a.begin(), a.begin() + (i - 2));
    corr.back() -= 1;
    corr.emplace_back(1);
    corr.push_back(at(b, j - 1) - at(a, i - 1) - 1);
    for (int t = j - 2; t >= 1; --t) corr.push_back(at(b, t));

    std::vector<BigInt> nprime;
    BigInt sign;
    if (greater) {
        for (int t = m; t >= j + k + 2; --t) nprime.push_back(at(b, t));
        nprime.back() -= 1;
        nprime.emplace_back(1);
        nprime.push_back(at(a, i + k + 1) - at(b, j + k + 1) - 1);
        for (int t = i + k + 2; t <= n; ++t) nprime.push_back(at(a, t));
        sign = k % 2 == 0 ? 1 : -1;
    } else {
        for (int t = m; t >= j + k + 2; --t) nprime.push_back(at(b, t));
        nprime.push_back(at(b, j + k + 1) - at(a, i + k + 1) - 1);
        nprime.emplace_back(1);
        nprime.push_back(at(a, i + k + 2) - 1);
        for (int t = i + k + 3; t <= n; ++t) nprime.push_back(at(a, t));
        sign = k % 2 == 0 ? -1 : 1;
    }
    for (const auto& e : corr)
        if (e < 0) throw Error("negative entry in correction sequence");
    for (const auto& e : nprime)
        if (e < 0) throw Error("negative entry in correction sequence");

    BigInt lhs = continuant_ints(a) * continuant_ints(b);
    BigInt rhs = continuant_ints(main1) * continuant_ints(main2) +
                 sign * continuant_ints(corr) * continuant_ints(nprime);
    std::ostringstream d;
    d << "c: [" << cf_str(cfa) << "] [" << cf_str(cfb) << "] i=" << i << " j=" << j << " k=" << k
      << (greater ? " (a>b)" : " (a<b)");
    return {d.str(), lhs, rhs, lhs == rhs};
}

LaurentIdentityReport check_grafting_laurent(const LabeledSnakeGraph& g, int i) {
    if (g.shape.d == 0) throw Error("grafting needs at least one tile");
    if (!labels_applicable(g)) throw Error("labels do not satisfy the quotient conditions");
    ContinuedFraction cf = reading(g);
    int n = cf.n();
    if (i < 1 || i > n) throw Error("index i out of range");
    auto ell = ell_positions(cf);
    LaurentPoly bi = i == n ? weight_poly(g, bn_edge(g.shape, g.ne))
                            : LaurentPoly::var(g.vars, g.label(static_cast<int>(ell[static_cast<size_t>(i - 1)])));
    LaurentPoly lhs = bi * cluster_expansion(g);
    LaurentPoly rhs = x_piece(g, 1, i) * x_piece(g, i + 1, n) +
                      x_piece(g, 1, i - 1) * x_piece(g, i + 2, n);
    std::ostringstream d;
    d << "grafting: [" << cf_str(cf) << "] i=" << i;
    return {d.str(), lhs, rhs};
}

ContinuedFraction random_cf(std::mt19937_64& rng, int max_len, int max_coeff) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> coeff(1, max_coeff);
    std::vector<BigInt> cs;
    int n = len(rng);
    for (int t = 0; t < n; ++t) cs.emplace_back(coeff(rng));
    return ContinuedFraction(std::move(cs));
}

COverlapInstance random_c_instance(std::mt19937_64& rng, bool greater_branch) {
    std::uniform_int_distribution<int> coeff(1, 6);
    std::uniform_int_distribution<int> small(0, 2);
    int k = small(rng);
    int i = 3 + small(rng);
    int j = 3 + small(rng);
    // sequence lengths: the compared entries must exist, and the branch's
    // decremented suffix entry as well
    int n = i + k + 1 + (greater_branch ? small(rng) : 1 + small(rng));
    int m = j + k + 1 + (greater_branch ? 1 + small(rng) : small(rng));
    std::vector<BigInt> a, b;
    for (int t = 0; t < n; ++t) a.emplace_back(coeff(rng));
    for (int t = 0; t < m; ++t) b.emplace_back(coeff(rng));
    for (int t = 0; t <= k; ++t) b[static_cast<size_t>(j + t - 1)] = a[static_cast<size_t>(i + t - 1)];
    b[static_cast<size_t>(j - 2)] = a[static_cast<size_t>(i - 2)] + 1 + small(rng);
    BigInt& a_after = a[static_cast<size_t>(i + k)];
    BigInt& b_after = b[static_cast<size_t>(j + k)];
    if (greater_branch)
        a_after = b_after + 1 + small(rng);
    else
        b_after = a_after + 1 + small(rng);
    return {ContinuedFraction(std::move(a)), ContinuedFraction(std::move(b)), i, j, k};
}

LabeledSnakeGraph random_valid_labeling(std::mt19937_64& rng, int max_d) {
    std::uniform_int_distribution<int> dd(1, max_d);
    std::uniform_int_distribution<int> bit(0, 1);
    int d = dd(rng);
    std::vector<Turn> ts;
    for (int t = 0; t < d - 1; ++t) ts.push_back(bit(rng) ? Turn::Up : Turn::Right);
    SnakeShape shape(d, std::move(ts));
    NeChoice ne = bit(rng) ? NeChoice::North : NeChoice::East;

    std::vector<std::string> pool;
    for (int t = 0; t < 6; ++t) pool.push_back("v" + std::to_string(t));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    auto draw = [&] { return pool[static_cast<size_t>(pick(rng))]; };

    LabeledSnakeGraph g;
    g.shape = shape;
    g.ne = ne;
    for (int t = 1; t <= d; ++t) g.tile_label[t] = draw();
    // free names on the chain and corner edges, the local rule elsewhere
    std::map<EdgeId, int> chain;
    for (int j = 0; j <= d - 1; ++j) chain.emplace(chain_edge(shape, j), j);
    chain.emplace(ne_edge(shape, ne), d);
    for (const auto& e : all_edges(shape)) {
        if (chain.count(e) || e == b0_edge(shape) || e == bn_edge(shape, ne))
            g.edge_weight[e] = draw();
        else if (e.side == Side::N || e.side == Side::E)
            g.edge_weight[e] = g.label(e.tile + 1);
        else
            g.edge_weight[e] = g.label(e.tile - 1);
    }
    g.vars = make_varset(pool);
    return g;
}

}  // namespace snakefrac
