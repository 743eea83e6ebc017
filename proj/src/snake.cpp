#include "snakefrac/snake.hpp"

#include <algorithm>

namespace snakefrac {

SnakeShape::SnakeShape(int tiles, std::vector<Turn> ts) : d(tiles), turns(std::move(ts)) {
    if (d < 0) throw Error("negative tile count");
    size_t want = d > 1 ? static_cast<size_t>(d - 1) : 0;
    if (turns.size() != want) throw Error("turn sequence length does not match tile count");
}

bool is_straight(const SnakeShape& s) {
    for (size_t k = 1; k < s.turns.size(); ++k)
        if (s.turns[k] != s.turns[0]) return false;
    return true;
}

bool is_zigzag(const SnakeShape& s) {
    for (size_t k = 1; k < s.turns.size(); ++k)
        if (s.turns[k] == s.turns[k - 1]) return false;
    return true;
}

SnakeShape parse_shape(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("shape format is d:TURNS");
    int d;
    try {
        size_t used = 0;
        d = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw Error("cannot parse tile count in '" + text + "'");
    }
    std::vector<Turn> ts;
    for (char c : text.substr(colon + 1)) {
        if (c == 'U')
            ts.push_back(Turn::Up);
        else if (c == 'R')
            ts.push_back(Turn::Right);
        else
            throw Error("turn characters are U and R");
    }
    return SnakeShape(d, std::move(ts));
}

std::string shape_str(const SnakeShape& s) {
    std::string out = std::to_string(s.d) + ":";
    for (Turn t : s.turns) out += t == Turn::Up ? 'U' : 'R';
    return out;
}

std::vector<std::pair<int, int>> tile_positions(const SnakeShape& s) {
    std::vector<std::pair<int, int>> pos;
    if (s.d == 0) return pos;
    pos.emplace_back(0, 0);
    for (Turn t : s.turns) {
        auto [x, y] = pos.back();
        pos.emplace_back(t == Turn::Right ? x + 1 : x, t == Turn::Up ? y + 1 : y);
    }
    return pos;
}

std::vector<Sign> interior_signs(const SnakeShape& s) {
    std::vector<Sign> f;
    f.push_back(Sign::Minus);  // e_0, the normalization
    Turn prev = Turn::Up;      // e_0 enters tile 1 from the south
    for (int i = 1; i <= s.d - 1; ++i) {
        Turn cur = s.turns[static_cast<size_t>(i - 1)];
        f.push_back(cur == prev ? flip(f.back()) : f.back());
        prev = cur;
    }
    return f;
}

Sign ne_sign(const SnakeShape& s, NeChoice ne) {
    if (s.d < 1) throw Error("single-edge graph has no north-east edges");
    Sign east = s.d % 2 == 1 ? Sign::Minus : Sign::Plus;  // tile parity rule
    return ne == NeChoice::East ? east : flip(east);
}

namespace {

ContinuedFraction run_lengths(const std::vector<Sign>& f) {
    std::vector<BigInt> cs;
    for (size_t k = 0; k < f.size(); ++k) {
        if (k > 0 && f[k] == f[k - 1])
            cs.back() += 1;
        else
            cs.emplace_back(1);
    }
    return ContinuedFraction(std::move(cs));
}

std::vector<Turn> signs_to_turns(const std::vector<Sign>& f) {
    std::vector<Turn> ts;
    Turn prev = Turn::Up;
    for (size_t k = 1; k < f.size(); ++k) {
        Turn cur = f[k] == f[k - 1] ? flip(prev) : prev;
        ts.push_back(cur);
        prev = cur;
    }
    return ts;
}

}  // namespace

CfSnake cf_to_snake(const ContinuedFraction& cf) {
    long long total = 0;
    for (const auto& a : cf.coeffs) {
        if (!a.fits_slong_p()) throw Error("coefficient too large for a snake graph");
        total += a.get_si();
        if (total > 2'000'000) throw Error("snake graph would exceed the tile limit");
    }
    std::vector<Sign> f;
    f.reserve(static_cast<size_t>(total));
    Sign run = Sign::Minus;
    for (const auto& a : cf.coeffs) {
        for (long k = 0; k < a.get_si(); ++k) f.push_back(run);
        run = flip(run);
    }
    int d = static_cast<int>(total) - 1;
    std::vector<Turn> ts = signs_to_turns(std::vector<Sign>(f.begin(), f.end() - 1));
    SnakeShape shape(d, std::move(ts));
    NeChoice ne = NeChoice::North;
    if (d >= 1) ne = f.back() == ne_sign(shape, NeChoice::East) ? NeChoice::East : NeChoice::North;
    return {std::move(shape), std::move(f), ne};
}

ContinuedFraction snake_to_cf(const SnakeShape& s, NeChoice ne) {
    if (s.d < 1) throw Error("F is not defined on the single-edge graph");
    std::vector<Sign> f = interior_signs(s);
    f.push_back(ne_sign(s, ne));
    return run_lengths(f);
}

ContinuedFraction snake_to_cf_canonical(const SnakeShape& s) {
    if (s.d < 1) throw Error("F' is not defined on the single-edge graph");
    std::vector<Sign> f = interior_signs(s);
    f.push_back(f.back());
    return run_lengths(f);
}

std::vector<long long> ell_positions(const ContinuedFraction& cf) {
    std::vector<long long> ell;
    long long sum = 0;
    for (const auto& a : cf.coeffs) {
        if (!a.fits_slong_p()) throw Error("coefficient too large");
        sum += a.get_si();
        ell.push_back(sum);
    }
    return ell;
}

ShapeRestriction restrict_shape(const SnakeShape& s, int from, int to) {
    if (from < 1 || to > s.d || from > to + 1) throw Error("tile range out of bounds");
    ShapeRestriction out;
    if (from == to + 1) return out;  // single edge
    Turn entering = from == 1 ? Turn::Up : s.turns[static_cast<size_t>(from - 2)];
    out.transposed = entering == Turn::Right;
    std::vector<Turn> ts;
    for (int k = from; k < to; ++k) {
        Turn t = s.turns[static_cast<size_t>(k - 1)];
        ts.push_back(out.transposed ? flip(t) : t);
    }
    out.shape = SnakeShape(to - from + 1, std::move(ts));
    return out;
}

SnakeShape subgraph_H(const SnakeShape& s, const ContinuedFraction& cf, int i) {
    if (i < 1 || i > cf.n()) throw Error("H index out of range");
    auto ell = ell_positions(cf);
    if (ell.back() != s.d + 1) throw Error("continued fraction does not match the shape");
    long long lo = i == 1 ? 0 : ell[static_cast<size_t>(i - 2)];
    return restrict_shape(s, static_cast<int>(lo) + 1, static_cast<int>(ell[static_cast<size_t>(i - 1)]) - 1)
        .shape;
}

SnakeShape remove_H1(const SnakeShape& s, const ContinuedFraction& cf) {
    if (cf.n() < 2) throw Error("removing H_1 needs at least two coefficients");
    auto ell = ell_positions(cf);
    if (ell.back() != s.d + 1) throw Error("continued fraction does not match the shape");
    return restrict_shape(s, static_cast<int>(ell[0]) + 1, s.d).shape;
}

SnakeShape rotate180(const SnakeShape& s) {
    std::vector<Turn> ts(s.turns.rbegin(), s.turns.rend());
    return SnakeShape(s.d, std::move(ts));
}

Rational chi(const SnakeShape& s) {
    if (s.d < 1) throw Error("chi is not defined on the single-edge graph");
    return evaluate(snake_to_cf_canonical(s));
}

std::vector<std::pair<ContinuedFraction, SnakeShape>> snakes_with_matching_count(const BigInt& N) {
    if (N < 1) throw Error("matching count must be positive");
    std::vector<std::pair<ContinuedFraction, SnakeShape>> out;
    if (N == 1) {
        out.emplace_back(ContinuedFraction{1}, SnakeShape());
        return out;
    }
    for (BigInt q = 1; q < N; ++q) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        ContinuedFraction cf = from_rational(make_rational(N, q));
        SnakeShape shape = cf_to_snake(cf).shape;
        out.emplace_back(std::move(cf), std::move(shape));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return cf_less(a.first, b.first); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.second == b.second; }),
              out.end());
    return out;
}

}  // namespace snakefrac
