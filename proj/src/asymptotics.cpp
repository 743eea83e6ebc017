#include "snakefrac/asymptotics.hpp"

#include <algorithm>

namespace snakefrac {

namespace {

// w = s^2 * D with D squarefree; trial division, then one perfect-square
// check on the residue.
void square_decompose(const BigInt& w, BigInt& s, BigInt& D) {
    s = 1;
    D = 1;
    BigInt rest = w;
    for (BigInt p = 2; p * p <= rest && p < 100000; ++p) {
        if (rest % p != 0) continue;
        int mult = 0;
        while (rest % p == 0) {
            rest /= p;
            ++mult;
        }
        for (int t = 0; t < mult / 2; ++t) s *= p;
        if (mult % 2) D *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            BigInt r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            s *= r;
        } else {
            D *= rest;
        }
    }
}

}  // namespace

Surd make_surd(GaussRational a, GaussRational b, const Rational& radicand) {
    if (radicand < 0) throw Error("negative real radicand");
    if (radicand == 0 || b.is_zero()) return {std::move(a), GaussRational(0), 0};
    // sqrt(u/v) = sqrt(u v) / v
    BigInt w = radicand.get_num() * radicand.get_den();
    BigInt s, D;
    square_decompose(w, s, D);
    GaussRational scale(make_rational(s, radicand.get_den()));
    b = b * scale;
    if (D == 1) return {a + b, GaussRational(0), 0};
    return {std::move(a), std::move(b), std::move(D)};
}

Surd surd_from_gauss(GaussRational a) { return {std::move(a), GaussRational(0), 0}; }

namespace {

BigInt common_radicand(const Surd& x, const Surd& y) {
    if (x.b.is_zero()) return y.D;
    if (y.b.is_zero()) return x.D;
    if (x.D != y.D) throw Error("surds with different radicands");
    return x.D;
}

}  // namespace

Surd surd_add(const Surd& x, const Surd& y) {
    BigInt D = common_radicand(x, y);
    GaussRational b = x.b + y.b;
    if (b.is_zero()) return {x.a + y.a, GaussRational(0), 0};
    return {x.a + y.a, std::move(b), std::move(D)};
}

Surd surd_sub(const Surd& x, const Surd& y) {
    return surd_add(x, Surd{-y.a, -y.b, y.D});
}

Surd surd_mul(const Surd& x, const Surd& y) {
    BigInt D = common_radicand(x, y);
    GaussRational d{Rational(D)};
    GaussRational a = x.a * y.a + x.b * y.b * d;
    GaussRational b = x.a * y.b + x.b * y.a;
    if (b.is_zero()) return {std::move(a), GaussRational(0), 0};
    return {std::move(a), std::move(b), std::move(D)};
}

Surd surd_inv(const Surd& x) {
    if (x.is_zero()) throw Error("inverting zero");
    GaussRational denom = x.a * x.a - x.b * x.b * GaussRational(Rational(x.D));
    // D squarefree and not 1, so the conjugate product vanishes only at 0
    GaussRational a = x.a / denom;
    GaussRational b = -x.b / denom;
    if (b.is_zero()) return {std::move(a), GaussRational(0), 0};
    return {std::move(a), std::move(b), x.D};
}

std::string surd_str(const Surd& x) {
    if (x.is_rational()) return gauss_str(x.a);
    std::string root = "sqrt(" + x.D.get_str() + ")";
    std::string bs;
    if (x.b == GaussRational(1))
        bs = root;
    else if (x.b == GaussRational(-1))
        bs = "-" + root;
    else if (x.b.is_real())
        bs = rational_str(x.b.re) + "*" + root;
    else
        bs = "(" + gauss_str(x.b) + ")*" + root;
    if (x.a.is_zero()) return bs;
    if (bs[0] == '-') return gauss_str(x.a) + " - " + bs.substr(1);
    return gauss_str(x.a) + " + " + bs;
}

namespace {

// Rational enclosure of sqrt(D) with error below 10^-prec.
std::pair<Rational, Rational> sqrt_bounds(const BigInt& D, int prec) {
    BigInt pow10 = 1;
    for (int k = 0; k < prec; ++k) pow10 *= 10;
    BigInt lo;
    BigInt scaled = D * pow10 * pow10;
    mpz_sqrt(lo.get_mpz_t(), scaled.get_mpz_t());
    return {make_rational(lo, pow10), make_rational(lo + 1, pow10)};
}

}  // namespace

std::string surd_decimal(const Surd& x, int digits) {
    if (x.is_rational()) {
        if (x.a.is_real()) return decimal_str(x.a.re, digits);
        std::string im = decimal_str(x.a.im, digits) + "i";
        if (x.a.re == 0) return im;
        return decimal_str(x.a.re, digits) + (x.a.im > 0 ? "+" : "") + im;
    }
    if (!x.a.is_real() || !x.b.is_real()) throw Error("cannot render a non-real surd");
    for (int prec = digits + 8;; prec += 16) {
        auto [lo, hi] = sqrt_bounds(x.D, prec);
        Rational v1 = x.a.re + x.b.re * lo, v2 = x.a.re + x.b.re * hi;
        if (v2 < v1) std::swap(v1, v2);
        std::string s1 = decimal_str(v1, digits), s2 = decimal_str(v2, digits);
        if (s1 == s2) return s1;
        if (prec > digits + 200) throw Error("decimal rendering did not settle");
    }
}

bool within(const Rational& q, const Surd& x, const Rational& eps) {
    if (!x.a.is_real() || !x.b.is_real()) throw Error("comparison needs a real surd");
    if (x.is_rational()) return abs(q - x.a.re) < eps;
    for (int prec = 24;; prec += 24) {
        auto [lo, hi] = sqrt_bounds(x.D, prec);
        Rational v1 = x.a.re + x.b.re * lo, v2 = x.a.re + x.b.re * hi;
        if (v2 < v1) std::swap(v1, v2);
        Rational d1 = q - v2, d2 = q - v1;  // diff interval
        Rational lo_abs = d1 > 0 ? d1 : (d2 < 0 ? -d2 : Rational(0));
        Rational hi_abs = std::max(Rational(abs(d1)), Rational(abs(d2)));
        if (hi_abs < eps) return true;
        if (lo_abs >= eps) return false;
        if (prec > 2000) throw Error("comparison did not settle");
    }
}

namespace {

struct AlphaParts {
    GaussRational x1, x2, x3, x1p, delta;
};

AlphaParts alpha_parts(const TorusPoint& p) {
    const auto& [x1, x2, x3] = p;
    if (x1.is_zero() || x2.is_zero() || x3.is_zero()) throw Error("point coordinates must be nonzero");
    GaussRational x1p = (x2 * x2 + x3 * x3) / x1;
    GaussRational diff = x1p - x1;
    return {x1, x2, x3, x1p, diff * diff + GaussRational(4) * x3 * x3};
}

Surd radical_plus(const GaussRational& num, const GaussRational& delta, const GaussRational& den) {
    GaussRational inv_den = (GaussRational(2) * den).inverse();
    if (delta.is_real() && delta.re >= 0 && num.is_real() && den.is_real())
        return make_surd(num * inv_den, inv_den, delta.re);
    auto root = gauss_sqrt(delta);
    if (!root) throw Error("radicand is not a perfect square at this point");
    return surd_from_gauss((num + *root) * inv_den);
}

}  // namespace

Surd alpha(const TorusPoint& p) {
    AlphaParts c = alpha_parts(p);
    return radical_plus(c.x1p - c.x1, c.delta, c.x3);
}

Surd beta(const TorusPoint& p) {
    AlphaParts c = alpha_parts(p);
    return radical_plus(c.x1p + c.x1, c.delta, c.x2);
}

Surd alpha_mu3(const TorusPoint& p) {
    const auto& [x1, x2, x3] = p;
    if (x3.is_zero()) throw Error("point coordinates must be nonzero");
    return alpha({x1, x2, (x1 * x1 + x2 * x2) / x3});
}

Surd periodic_cf_value(const Rational& z) {
    if (z == 0) throw Error("periodic continued fraction of zero");
    return make_surd(GaussRational(z / 2), GaussRational(Rational(1, 2)), z * z + 4);
}

Surd periodic_cf_general(const std::vector<Rational>& period) {
    if (period.empty()) throw Error("empty period");
    for (const auto& e : period)
        if (e <= 0) throw Error("period entries must be positive");
    // x = [p_1..p_k, x] = (A x + B)/(C x + E)
    Rational one(1), zero(0);
    std::vector<Rational> head(period.begin(), period.end() - 1);
    std::vector<Rational> tail(period.begin() + 1, period.end());
    Rational A = continuant_ring(period, one, zero);
    Rational B = continuant_ring(head, one, zero);
    Rational C = continuant_ring(tail, one, zero);
    Rational E = 0;  // window one past empty when the period has length 1
    if (period.size() >= 2)
        E = continuant_ring(std::vector<Rational>(period.begin() + 1, period.end() - 1), one, zero);
    // C x^2 + (E - A) x - B = 0, positive root
    Rational inv = 1 / (2 * C);
    return make_surd(GaussRational((A - E) * inv), GaussRational(inv),
                     (A - E) * (A - E) + 4 * B * C);
}

LabeledSnakeGraph torus_snake(TorusVariant variant, int i) {
    if (i < 1) throw Error("truncation index must be >= 1");
    int d = 2 * i - 1;
    LabeledSnakeGraph g;
    g.vars = make_varset({"x1", "x2", "x3"});
    bool alt = variant == TorusVariant::Alt;
    g.shape = SnakeShape(d, std::vector<Turn>(d > 1 ? static_cast<size_t>(d - 1) : 0,
                                              alt ? Turn::Up : Turn::Right));
    g.ne = alt ? NeChoice::North : NeChoice::East;
    auto parity = [](int t) { return t % 2 == 1 ? "x2" : "x1"; };
    for (int t = 1; t <= d; ++t) g.tile_label[t] = t % 2 == 1 ? "x1" : "x2";
    for (const auto& e : all_edges(g.shape)) {
        if (alt)
            g.edge_weight[e] = (e.side == Side::N || e == EdgeId{1, Side::S}) ? "x3" : parity(e.tile);
        else
            g.edge_weight[e] = (e.side == Side::E || e == EdgeId{1, Side::W}) ? "x3" : parity(e.tile);
    }
    return g;
}

LaurentPoly torus_L(VarSetPtr vars, int k) {
    if (k < 1) throw Error("index must be >= 1");
    std::map<std::string, int> exps;
    exps["x3"] = 1;
    if (k % 2 == 1) {
        exps["x2"] = k - 1;
        exps["x1"] = -k;
    } else {
        exps["x1"] = k - 1;
        exps["x2"] = -k;
    }
    return LaurentPoly::monomial(std::move(vars), exps);
}

Rational eval_cluster(const LabeledSnakeGraph& g, const std::array<Rational, 3>& point) {
    auto value_of = [&](const std::string& name) -> const Rational& {
        if (name == "x1") return point[0];
        if (name == "x2") return point[1];
        if (name == "x3") return point[2];
        throw Error("unexpected variable '" + name + "'");
    };
    Rational sum = weighted_matching_sum(
        g.shape, [&](const EdgeId& e) { return value_of(g.weight(e)); });
    Rational crossing(1);
    for (const auto& [t, name] : g.tile_label) crossing *= value_of(name);
    return sum / crossing;
}

LimitTable limit_table(const std::array<Rational, 3>& point, int i_max) {
    for (const auto& c : point)
        if (c <= 0) throw Error("limit table needs a positive rational point");
    if (i_max < 1 || i_max > kLimitGuard)
        throw Error("i_max must lie in 1.." + std::to_string(kLimitGuard));
    LimitTable out{{},
                   alpha({GaussRational(point[0]), GaussRational(point[1]), GaussRational(point[2])}),
                   beta({GaussRational(point[0]), GaussRational(point[1]), GaussRational(point[2])})};
    Rational prev_u;
    for (int i = 1; i <= i_max; ++i) {
        LabeledSnakeGraph g = torus_snake(TorusVariant::Alt, i);
        Rational u = eval_cluster(g, point);
        Rational v = eval_cluster(gamma_prime(g), point);
        LimitRow row{i, u / v, std::nullopt};
        if (i > 1) row.u_ratio = u / prev_u;
        prev_u = u;
        out.rows.push_back(std::move(row));
    }
    return out;
}

namespace {

GaussRational gq(long n) { return GaussRational(Rational(n)); }

}  // namespace

std::vector<MetallicRow> metallic_checks(int n_max) {
    std::vector<MetallicRow> rows;
    auto push = [&](const std::string& name, const std::string& detail, bool ok) {
        rows.push_back({name, detail, ok});
    };
    for (int n = 1; n <= n_max; ++n) {
        std::string ns = std::to_string(n);
        {  // (a) scaling invariance
            Surd lhs = alpha({gq(n), gq(n), gq(2 * n)});
            Surd rhs = alpha({gq(1), gq(1), gq(2)});
            push("a n=" + ns, "alpha(n,n,2n) = alpha(1,1,2)", lhs == rhs);
        }
        {  // (b) metallic means
            Surd lhs = alpha({gq(1), gq(1), gq(n)});
            Surd rhs = periodic_cf_value(Rational(n));
            push("b n=" + ns, "alpha(1,1," + ns + ") = [" + ns + "bar] = " + surd_str(rhs),
                 lhs == rhs);
        }
        {  // (c)
            Surd lhs = alpha({gq(1), gq(n), gq(1)});
            Surd rhs = periodic_cf_value(Rational(n) * Rational(n));
            push("c n=" + ns, "alpha(1," + ns + ",1) = [" + ns + "^2 bar]", lhs == rhs);
        }
        if (n >= 2) {  // (d) needs (n^2-2)/n > 0
            Surd lhs = alpha({gq(n), gq(1), gq(1)});
            Surd rhs = surd_inv(periodic_cf_value(make_rational(n * n - 2, n)));
            Surd rhs2 = surd_inv(periodic_cf_general(
                {Rational(n - 1), Rational(1), Rational(n - 1)}));
            push("d n=" + ns, "alpha(" + ns + ",1,1) = [0,(n^2-2)/n bar] = [0,n-1,1,n-1 bar]",
                 lhs == rhs && lhs == rhs2);
        }
        {  // (e)
            Surd lhs = alpha({gq(2 * n + 1), gq(1), gq(2)});
            Surd rhs = surd_inv(
                periodic_cf_value(make_rational(2 * (n * n + n - 1), 2 * n + 1)));
            Surd rhs2 = surd_inv(
                periodic_cf_general({Rational(n), Rational(2), Rational(n)}));
            push("e n=" + ns, "alpha(2n+1,1,2) = [0,2(n^2+n-1)/(2n+1) bar] = [0,n,2,n bar]",
                 lhs == rhs && lhs == rhs2);
        }
    }
    {  // (f), (g): the Gaussian points
        GaussRational two_i(Rational(0), Rational(2));
        GaussRational iu(Rational(0), Rational(1));
        Surd a_plus = alpha({gq(1), gq(1), two_i});
        Surd a_minus = alpha({gq(1), gq(1), -two_i});
        push("f", "alpha(1,1,+-2i) = +-i",
             a_plus == surd_from_gauss(iu) && a_minus == surd_from_gauss(-iu));
        Surd b_plus = beta({gq(1), gq(1), two_i});
        Surd b_minus = beta({gq(1), gq(1), -two_i});
        push("g", "beta(1,1,+-2i) = -1",
             b_plus == surd_from_gauss(gq(-1)) && b_minus == surd_from_gauss(gq(-1)));
    }
    return rows;
}

}  // namespace snakefrac
