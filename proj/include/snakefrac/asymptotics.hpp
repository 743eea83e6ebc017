#ifndef SNAKEFRAC_ASYMPTOTICS_HPP
#define SNAKEFRAC_ASYMPTOTICS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "snakefrac/labeled.hpp"

namespace snakefrac {

// Exact value a + b*sqrt(D) with D a squarefree nonnegative integer.
// Perfect-square radicands fold into the rational part (D = 0, b = 0).
struct Surd {
    GaussRational a, b;
    BigInt D = 0;

    bool is_rational() const { return b.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a == y.a && x.b == y.b && (x.b.is_zero() || x.D == y.D);
    }
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
};

// Normalizes b*sqrt(radicand): extracts square factors, folds perfect
// squares. The radicand must be a nonnegative rational.
Surd make_surd(GaussRational a, GaussRational b, const Rational& radicand);
Surd surd_from_gauss(GaussRational a);

Surd surd_add(const Surd& x, const Surd& y);
Surd surd_sub(const Surd& x, const Surd& y);
Surd surd_mul(const Surd& x, const Surd& y);
Surd surd_inv(const Surd& x);

std::string surd_str(const Surd& x);
// Truncated decimal rendering; real surds only (complex values must have
// folded to b = 0, which prints exactly).
std::string surd_decimal(const Surd& x, int digits);

// Exact comparison |q - x| < eps for real x.
bool within(const Rational& q, const Surd& x, const Rational& eps);

using TorusPoint = std::array<GaussRational, 3>;

// Limit of u(i)/v(i): ((x1'-x1) + sqrt((x1'-x1)^2 + 4 x3^2)) / (2 x3),
// with x1' = (x2^2+x3^2)/x1. Non-real points must give a perfect-square
// radicand.
Surd alpha(const TorusPoint& p);
// Limit of u(i)/u(i-1): beta * x2 = x3 * alpha + x1.
Surd beta(const TorusPoint& p);

// alpha with x3 replaced by (x1^2+x2^2)/x3.
Surd alpha_mu3(const TorusPoint& p);

// Value of the periodic continued fraction [z,z,z,...]: (z+sqrt(z^2+4))/2.
Surd periodic_cf_value(const Rational& z);
// Periodic continued fraction with the given repeating block.
Surd periodic_cf_general(const std::vector<Rational>& period);

enum class TorusVariant : unsigned char { Alt, Shift };

// Finite truncations of the once-punctured-torus snake graphs: Alt(i) is
// the straight graph with 2i-1 tiles read as [1,1,...,1]; Shift(i) swaps
// the roles of e_0 and b_0 and reads as [2,1,...,1].
LabeledSnakeGraph torus_snake(TorusVariant variant, int i);

// Monomial entries of the infinite Alt continued fraction.
LaurentPoly torus_L(VarSetPtr vars, int k);

struct LimitRow {
    int i;
    Rational u_over_v;
    std::optional<Rational> u_ratio;  // u(i)/u(i-1), absent at i = 1
};

struct LimitTable {
    std::vector<LimitRow> rows;
    Surd alpha, beta;
};

inline constexpr int kLimitGuard = 60;

// Exact cluster-variable quotients at a positive rational point.
LimitTable limit_table(const std::array<Rational, 3>& point, int i_max);

// Value of the cluster element of g at a rational point: the weighted
// matching sum divided by the crossing monomial.
Rational eval_cluster(const LabeledSnakeGraph& g, const std::array<Rational, 3>& point);

struct MetallicRow {
    std::string name;
    std::string detail;
    bool holds;
};

// The closed-form checks for alpha/beta at the named families, n = 1..n_max.
std::vector<MetallicRow> metallic_checks(int n_max);

}  // namespace snakefrac

#endif
