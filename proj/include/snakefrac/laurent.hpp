#ifndef SNAKEFRAC_LAURENT_HPP
#define SNAKEFRAC_LAURENT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "snakefrac/rational.hpp"

namespace snakefrac {

// Fixed, ordered set of variable names; exponent vectors index into it.
class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int k) const { return names_.at(static_cast<size_t>(k)); }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& name) const;
    bool contains(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
VarSetPtr make_varset(std::vector<std::string> names);

// Graded lexicographic order on exponent vectors.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate Laurent polynomial with GaussRational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
  public:
    using TermMap = std::map<std::vector<int>, GaussRational, GradedLex>;

    static LaurentPoly zero(VarSetPtr vs);
    static LaurentPoly one(VarSetPtr vs);
    static LaurentPoly constant(VarSetPtr vs, GaussRational c);
    static LaurentPoly var(VarSetPtr vs, const std::string& name, int exp = 1);
    static LaurentPoly monomial(VarSetPtr vs, const std::map<std::string, int>& exps,
                                GaussRational coeff = GaussRational(1));

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    LaurentPoly inverse_monomial() const;  // defined for monomials only

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend LaurentPoly div_by_monomial(const LaurentPoly& p, const LaurentPoly& m);

    GaussRational eval(const std::map<std::string, GaussRational>& point) const;
    GaussRational eval_all_ones() const;

    void check_invariants() const;

  private:
    LaurentPoly(VarSetPtr vs, TermMap ts) : vars_(std::move(vs)), terms_(std::move(ts)) {}
    VarSetPtr vars_;
    TermMap terms_;
};

// "coeff*x1^e1*x2^e2 + ..." with negative exponents; round-trips exactly.
std::string poly_str(const LaurentPoly& p);
LaurentPoly parse_poly(VarSetPtr vs, const std::string& text);

// Unreduced fraction of Laurent polynomials; equality is cross-multiplication.
struct RationalFunction {
    LaurentPoly num, den;

    RationalFunction(LaurentPoly n, LaurentPoly d);

    bool is_zero() const { return num.is_zero(); }
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
};

RationalFunction frac_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction frac_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction frac_inv(const RationalFunction& a);
bool frac_eq(const RationalFunction& a, const RationalFunction& b);

GaussRational gauss_pow(const GaussRational& z, int e);

}  // namespace snakefrac

#endif
