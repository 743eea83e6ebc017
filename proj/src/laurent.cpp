#include "snakefrac/laurent.hpp"

#include <cassert>
#include <cctype>

namespace snakefrac {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t k = 0; k < names_.size(); ++k) {
        const std::string& n = names_[k];
        if (n.empty() || n == "i") throw Error("invalid variable name '" + n + "'");
        if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
            throw Error("variable names start with a letter: '" + n + "'");
        if (!index_.emplace(n, static_cast<int>(k)).second)
            throw Error("duplicate variable name '" + n + "'");
    }
}

int VarSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown variable '" + name + "'");
    return it->second;
}

bool VarSet::contains(const std::string& name) const { return index_.count(name) > 0; }

VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() == b.vars() || *a.vars() == *b.vars()) return;
    throw Error("variable set mismatch");
}

int checked_add(int a, int b) {
    long s = static_cast<long>(a) + b;
    if (s > (1L << 30) || s < -(1L << 30)) throw Error("exponent overflow");
    return static_cast<int>(s);
}

}  // namespace

LaurentPoly LaurentPoly::zero(VarSetPtr vs) { return LaurentPoly(std::move(vs), {}); }

LaurentPoly LaurentPoly::one(VarSetPtr vs) { return constant(std::move(vs), GaussRational(1)); }

LaurentPoly LaurentPoly::constant(VarSetPtr vs, GaussRational c) {
    TermMap ts;
    if (!c.is_zero()) ts.emplace(std::vector<int>(static_cast<size_t>(vs->size()), 0), std::move(c));
    return LaurentPoly(std::move(vs), std::move(ts));
}

LaurentPoly LaurentPoly::var(VarSetPtr vs, const std::string& name, int exp) {
    return monomial(std::move(vs), {{name, exp}});
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vs, const std::map<std::string, int>& exps,
                                  GaussRational coeff) {
    std::vector<int> e(static_cast<size_t>(vs->size()), 0);
    for (const auto& [name, k] : exps)
        e[static_cast<size_t>(vs->index(name))] = checked_add(e[static_cast<size_t>(vs->index(name))], k);
    TermMap ts;
    if (!coeff.is_zero()) ts.emplace(std::move(e), std::move(coeff));
    return LaurentPoly(std::move(vs), std::move(ts));
}

LaurentPoly LaurentPoly::inverse_monomial() const {
    if (!is_monomial()) throw Error("not a monomial");
    const auto& [e, c] = *terms_.begin();
    std::vector<int> inv(e.size());
    for (size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
    TermMap ts;
    ts.emplace(std::move(inv), c.inverse());
    return LaurentPoly(vars_, std::move(ts));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a, b);
    LaurentPoly::TermMap ts = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = ts.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) ts.erase(it);
        }
    }
    LaurentPoly out(a.vars_, std::move(ts));
    out.check_invariants();
    return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly::TermMap ts;
    for (const auto& [e, c] : a.terms_) ts.emplace(e, -c);
    return LaurentPoly(a.vars_, std::move(ts));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a, b);
    LaurentPoly::TermMap ts;
    std::vector<int> e(static_cast<size_t>(a.vars_->size()));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = checked_add(ea[k], eb[k]);
            GaussRational c = ca * cb;
            auto [it, fresh] = ts.emplace(e, c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) ts.erase(it);
            }
        }
    }
    LaurentPoly out(a.vars_, std::move(ts));
    out.check_invariants();
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a, b);
    return a.terms_ == b.terms_;
}

LaurentPoly div_by_monomial(const LaurentPoly& p, const LaurentPoly& m) {
    require_same_vars(p, m);
    return p * m.inverse_monomial();
}

GaussRational gauss_pow(const GaussRational& z, int e) {
    if (e < 0) return gauss_pow(z, -e).inverse();
    GaussRational acc(1), base = z;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

GaussRational LaurentPoly::eval(const std::map<std::string, GaussRational>& point) const {
    std::vector<const GaussRational*> vals(static_cast<size_t>(vars_->size()), nullptr);
    for (int k = 0; k < vars_->size(); ++k) {
        auto it = point.find(vars_->name(k));
        if (it != point.end()) vals[static_cast<size_t>(k)] = &it->second;
    }
    GaussRational total(0);
    for (const auto& [e, c] : terms_) {
        GaussRational t = c;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!vals[k]) throw Error("no value for variable '" + vars_->name(static_cast<int>(k)) + "'");
            const GaussRational& v = *vals[k];
            if (v.is_zero()) {
                if (e[k] < 0) throw Error("zero raised to a negative power");
                t = GaussRational(0);
                break;
            }
            t = t * gauss_pow(v, e[k]);
        }
        total = total + t;
    }
    return total;
}

GaussRational LaurentPoly::eval_all_ones() const {
    GaussRational total(0);
    for (const auto& [e, c] : terms_) total = total + c;
    return total;
}

void LaurentPoly::check_invariants() const {
#ifndef NDEBUG
    for (const auto& [e, c] : terms_) {
        assert(!c.is_zero());
        assert(e.size() == static_cast<size_t>(vars_->size()));
    }
#endif
}

// ---- text form ----

namespace {

std::string coeff_str(const GaussRational& c) {
    if (c.im == 0) return rational_str(c.re);
    return "(" + gauss_str(c) + ")";
}

std::string term_str(const VarSet& vs, const std::vector<int>& e, const GaussRational& c) {
    std::string factors;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += vs.name(static_cast<int>(k));
        if (e[k] != 1) factors += "^" + std::to_string(e[k]);
    }
    if (factors.empty()) return coeff_str(c);
    if (c == GaussRational(1)) return factors;
    return coeff_str(c) + "*" + factors;
}

}  // namespace

std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // highest graded-lex term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty()) {
            out = term_str(*p.vars(), e, c);
        } else if (c.im == 0 && c.re < 0) {
            out += " - " + term_str(*p.vars(), e, GaussRational(Rational(-c.re)));
        } else {
            out += " + " + term_str(*p.vars(), e, c);
        }
    }
    return out;
}

namespace {

struct PolyParser {
    VarSetPtr vs;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_number() {  // digits with optional /digits
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return s.substr(start, pos - start);
    }

    LaurentPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw Error("unexpected end of polynomial");
        if (s[pos] == '(') {  // parenthesized Gaussian coefficient
            size_t close = s.find(')', pos);
            if (close == std::string::npos) throw Error("unbalanced parenthesis");
            GaussRational c = parse_gauss(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            return LaurentPoly::constant(vs, c);
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string num = read_number();
            if (pos < s.size() && s[pos] == 'i' &&
                (pos + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
                ++pos;
                return LaurentPoly::constant(vs, GaussRational(Rational(0), parse_rational(num)));
            }
            return LaurentPoly::constant(vs, GaussRational(parse_rational(num)));
        }
        if (s[pos] == 'i' &&
            (pos + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return LaurentPoly::constant(vs, GaussRational(Rational(0), Rational(1)));
        }
        // variable name
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw Error("cannot parse polynomial near '" + s.substr(pos) + "'");
        std::string name = s.substr(start, pos - start);
        int exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            bool neg = eat('-');
            std::string digits = read_number();
            if (digits.empty()) throw Error("missing exponent");
            exp = std::stoi(digits);
            if (neg) exp = -exp;
        }
        return LaurentPoly::var(vs, name, exp);
    }

    LaurentPoly parse_term() {
        LaurentPoly t = parse_factor();
        while (eat('*')) t = t * parse_factor();
        return t;
    }

    LaurentPoly parse() {
        LaurentPoly total = LaurentPoly::zero(vs);
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        while (true) {
            LaurentPoly t = parse_term();
            total = neg ? total - t : total + t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                throw Error("cannot parse polynomial near '" + s.substr(pos) + "'");
        }
        return total;
    }
};

}  // namespace

LaurentPoly parse_poly(VarSetPtr vs, const std::string& text) {
    if (text == "0") return LaurentPoly::zero(vs);
    PolyParser p{std::move(vs), text};
    return p.parse();
}

// ---- fractions ----

RationalFunction::RationalFunction(LaurentPoly n, LaurentPoly d)
    : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error("rational function with zero denominator");
}

RationalFunction RationalFunction::inverse() const { return frac_inv(*this); }

RationalFunction frac_add(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction frac_mul(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
}

RationalFunction frac_inv(const RationalFunction& a) {
    if (a.num.is_zero()) throw Error("inverting the zero rational function");
    return {a.den, a.num};
}

bool frac_eq(const RationalFunction& a, const RationalFunction& b) {
    return a.num * b.den == b.num * a.den;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return frac_add(a, b);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return frac_mul(a, b);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return frac_mul(a, frac_inv(b));
}

}  // namespace snakefrac
