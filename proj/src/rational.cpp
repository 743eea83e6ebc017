#include "snakefrac/rational.hpp"

#include <cctype>

namespace snakefrac {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse rational: '" + text + "'");
    }
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    if (b.is_zero()) throw Error("division by zero Gaussian rational");
    Rational n = b.norm();
    GaussRational t = a * b.conj();
    return {t.re / n, t.im / n};
}

GaussRational GaussRational::inverse() const { return GaussRational(1) / *this; }

bool gauss_less(const GaussRational& a, const GaussRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

namespace {

// Splits "a+bi" into the real and imaginary summands; each summand is a
// signed rational literal, the imaginary one ending in 'i'.
void split_gauss(const std::string& s, std::string& real_part, std::string& imag_part) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error("empty Gaussian rational");
    // top-level '+'/'-' not in first position splits the two parts
    size_t split = std::string::npos;
    for (size_t k = 1; k < t.size(); ++k) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/' && t[k - 1] != '+' && t[k - 1] != '-')
            split = k;  // keep last, the imaginary summand trails
    }
    if (split == std::string::npos) {
        if (t.back() == 'i') {
            real_part = "";
            imag_part = t;
        } else {
            real_part = t;
            imag_part = "";
        }
        return;
    }
    real_part = t.substr(0, split);
    imag_part = t.substr(split);
    if (imag_part.back() != 'i') {  // "a-b" with no i is just malformed here
        if (real_part.back() == 'i') throw Error("imaginary part must come last: '" + s + "'");
        throw Error("cannot parse Gaussian rational: '" + s + "'");
    }
}

Rational parse_signed_rational(std::string s) {
    if (s.empty()) throw Error("empty rational literal");
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    Rational r = parse_rational(s);
    return neg ? Rational(-r) : r;
}

}  // namespace

GaussRational parse_gauss(const std::string& text) {
    std::string re_s, im_s;
    split_gauss(text, re_s, im_s);
    GaussRational z;
    if (!re_s.empty()) z.re = parse_signed_rational(re_s);
    if (!im_s.empty()) {
        std::string body = im_s.substr(0, im_s.size() - 1);
        if (body.empty() || body == "+")
            z.im = 1;
        else if (body == "-")
            z.im = -1;
        else
            z.im = parse_signed_rational(body);
    }
    return z;
}

std::string gauss_str(const GaussRational& z) {
    if (z.im == 0) return rational_str(z.re);
    std::string im_body;
    if (z.im == 1)
        im_body = "i";
    else if (z.im == -1)
        im_body = "-i";
    else
        im_body = rational_str(z.im) + "i";
    if (z.re == 0) return im_body;
    if (z.im > 0) return rational_str(z.re) + "+" + im_body;
    return rational_str(z.re) + im_body;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const BigInt &n = r.get_num(), &d = r.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return make_rational(sn, sd);
}

std::optional<GaussRational> gauss_sqrt(const GaussRational& z) {
    if (z.is_zero()) return GaussRational(0);
    if (z.is_real()) {
        if (auto s = rational_sqrt(z.re)) return GaussRational(*s);
        if (auto s = rational_sqrt(-z.re)) return GaussRational(Rational(0), *s);
        return std::nullopt;
    }
    // w = e+fi with e^2-f^2 = re, 2ef = im; needs |z| rational.
    auto mod = rational_sqrt(z.norm());
    if (!mod) return std::nullopt;
    auto e2 = Rational((z.re + *mod) / 2);
    auto e = rational_sqrt(e2);
    if (!e || *e == 0) return std::nullopt;
    Rational f = z.im / (2 * *e);
    GaussRational w(*e, f);
    if (!(w * w == z)) return std::nullopt;
    if (w.re < 0 || (w.re == 0 && w.im < 0)) w = -w;
    return w;
}

BigInt ceil_sqrt(const Rational& r) {
    if (r < 0) throw Error("ceil_sqrt of negative rational");
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
    for (BigInt cand = s > 0 ? BigInt(s - 1) : BigInt(0);; ++cand)
        if (Rational(cand * cand) >= r) return cand;
}

std::string decimal_str(const Rational& r, int digits) {
    if (digits < 0) throw Error("negative digit count");
    BigInt pow10 = 1;
    for (int k = 0; k < digits; ++k) pow10 *= 10;
    Rational scaled = r * Rational(pow10);
    BigInt t = scaled.get_num() / scaled.get_den();  // truncates toward zero
    bool neg = t < 0;
    BigInt a = abs(t);
    std::string s = a.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    if (neg && (a != 0)) out = "-" + out;
    return out;
}

}  // namespace snakefrac
