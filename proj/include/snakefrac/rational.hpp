#ifndef SNAKEFRAC_RATIONAL_HPP
#define SNAKEFRAC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace snakefrac {

using BigInt = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical rational: reduced, denominator > 0.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& r);
BigInt floor_div(const BigInt& a, const BigInt& b);

// "p/q" or plain "p"; q > 0 after reduction.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);

// Complex number with rational real and imaginary parts.
struct GaussRational {
    Rational re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(long r) : re(r), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, Rational(-im)}; }
    // re^2 + im^2, the squared modulus.
    Rational norm() const { return re * re + im * im; }
    GaussRational inverse() const;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b);
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

// Total order used only for canonical sorting of terms and test fixtures.
bool gauss_less(const GaussRational& a, const GaussRational& b);

// "a/b+c/di" with either part omissible: "2i", "-3+i", "1/2-3/4i", "5".
GaussRational parse_gauss(const std::string& text);
std::string gauss_str(const GaussRational& z);

// Exact square root in Q(i) when one exists.
std::optional<GaussRational> gauss_sqrt(const GaussRational& z);
std::optional<Rational> rational_sqrt(const Rational& r);

// Smallest nonnegative integer a with a^2 >= r (r >= 0).
BigInt ceil_sqrt(const Rational& r);

// Decimal rendering, truncated toward zero, exactly `digits` fractional digits.
std::string decimal_str(const Rational& r, int digits);

}  // namespace snakefrac

#endif
