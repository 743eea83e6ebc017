#ifndef SNAKEFRAC_CF_HPP
#define SNAKEFRAC_CF_HPP

#include <string>
#include <vector>

#include "snakefrac/rational.hpp"

namespace snakefrac {

// Positive continued fraction [a1,...,an], n >= 1, every ai >= 1.
struct ContinuedFraction {
    std::vector<BigInt> coeffs;

    explicit ContinuedFraction(std::vector<BigInt> cs);
    ContinuedFraction(std::initializer_list<long> cs);

    int n() const { return static_cast<int>(coeffs.size()); }
    // Canonical form: single coefficient, or last coefficient >= 2.
    bool is_canonical() const;

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.coeffs == b.coeffs;
    }
};

bool cf_less(const ContinuedFraction& a, const ContinuedFraction& b);

ContinuedFraction parse_cf(const std::string& text);  // "2,3,1,2,3"
std::string cf_str(const ContinuedFraction& cf);

// Numerator N[a1,...,an] of the continued fraction, by the three-term
// recurrence N[a1,...,an] = a1 N[a2,...,an] + N[a3,...,an] with N[] = 1
// and the value 0 one step past the empty sequence.
BigInt continuant(const ContinuedFraction& cf);

// Value in lowest terms; numerator = continuant(cf), denominator =
// continuant of the tail.
Rational evaluate(const ContinuedFraction& cf);

// Euclidean algorithm on r > 1; last coefficient lands >= 2 on its own.
ContinuedFraction from_rational(const Rational& r);

// [a1,...,an-1+1] when an = 1, identity otherwise; undefined on [1].
ContinuedFraction g_map(const ContinuedFraction& cf);

ContinuedFraction reverse_cf(const ContinuedFraction& cf);

// Generic three-term continuant over any commutative ring element with
// +, * and explicit one/zero.
template <typename T>
T continuant_ring(const std::vector<T>& entries, const T& one, const T& zero) {
    T below = zero, last = one;  // N of the (k+2)- and (k+1)-suffixes
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        T cur = *it * last + below;
        below = last;
        last = cur;
    }
    return last;
}

BigInt continuant_ring(const std::vector<BigInt>& entries);
GaussRational continuant_ring(const std::vector<GaussRational>& entries);

// Continued fraction with entries in a field; evaluation is innermost-out
// and reports the 1-based depth whose partial value is zero.
struct ZeroDenominator : Error {
    int depth;
    explicit ZeroDenominator(int d)
        : Error("zero intermediate denominator at depth " + std::to_string(d)), depth(d) {}
};

template <typename T>
T evaluate_general(const std::vector<T>& entries) {
    if (entries.empty()) throw Error("empty general continued fraction");
    T value = entries.back();
    for (int k = static_cast<int>(entries.size()) - 2; k >= 0; --k) {
        if (value.is_zero()) throw ZeroDenominator(k + 2);
        value = entries[static_cast<size_t>(k)] + value.inverse();
    }
    return value;
}

// Rescaling [r a1, a2/r, r a3, ...]; multiplies the value by r.
template <typename T>
std::vector<T> scale_general(const std::vector<T>& entries, const T& r) {
    if (r.is_zero()) throw Error("scale by zero");
    std::vector<T> out;
    out.reserve(entries.size());
    for (size_t k = 0; k < entries.size(); ++k)
        out.push_back(k % 2 == 0 ? entries[k] * r : entries[k] / r);
    return out;
}

std::vector<GaussRational> cf_entries(const ContinuedFraction& cf);

std::vector<GaussRational> parse_gauss_list(const std::string& text);

}  // namespace snakefrac

#endif
