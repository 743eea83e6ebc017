#include "snakefrac/cf.hpp"

#include <algorithm>
#include <sstream>

namespace snakefrac {

ContinuedFraction::ContinuedFraction(std::vector<BigInt> cs) : coeffs(std::move(cs)) {
    if (coeffs.empty()) throw Error("continued fraction needs at least one coefficient");
    for (const auto& a : coeffs)
        if (a < 1) throw Error("continued fraction coefficients must be >= 1");
}

ContinuedFraction::ContinuedFraction(std::initializer_list<long> cs)
    : ContinuedFraction(std::vector<BigInt>(cs.begin(), cs.end())) {}

bool ContinuedFraction::is_canonical() const { return n() == 1 || coeffs.back() >= 2; }

bool cf_less(const ContinuedFraction& a, const ContinuedFraction& b) {
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
}

ContinuedFraction parse_cf(const std::string& text) {
    std::vector<BigInt> cs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            cs.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw Error("cannot parse continued fraction: '" + text + "'");
        }
    }
    return ContinuedFraction(std::move(cs));
}

std::string cf_str(const ContinuedFraction& cf) {
    std::string out;
    for (int k = 0; k < cf.n(); ++k) {
        if (k) out += ",";
        out += cf.coeffs[static_cast<size_t>(k)].get_str();
    }
    return out;
}

BigInt continuant(const ContinuedFraction& cf) {
    return continuant_ring(cf.coeffs, BigInt(1), BigInt(0));
}

Rational evaluate(const ContinuedFraction& cf) {
    std::vector<BigInt> tail(cf.coeffs.begin() + 1, cf.coeffs.end());
    BigInt num = continuant(cf);
    BigInt den = continuant_ring(tail, BigInt(1), BigInt(0));
    return make_rational(num, den);
}

ContinuedFraction from_rational(const Rational& r) {
    if (r <= 1) throw Error("from_rational requires r > 1");
    std::vector<BigInt> cs;
    BigInt p = r.get_num(), q = r.get_den();
    while (q != 0) {
        cs.push_back(floor_div(p, q));
        BigInt rem = p - cs.back() * q;
        p = q;
        q = rem;
    }
    ContinuedFraction cf(std::move(cs));
    if (!cf.is_canonical()) throw Error("internal: Euclidean algorithm produced trailing 1");
    return cf;
}

ContinuedFraction g_map(const ContinuedFraction& cf) {
    if (cf.n() == 1 && cf.coeffs[0] == 1) throw Error("g is not defined on [1]");
    if (cf.coeffs.back() > 1) return cf;
    std::vector<BigInt> cs(cf.coeffs.begin(), cf.coeffs.end() - 1);
    cs.back() += 1;
    return ContinuedFraction(std::move(cs));
}

ContinuedFraction reverse_cf(const ContinuedFraction& cf) {
    std::vector<BigInt> cs(cf.coeffs.rbegin(), cf.coeffs.rend());
    return ContinuedFraction(std::move(cs));
}

BigInt continuant_ring(const std::vector<BigInt>& entries) {
    return continuant_ring(entries, BigInt(1), BigInt(0));
}

GaussRational continuant_ring(const std::vector<GaussRational>& entries) {
    return continuant_ring(entries, GaussRational(1), GaussRational(0));
}

std::vector<GaussRational> cf_entries(const ContinuedFraction& cf) {
    std::vector<GaussRational> out;
    out.reserve(cf.coeffs.size());
    for (const auto& a : cf.coeffs) out.emplace_back(Rational(a));
    return out;
}

std::vector<GaussRational> parse_gauss_list(const std::string& text) {
    std::vector<GaussRational> zs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) zs.push_back(parse_gauss(tok));
    if (zs.empty()) throw Error("empty entry list");
    return zs;
}

}  // namespace snakefrac
