// Exact arithmetic on p^alpha for decimal alpha: alpha is carried as a
// reduced fraction num/den so that g < p^alpha and floor(p^alpha) can be
// settled by integer comparisons, free of floating-point boundary effects.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"

namespace primroot {

struct AlphaSpec {
    std::string text;        // the decimal literal as given, e.g. "0.6309"
    double value = 0.0;      // rounded double, for logarithmic estimates
    std::uint64_t num = 0;   // exact alpha = num / den, reduced
    std::uint64_t den = 1;
};

inline AlphaSpec parse_alpha(const std::string& text) {
    std::size_t i = 0;
    std::uint64_t ip = 0, fp = 0, fdigits = 0;
    bool any = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        ip = ip * 10 + static_cast<std::uint64_t>(text[i] - '0');
        any = true;
    }
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            if (++fdigits > 17) throw argument_error("parse_alpha: too many fraction digits");
            fp = fp * 10 + static_cast<std::uint64_t>(text[i] - '0');
            any = true;
        }
    }
    if (!any || i != text.size())
        throw argument_error("parse_alpha: malformed decimal '" + text + "'");
    AlphaSpec a;
    a.text = text;
    a.den = 1;
    for (std::uint64_t k = 0; k < fdigits; ++k) a.den *= 10;
    a.num = ip * a.den + fp;
    if (a.num == 0 || a.num > a.den)
        throw argument_error("parse_alpha: alpha must lie in (0, 1], got '" + text + "'");
    const std::uint64_t g = std::gcd(a.num, a.den);
    a.num /= g;
    a.den /= g;
    a.value = std::stod(text);
    return a;
}

// Integer floor of the k-th root of n (Newton, exact).
inline BigInt kth_root(const BigInt& n, unsigned k) {
    if (k == 0) throw argument_error("kth_root: k must be >= 1");
    if (n < 0) throw argument_error("kth_root: n must be >= 0");
    if (n == 0 || k == 1) return n;
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    BigInt x = BigInt(1) << ((bits + k - 1) / k);
    while (true) {
        const BigInt y = ((k - 1) * x + n / boost::multiprecision::pow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (boost::multiprecision::pow(x, k) > n) --x;
    return x;
}

namespace detail {

inline void check_pow_capacity(const BigInt& base, std::uint64_t exp) {
    const std::uint64_t bits = base <= 1 ? 1 : boost::multiprecision::msb(base) + 1;
    if (bits * exp > (1ULL << 24)) throw capacity_error("exact power exceeds capacity");
}

}  // namespace detail

// floor(p^alpha) computed exactly as the den-th root of p^num.
inline BigInt floor_pow(const BigInt& p, const AlphaSpec& alpha) {
    if (p < 1) throw argument_error("floor_pow: p must be >= 1");
    detail::check_pow_capacity(p, alpha.num);
    return kth_root(boost::multiprecision::pow(p, static_cast<unsigned>(alpha.num)),
                    static_cast<unsigned>(alpha.den));
}

// Exact predicate g < p^alpha, i.e. g^den < p^num.
inline bool exact_less_than_pow(const BigInt& g, const BigInt& p, const AlphaSpec& alpha) {
    if (g < 0 || p < 1) throw argument_error("exact_less_than_pow: need g >= 0, p >= 1");
    detail::check_pow_capacity(g, alpha.den);
    detail::check_pow_capacity(p, alpha.num);
    return boost::multiprecision::pow(g, static_cast<unsigned>(alpha.den)) <
           boost::multiprecision::pow(p, static_cast<unsigned>(alpha.num));
}

}  // namespace primroot
