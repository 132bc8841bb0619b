// Big-natural substrate plus the modular helpers the whole library leans on.
// u64 fast paths (with __int128 products) cover every desk-scale hot loop.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

using BigInt = boost::multiprecision::cpp_int;

inline bool fits_u64(const BigInt& n) {
    return n >= 0 && n <= BigInt(UINT64_MAX);
}

inline std::uint64_t to_u64(const BigInt& n) {
    if (!fits_u64(n)) throw argument_error("to_u64: value out of range");
    return static_cast<std::uint64_t>(n);
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

// Natural log of n >= 1 from the top 53 bits; relative error ~1e-16 of log n.
inline double log_bigint(const BigInt& n) {
    if (n <= 0) throw domain_error("log_bigint: n must be positive");
    if (n == 1) return 0.0;
    const unsigned bits = boost::multiprecision::msb(n);  // highest set bit index
    if (bits <= 62) return std::log(static_cast<double>(to_u64(n)));
    const BigInt top = n >> (bits - 52);
    return std::log(static_cast<double>(to_u64(top))) + (bits - 52) * std::log(2.0);
}

// Parses a decimal natural, accepting scientific notation when it denotes an
// exact integer ("2.5e15" -> 2500000000000000). Anything non-integral throws.
inline BigInt parse_big_decimal(const std::string& text) {
    if (text.empty()) throw argument_error("parse_big_decimal: empty string");
    std::size_t i = 0;
    if (text[i] == '+') ++i;
    std::string digits;
    long long frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else if (ch == '.') {
            if (seen_point) throw argument_error("parse_big_decimal: duplicate point in '" + text + "'");
            seen_point = true;
        } else if (ch == 'e' || ch == 'E') {
            break;
        } else {
            throw argument_error("parse_big_decimal: bad character in '" + text + "'");
        }
    }
    if (!seen_digit) throw argument_error("parse_big_decimal: no digits in '" + text + "'");
    long long exp10 = 0;
    if (i < text.size()) {  // exponent part
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = (text[i++] == '-');
        if (i >= text.size()) throw argument_error("parse_big_decimal: empty exponent in '" + text + "'");
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw argument_error("parse_big_decimal: bad exponent in '" + text + "'");
            exp10 = exp10 * 10 + (text[i] - '0');
            if (exp10 > 1000000) throw capacity_error("parse_big_decimal: exponent too large");
        }
        if (neg) exp10 = -exp10;
    }
    const long long shift = exp10 - frac_digits;
    if (shift < 0) {
        // Integral only if the trailing digits being shifted away are zero.
        for (long long k = 0; k < -shift; ++k) {
            if (digits.empty() || digits.back() != '0')
                throw argument_error("parse_big_decimal: '" + text + "' is not an integer");
            digits.pop_back();
        }
        if (digits.empty()) digits = "0";
        return BigInt(digits);
    }
    BigInt v(digits);
    for (long long k = 0; k < shift; ++k) v *= 10;
    return v;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& m) {
    if (fits_u64(base) && fits_u64(exp) && fits_u64(m) && m > 0)
        return BigInt(powmod_u64(to_u64(base), to_u64(exp), to_u64(m)));
    return boost::multiprecision::powm(base, exp, m);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace primroot
