// Multiplicative character sums mod a small odd prime p.
//
// Characters of exact order d | p-1 are x -> e(j * dlog(x) / d) with
// gcd(j, d) = 1, where e(t) = exp(2*pi*i*t) and dlog is taken to a fixed
// least primitive root.  Root-of-unity indices stay exact (k mod d) until
// the final complex summation; only squarefree d carry nonzero moebius
// weight, so the tables only cover those.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"
#include "primroot/factorization.hpp"
#include "primroot/primitive_root.hpp"

namespace primroot {

inline constexpr std::uint64_t CHARACTER_TABLE_CEILING = 10'000;

struct CharacterTable {
    std::uint64_t p = 0;
    std::uint64_t g = 0;                    // least primitive root used for dlog
    std::vector<std::uint64_t> dlog;        // dlog[x] for 1 <= x < p; dlog[g^k] = k
    PrimeFactorization pm1_factors;

    struct OrderClass {
        std::uint64_t d = 1;                    // squarefree divisor of p-1
        int mu = 1;                             // moebius(d)
        std::uint64_t phi = 1;                  // euler_phi(d)
        std::vector<std::uint64_t> coprime_j;   // 1 <= j <= d, gcd(j, d) = 1
        std::vector<std::complex<double>> root; // root[k] = e(k / d)
    };
    std::vector<OrderClass> classes;  // one per squarefree d | p-1, ascending d

    std::uint64_t dlog_of(std::uint64_t x) const {
        if (x == 0 || x >= p) throw argument_error("dlog: x must satisfy 1 <= x < p");
        return dlog[x];
    }
};

inline CharacterTable build_character_table(std::uint64_t p) {
    if (p > CHARACTER_TABLE_CEILING)
        throw capacity_error("build_character_table: p above table ceiling 1e4");
    if (p < 3 || !is_prime_u64(p))
        throw argument_error("build_character_table: p must be an odd prime");
    CharacterTable t;
    t.p = p;
    t.pm1_factors = factorize(BigInt(p - 1));
    t.g = to_u64(least_primitive_root(BigInt(p), t.pm1_factors));
    t.dlog.assign(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k) {
        t.dlog[x] = k;
        x = mulmod_u64(x, t.g, p);
    }

    std::vector<std::uint64_t> qs;
    for (const auto& [q, e] : t.pm1_factors.factors) qs.push_back(to_u64(q));
    const std::size_t m = qs.size();
    constexpr double TWO_PI = 6.283185307179586476925286766559;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        CharacterTable::OrderClass c;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ULL << i)) {
                c.d *= qs[i];
                c.mu = -c.mu;
                c.phi *= qs[i] - 1;
            }
        c.root.reserve(c.d);
        for (std::uint64_t k = 0; k < c.d; ++k)
            c.root.emplace_back(std::cos(TWO_PI * static_cast<double>(k) / static_cast<double>(c.d)),
                                std::sin(TWO_PI * static_cast<double>(k) / static_cast<double>(c.d)));
        for (std::uint64_t j = 1; j <= c.d; ++j)
            if (std::gcd(j, c.d) == 1) c.coprime_j.push_back(j);
        t.classes.push_back(std::move(c));
    }
    std::sort(t.classes.begin(), t.classes.end(),
              [](const auto& a, const auto& b) { return a.d < b.d; });
    return t;
}

namespace detail {

// Sum of chi(x) over the characters of exact order d (complex; the
// imaginary parts cancel only after summation).
inline std::complex<double> exact_order_character_sum(const CharacterTable::OrderClass& c,
                                                      std::uint64_t ell) {
    std::complex<double> s{0.0, 0.0};
    for (std::uint64_t j : c.coprime_j) s += c.root[mulmod_u64(j, ell % c.d, c.d)];
    return s;
}

}  // namespace detail

// Indicator of "x is e-free mod p" as a weighted character sum: evaluates
// to 1 on e-free x and 0 otherwise, up to floating-point roundoff.
inline double efree_indicator(std::uint64_t x, std::uint64_t e, const CharacterTable& t) {
    if (e < 1 || (t.p - 1) % e != 0) throw argument_error("efree_indicator: e must divide p-1");
    if (x % t.p == 0) throw argument_error("efree_indicator: x divisible by p");
    const std::uint64_t ell = t.dlog_of(x % t.p);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& c : t.classes) {
        if (e % c.d != 0) continue;
        acc += (static_cast<double>(c.mu) / static_cast<double>(c.phi)) *
               detail::exact_order_character_sum(c, ell);
    }
    // phi(e)/e over the distinct primes of e (e | p-1, so each appears in pm1).
    double phi_over_e = 1.0;
    for (const auto& [q, exp] : t.pm1_factors.factors) {
        const std::uint64_t qu = to_u64(q);
        if (e % qu == 0) phi_over_e *= 1.0 - 1.0 / static_cast<double>(qu);
    }
    return phi_over_e * acc.real();
}

// Indicator of "x is a primitive root mod p" (the e = p-1 case).
inline double primitive_root_indicator(std::uint64_t x, const CharacterTable& t) {
    return efree_indicator(x, t.p - 1, t);
}

}  // namespace primroot
