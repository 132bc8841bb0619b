// Deliberately naive reference implementations used to cross-check the
// fast paths.  Everything here is O(p)-ish enumeration or trial division;
// none of it shares code with the production routines it validates.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "primroot/errors.hpp"

namespace primroot {
namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t multiplicative_order(std::uint64_t n, std::uint64_t p) {
    if (p < 2 || n % p == 0) throw argument_error("multiplicative_order: need gcd(n, p) = 1");
    std::uint64_t x = n % p, ord = 1;
    while (x != 1) {
        x = mul_mod(x, n % p, p);
        if (++ord >= p) throw domain_error("multiplicative_order: no order found (p not prime?)");
    }
    return ord;
}

inline bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
    if (p == 2) return g % 2 == 1;
    return multiplicative_order(g, p) == p - 1;
}

inline std::uint64_t least_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p)) return g;
    throw domain_error("least_primitive_root: none found (p not prime?)");
}

inline std::uint64_t phi_gcd_count(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::uint64_t a = k, b = n;
        while (b) {
            const std::uint64_t t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++c;
    }
    return c;
}

// The set of q-th powers mod p, by enumeration.
inline std::set<std::uint64_t> power_residues(std::uint64_t q, std::uint64_t p) {
    std::set<std::uint64_t> s;
    for (std::uint64_t x = 1; x < p; ++x) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < q; ++i) v = mul_mod(v, x, p);
        s.insert(v);
    }
    return s;
}

// n is e-free mod p iff n is a q-th power residue for no prime q | e.
inline bool is_e_free(std::uint64_t n, std::uint64_t e, std::uint64_t p) {
    if (n % p == 0) throw argument_error("oracle is_e_free: n divisible by p");
    for (std::uint64_t q = 2; q <= e; ++q) {
        if (e % q != 0 || !is_prime_trial(q)) continue;
        if (power_residues(q, p).count(n % p)) return false;
    }
    return true;
}

// Bulk-query variant: builds each q-th power-residue set once per p.
class EFreeOracle {
  public:
    explicit EFreeOracle(std::uint64_t p) : p_(p) {
        for (std::uint64_t q = 2; q < p; ++q)
            if ((p - 1) % q == 0 && is_prime_trial(q)) residues_.emplace_back(q, power_residues(q, p));
    }

    bool is_e_free(std::uint64_t n, std::uint64_t e) const {
        if (n % p_ == 0) throw argument_error("oracle is_e_free: n divisible by p");
        for (const auto& [q, set] : residues_)
            if (e % q == 0 && set.count(n % p_)) return false;
        return true;
    }

  private:
    std::uint64_t p_;
    std::vector<std::pair<std::uint64_t, std::set<std::uint64_t>>> residues_;
};

inline std::vector<std::uint64_t> primes_in_range_trial(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        if (is_prime_trial(n)) out.push_back(n);
    return out;
}

// Product of the first k primes, with its own trial-division enumeration.
template <typename Int>
Int primorial(std::size_t k) {
    Int v = 1;
    std::uint64_t p = 2;
    for (std::size_t i = 0; i < k; ++i) {
        while (!is_prime_trial(p)) ++p;
        v *= p;
        ++p;
    }
    return v;
}

// Segmented sieve over [lo, hi], hi <= 1e10.
inline std::vector<std::uint64_t> segmented_primes(std::uint64_t lo, std::uint64_t hi) {
    if (hi > 10'000'000'000ULL) throw capacity_error("segmented_primes: hi above 1e10");
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    lo = std::max<std::uint64_t>(lo, 2);
    std::vector<std::uint64_t> base;
    {
        std::uint64_t r = 2;
        while (r * r <= hi) ++r;  // r = floor(sqrt(hi)) + 1
        std::vector<bool> comp(r + 1, false);
        for (std::uint64_t i = 2; i <= r; ++i)
            if (!comp[i]) {
                base.push_back(i);
                for (std::uint64_t j = i * i; j <= r; j += i) comp[j] = true;
            }
    }
    constexpr std::uint64_t SEG = 1 << 20;
    std::vector<bool> comp;
    for (std::uint64_t start = lo; start <= hi; start += SEG) {
        const std::uint64_t end = std::min(hi, start + SEG - 1);
        comp.assign(end - start + 1, false);
        for (std::uint64_t p : base) {
            if (p * p > end) break;
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) comp[j - start] = true;
        }
        for (std::uint64_t n = start; n <= end; ++n)
            if (!comp[n - start] && n >= 2) out.push_back(n);
    }
    return out;
}

}  // namespace oracle
}  // namespace primroot
