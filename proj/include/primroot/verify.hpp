// Exhaustive small-range verification: scan every prime p <= limit,
// compute the least primitive root directly, and test g < p^alpha.
// Decisions near the floating-point boundary fall back to the exact
// integer comparison g^den < p^num.
#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"
#include "primroot/power_bounds.hpp"
#include "primroot/primes.hpp"

namespace primroot {

struct SmallScanResult {
    std::uint64_t limit = 0;
    std::uint64_t primes_scanned = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;  // (p, least root)
};

inline SmallScanResult verify_small(const AlphaSpec& alpha, std::uint64_t limit) {
    if (limit > 100'000'000) throw capacity_error("verify_small: limit above 1e8");
    SmallScanResult res;
    res.limit = limit;
    if (limit < 2) return res;
    const std::vector<std::uint64_t> primes = primes_up_to(limit);
    std::vector<std::uint64_t> small;  // trial divisors up to sqrt(limit)
    {
        std::uint64_t r = 2;
        while (r * r < limit) ++r;
        small = primes_up_to(r);
    }
    std::vector<std::uint64_t> qs, exps;
    for (std::uint64_t p : primes) {
        if (p == 2) {  // least root 1 < 2^alpha for every alpha > 0
            res.primes_scanned += 1;
            continue;
        }
        qs.clear();
        std::uint64_t m = p - 1;
        for (std::uint64_t q : small) {
            if (q * q > m) break;
            if (m % q == 0) {
                qs.push_back(q);
                while (m % q == 0) m /= q;
            }
        }
        if (m > 1) qs.push_back(m);
        exps.clear();
        for (std::uint64_t q : qs) exps.push_back((p - 1) / q);
        std::uint64_t g = 2;
        for (;; ++g) {
            bool primitive = true;
            for (std::uint64_t e : exps)
                if (powmod_u64(g, e, p) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) break;
        }
        // g < p^alpha, decided in logs away from the boundary and exactly on it.
        const double gap = std::log(static_cast<double>(g)) -
                           alpha.value * std::log(static_cast<double>(p));
        bool ok;
        if (gap < -1e-4)
            ok = true;
        else if (gap > 1e-4)
            ok = false;
        else
            ok = exact_less_than_pow(BigInt(g), BigInt(p), alpha);
        if (!ok) res.violations.emplace_back(p, g);
        res.primes_scanned += 1;
    }
    return res;
}

}  // namespace primroot
