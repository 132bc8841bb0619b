// Integer factorization: staged trial division plus Brent's rho with a
// deterministic seed chain and an explicit work budget.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"
#include "primroot/primes.hpp"

namespace primroot {

struct PrimeFactorization {
    BigInt value = 1;
    std::vector<std::pair<BigInt, unsigned>> factors;  // sorted by prime, exponents >= 1
};

struct FactorOptions {
    std::uint64_t trial_limit = 10'000'000;  // trial-divide by primes up to this bound
    std::uint64_t rho_iterations = 50'000'000;  // total rho work budget across all factors
    std::uint64_t seed = 1;  // start of the deterministic rho parameter chain
};

namespace detail {

inline std::uint64_t rho_brent_u64(std::uint64_t n, std::uint64_t& budget, std::uint64_t& seed) {
    // Returns a nontrivial factor of composite odd n, or 0 if the budget ran out.
    while (budget > 0) {
        seed = splitmix64(seed);
        const std::uint64_t c = 1 + seed % (n - 1);
        std::uint64_t y = 1 + splitmix64(seed) % (n - 1);
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                const std::uint64_t m = std::min<std::uint64_t>(128, r - k);
                for (std::uint64_t i = 0; i < m; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                budget = budget > m ? budget - m : 0;
                g = gcd_u64(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            // Backtrack one step at a time to split the batched gcd.
            do {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

inline BigInt rho_brent_big(const BigInt& n, std::uint64_t& budget, std::uint64_t& seed) {
    while (budget > 0) {
        seed = splitmix64(seed);
        const BigInt c = 1 + BigInt(seed) % (n - 1);
        BigInt y = 1 + BigInt(splitmix64(seed)) % (n - 1);
        BigInt g = 1, q = 1, x = 0, ys = 0;
        std::uint64_t r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                const std::uint64_t m = std::min<std::uint64_t>(128, r - k);
                for (std::uint64_t i = 0; i < m; ++i) {
                    y = (y * y + c) % n;
                    q = (q * (x > y ? x - y : y - x)) % n;
                }
                budget = budget > m ? budget - m : 0;
                g = boost::multiprecision::gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

inline void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& acc, std::uint64_t& budget,
                       std::uint64_t& seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        acc[n] += 1;
        return;
    }
    BigInt d;
    if (fits_u64(n)) {
        const std::uint64_t f = rho_brent_u64(to_u64(n), budget, seed);
        if (f == 0) throw factor_error("factorize: rho budget exhausted on " + to_decimal(n));
        d = f;
    } else {
        d = rho_brent_big(n, budget, seed);
        if (d == 0) throw factor_error("factorize: rho budget exhausted on " + to_decimal(n));
    }
    factor_rec(d, acc, budget, seed);
    factor_rec(n / d, acc, budget, seed);
}

}  // namespace detail

inline PrimeFactorization factorize(const BigInt& n, const FactorOptions& opt = {}) {
    if (n < 1) throw argument_error("factorize: n must be >= 1");
    PrimeFactorization out;
    out.value = n;
    BigInt rem = n;
    std::map<BigInt, unsigned> acc;
    // Staged trial division: cheap primes first, widen only while useful.
    // The prime list is a shared cached snapshot, so repeated factorize calls
    // (the divisor-tree hot path) never re-sieve.
    std::uint64_t done = 1;
    for (std::uint64_t stage : {std::uint64_t(1'000), std::uint64_t(100'000), opt.trial_limit}) {
        stage = std::min(stage, opt.trial_limit);
        if (stage <= done) continue;
        const auto primes = detail::primes_covering(stage);
        if (fits_u64(rem)) {
            std::uint64_t r = to_u64(rem);
            for (std::uint64_t p : *primes) {
                if (p <= done) continue;
                if (p > stage || p * p > r) break;
                while (r % p == 0) {
                    acc[BigInt(p)] += 1;
                    r /= p;
                }
            }
            rem = r;
        } else {
            for (std::uint64_t p : *primes) {
                if (p <= done) continue;
                if (p > stage) break;
                if (fits_u64(rem) && p * p > to_u64(rem)) break;
                while (rem % p == 0) {
                    acc[BigInt(p)] += 1;
                    rem /= p;
                }
            }
        }
        done = stage;
        if (rem == 1 || is_prime(rem)) break;
        if (BigInt(stage) * stage > rem) break;  // remainder is prime or 1 by now
    }
    if (rem > 1) {
        std::uint64_t budget = opt.rho_iterations;
        std::uint64_t seed = opt.seed;
        detail::factor_rec(rem, acc, budget, seed);
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

inline BigInt euler_phi(const PrimeFactorization& f) {
    BigInt phi = f.value;
    for (const auto& [p, e] : f.factors) phi = phi / p * (p - 1);
    return phi;
}

inline int moebius(const PrimeFactorization& f) {
    for (const auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

inline std::size_t omega(const PrimeFactorization& f) { return f.factors.size(); }

inline BigInt radical(const PrimeFactorization& f) {
    BigInt r = 1;
    for (const auto& [p, e] : f.factors) r *= p;
    return r;
}

inline std::vector<BigInt> divisors(const PrimeFactorization& f, std::size_t max_count = 1'000'000) {
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        if (base * (e + 1) > max_count) throw capacity_error("divisors: too many divisors");
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primroot
