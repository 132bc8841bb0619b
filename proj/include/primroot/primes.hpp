// Prime enumeration, primorials, and primality testing.
//
// Primality is deterministic (strong-pseudoprime bases = first 13 primes)
// for n < 3.317e24 and declared-probabilistic above: 64 extra rounds with
// bases derived deterministically from n, error probability < 4^-64.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"

namespace primroot {

inline constexpr std::uint64_t PRIME_ENUMERATION_CEILING = 1'000'000'000ULL;

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit > PRIME_ENUMERATION_CEILING)
        throw capacity_error("primes_up_to: limit above enumeration ceiling 1e9");
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

namespace detail {

// Shared, grow-on-demand prime list covering at least [2, bound].  Readers
// keep the snapshot alive through the shared_ptr, so later growth never
// invalidates anything.
inline std::shared_ptr<const std::vector<std::uint64_t>> primes_covering(std::uint64_t bound) {
    static std::shared_ptr<const std::vector<std::uint64_t>> cache;
    static std::uint64_t cache_bound = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cache_bound < bound) {
        cache_bound = std::max<std::uint64_t>(bound, 1'000);
        cache = std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(cache_bound));
    }
    return cache;
}

// Snapshot guaranteed to contain the first k primes.
inline std::shared_ptr<const std::vector<std::uint64_t>> first_primes_at_least(std::size_t k) {
    const double kk = static_cast<double>(std::max<std::size_t>(k, 6));
    auto bound = static_cast<std::uint64_t>(kk * (std::log(kk) + std::log(std::log(kk))) + 16);
    while (true) {
        auto snap = primes_covering(bound);
        if (snap->size() >= k) return snap;
        bound *= 2;
    }
}

}  // namespace detail

inline std::vector<std::uint64_t> first_n_primes(std::size_t k) {
    if (k > 2'000'000) throw capacity_error("first_n_primes: k too large");
    const auto snap = detail::first_primes_at_least(k);
    return {snap->begin(), snap->begin() + static_cast<std::ptrdiff_t>(k)};
}

inline std::uint64_t nth_prime(std::size_t k) {  // 1-based
    if (k == 0) throw argument_error("nth_prime: k must be >= 1");
    return (*detail::first_primes_at_least(k))[k - 1];
}

inline BigInt primorial(std::size_t k) {
    if (k < 1) throw argument_error("primorial: k must be >= 1");
    if (k > 100'000) throw capacity_error("primorial: k too large");
    const auto ps = detail::first_primes_at_least(k);
    BigInt v = 1;
    for (std::size_t i = 0; i < k; ++i) v *= (*ps)[i];
    return v;
}

inline double log_primorial(std::size_t k) {
    if (k < 1) throw argument_error("log_primorial: k must be >= 1");
    if (k > 100'000) throw capacity_error("log_primorial: k too large");
    const auto ps = detail::first_primes_at_least(k);
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += std::log(static_cast<double>((*ps)[i]));
    return s;
}

enum class PrimalityCertainty { composite, prime_deterministic, prime_probable };

namespace detail {

inline constexpr std::uint64_t MR_BASES[13] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// First 12 prime bases are deterministic for every n < 2^64.
inline bool mr_u64(std::uint64_t n) {
    for (std::uint64_t p : MR_BASES)
        if (n % p == 0) return n == p;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int bi = 0; bi < 12; ++bi) {
        std::uint64_t x = powmod_u64(MR_BASES[bi], d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline bool mr_round_big(const BigInt& n, const BigInt& d, int r, const BigInt& base) {
    BigInt x = boost::multiprecision::powm(base % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

// Below this value the first-13-prime base set is a primality proof.
inline const BigInt& mr_deterministic_limit() {
    static const BigInt limit("3317044064679887385961981");
    return limit;
}

inline PrimalityCertainty is_prime_detail(const BigInt& n) {
    if (n < 2) return PrimalityCertainty::composite;
    if (fits_u64(n))
        return detail::mr_u64(to_u64(n)) ? PrimalityCertainty::prime_deterministic
                                         : PrimalityCertainty::composite;
    for (std::uint64_t p : detail::MR_BASES)
        if (n % p == 0) return PrimalityCertainty::composite;
    BigInt d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t b : detail::MR_BASES)
        if (!detail::mr_round_big(n, d, r, BigInt(b))) return PrimalityCertainty::composite;
    if (n < mr_deterministic_limit()) return PrimalityCertainty::prime_deterministic;
    // Declared-probabilistic regime: deterministic per-n base schedule.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned w = 0; w <= boost::multiprecision::msb(n); w += 64)
        h = detail::splitmix64(h ^ static_cast<std::uint64_t>((n >> w) & UINT64_MAX));
    for (int i = 0; i < 64; ++i) {
        h = detail::splitmix64(h);
        const BigInt base = 2 + BigInt(h) % (n - 3);
        if (!detail::mr_round_big(n, d, r, base)) return PrimalityCertainty::composite;
    }
    return PrimalityCertainty::prime_probable;
}

inline bool is_prime(const BigInt& n) {
    return is_prime_detail(n) != PrimalityCertainty::composite;
}

inline bool is_prime_u64(std::uint64_t n) {
    return n >= 2 && detail::mr_u64(n);
}

inline BigInt next_prime(const BigInt& n) {
    BigInt c = n < 2 ? BigInt(2) : n + 1;
    if (c > 2 && (c & 1) == 0) ++c;
    while (!is_prime(c)) c += (c == 2 ? 1 : 2);
    return c;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
    std::uint64_t c = n < 2 ? 2 : n + 1;
    if (c > 2 && (c & 1) == 0) ++c;
    while (!is_prime_u64(c)) c += (c == 2 ? 1 : 2);
    return c;
}

}  // namespace primroot
