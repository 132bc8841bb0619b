// Sieved screening: with s of the prime divisors of p-1 reserved for
// sieving, the inequality p^(alpha-1/2) / log p > c (2^(n-s) Delta - 1)
// clears a class, where delta = 1 - sum 1/p_i over the sieving primes and
// Delta = (s-1)/delta + 2.
//
// Named assumption: n is read as omega(p-1), the count of distinct prime
// divisors, matching how the sieve is applied class-by-class.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "primroot/bigint.hpp"
#include "primroot/bounds.hpp"
#include "primroot/errors.hpp"
#include "primroot/logreal.hpp"
#include "primroot/primes.hpp"
#include "primroot/pv_screen.hpp"

namespace primroot {

struct SieveContext {
    unsigned n = 0;  // omega(p-1)
    unsigned s = 0;  // number of sieving primes, 1 <= s <= n
    std::vector<std::uint64_t> sieving_primes;  // the s largest divisors
    double delta = 0.0;          // 1 - sum 1/p_i, certified > 0
    double capital_delta = 0.0;  // (s-1)/delta + 2
};

// Sieving primes are the s largest entries; delta is certified positive in
// exact rational arithmetic when all divisors are <= 1e6 (always the case
// for first-omega-primes worst cases), long double otherwise.
inline SieveContext make_sieve_context(std::vector<std::uint64_t> prime_divisors, unsigned s) {
    if (s < 1 || s > prime_divisors.size())
        throw argument_error("make_sieve_context: need 1 <= s <= n");
    std::sort(prime_divisors.begin(), prime_divisors.end());
    SieveContext ctx;
    ctx.n = static_cast<unsigned>(prime_divisors.size());
    ctx.s = s;
    ctx.sieving_primes.assign(prime_divisors.end() - s, prime_divisors.end());
    const bool small = std::all_of(ctx.sieving_primes.begin(), ctx.sieving_primes.end(),
                                   [](std::uint64_t p) { return p <= 1'000'000; });
    if (small) {
        boost::multiprecision::cpp_rational d = 1;
        for (std::uint64_t p : ctx.sieving_primes)
            d -= boost::multiprecision::cpp_rational(1, p);
        if (d <= 0) throw infeasible_sieve_error("make_sieve_context: delta <= 0");
        ctx.delta = d.convert_to<double>();
    } else {
        long double d = 1.0L;
        for (std::uint64_t p : ctx.sieving_primes) d -= 1.0L / static_cast<long double>(p);
        if (d <= 0) throw infeasible_sieve_error("make_sieve_context: delta <= 0");
        ctx.delta = static_cast<double>(d);
    }
    ctx.capital_delta = static_cast<double>(ctx.s - 1) / ctx.delta + 2.0;
    return ctx;
}

// log of c (2^(n-s) Delta - 1), safe for any n.
inline double sieve_rhs_log(const SieveContext& ctx, double c) {
    if (!(c > 0.0)) throw argument_error("sieve_rhs_log: c must be positive");
    static const double LN2 = std::log(2.0);
    const double log_main =
        static_cast<double>(ctx.n - ctx.s) * LN2 + std::log(ctx.capital_delta);
    return std::log(c) + log_main + std::log1p(-std::exp(-log_main));
}

inline double sieve_rhs(const SieveContext& ctx, double c) { return std::exp(sieve_rhs_log(ctx, c)); }

// Enumerates s = 1 .. n-1 (so the divisor 2 is never sieved; the excluded
// part stays even) and keeps the feasible context minimizing the right
// side; ties go to smaller s.
inline SieveContext optimal_sieve_context(const std::vector<std::uint64_t>& prime_divisors,
                                          double c) {
    if (prime_divisors.empty() ||
        std::find(prime_divisors.begin(), prime_divisors.end(), 2) == prime_divisors.end())
        throw argument_error("optimal_sieve_context: divisor list must contain 2");
    std::optional<SieveContext> best;
    double best_log = 0.0;
    for (unsigned s = 1; s + 1 <= prime_divisors.size(); ++s) {
        SieveContext ctx;
        try {
            ctx = make_sieve_context(prime_divisors, s);
        } catch (const infeasible_sieve_error&) {
            continue;
        }
        const double v = sieve_rhs_log(ctx, c);
        if (!best || v < best_log) {
            best = std::move(ctx);
            best_log = v;
        }
    }
    if (!best) throw infeasible_sieve_error("optimal_sieve_context: no feasible s");
    return *best;
}

inline bool sieve_holds(double alpha, double log_p, const SieveContext& ctx, double c) {
    if (!(alpha > 0.5)) throw argument_error("sieve_holds: requires alpha > 0.5");
    if (!(log_p > 1.0)) throw argument_error("sieve_holds: log_p must exceed 1");
    return (alpha - 0.5) * log_p - std::log(log_p) > sieve_rhs_log(ctx, c) + LOG_MARGIN;
}

// Worst case for the class omega(p-1) = omega: divisors = first omega
// primes.  Any other divisor set of that size has larger primes, hence
// larger delta and a smaller threshold.
inline LogReal sieve_threshold(double alpha, unsigned omega, const BoundConfig& cfg) {
    if (omega < 1) throw argument_error("sieve_threshold: omega must be >= 1");
    const SieveContext ctx = optimal_sieve_context(first_n_primes(omega), detail::frozen_c(cfg));
    return LogReal::from_log(
        detail::largest_root_threshold(alpha, sieve_rhs_log(ctx, detail::frozen_c(cfg))));
}

struct SieveClass {
    double alpha = 0.0;
    unsigned omega = 0;
    BigInt p_min;  // primorial(omega) + 1
    LogReal p_threshold = LogReal::from_log(0.0);
    bool is_exception = false;
    // Interval of possibly-exceptional p when surviving: [interval_lo, p_threshold).
    BigInt interval_lo;
    unsigned chosen_s = 0;  // 0 marks the omega = 1 no-sieve fallback
    double delta = 0.0;
    double capital_delta = 0.0;
};

struct SieveTable {
    double alpha = 0.0;
    LogReal p_star = LogReal::from_log(0.0);
    double robin_omega = 0.0;
    unsigned omega_cap = 0;
    std::optional<unsigned> omega_lower, omega_upper;
    std::optional<LogReal> max_exception_threshold;  // largest p_u among survivors
    std::vector<SieveClass> classes;
};

// Per-class sieve verdicts for omega = 1 .. cap(alpha): a class survives
// as a possible exception iff max(primorial(omega)+1, cutoff) < p_u.
inline std::vector<SieveTable> sieve_exception_table(const std::vector<double>& alphas,
                                                     const BoundConfig& cfg) {
    std::vector<SieveTable> out;
    const double c = detail::frozen_c(cfg);
    for (double alpha : alphas) {
        if (!(alpha > 0.5 && alpha < 1.0))
            throw argument_error("sieve_exception_table: alpha must lie in (0.5, 1)");
        SieveTable t;
        t.alpha = alpha;
        const GlobalThreshold g = global_robin_threshold(alpha, cfg);
        t.p_star = g.p_star;
        t.robin_omega = g.robin_omega;
        t.omega_cap = omega_cap_for(g.p_star);
        for (unsigned w = 1; w <= t.omega_cap; ++w) {
            SieveClass sc;
            sc.alpha = alpha;
            sc.omega = w;
            sc.p_min = primorial(w) + 1;
            if (w == 1) {
                // No feasible sieve over a single divisor; the no-sieve
                // factor c (2^1 - 1) = c is the honest fallback.
                sc.p_threshold = per_omega_threshold(alpha, 1, cfg);
            } else {
                const SieveContext ctx = optimal_sieve_context(first_n_primes(w), c);
                sc.chosen_s = ctx.s;
                sc.delta = ctx.delta;
                sc.capital_delta = ctx.capital_delta;
                sc.p_threshold =
                    LogReal::from_log(detail::largest_root_threshold(alpha, sieve_rhs_log(ctx, c)));
            }
            sc.interval_lo = std::max(sc.p_min, cfg.verified_cutoff);
            sc.is_exception = log_bigint(sc.interval_lo) < sc.p_threshold.log();
            if (sc.is_exception) {
                if (!t.omega_lower) t.omega_lower = w;
                t.omega_upper = w;
                if (!t.max_exception_threshold ||
                    t.max_exception_threshold->log() < sc.p_threshold.log())
                    t.max_exception_threshold = sc.p_threshold;
            }
            t.classes.push_back(std::move(sc));
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace primroot
