// No-sieve screening: p^alpha - (2^omega - 1) * c * sqrt(p) * log p > 0,
// with c frozen at c(p0), per-omega crossing points, the Robin-estimate
// global threshold, and the per-omega exception table.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "primroot/bigint.hpp"
#include "primroot/bounds.hpp"
#include "primroot/errors.hpp"
#include "primroot/logreal.hpp"
#include "primroot/primes.hpp"

namespace primroot {

enum class ScreenMode { raw, cutoff_applied };

inline const char* to_string(ScreenMode m) {
    return m == ScreenMode::raw ? "raw" : "cutoff";
}

// log(2^w - 1) for real w > 0, stable for large w.
inline double log_2pow_minus1(double w) {
    if (!(w > 0.0)) throw argument_error("log_2pow_minus1: w must be positive");
    static const double LN2 = std::log(2.0);
    return w * LN2 + std::log1p(-std::exp(-w * LN2));
}

namespace detail {

// Largest root of h(L) = (alpha - 1/2) L - log L - K on [log 3, inf);
// above it the screened inequality holds.  h has its minimum at
// L = 1/(alpha - 1/2); if even that is positive the inequality holds
// everywhere and the log 3 floor is returned.
inline double largest_root_threshold(double alpha, double K) {
    if (!(alpha > 0.5)) throw no_threshold_error("threshold: requires alpha > 0.5");
    const double floor_log3 = std::log(3.0);
    if (std::isinf(K) && K < 0) return floor_log3;  // zero right side
    const double a = alpha - 0.5;
    const auto h = [&](double L) { return a * L - std::log(L) - K; };
    const double L_min = std::max(floor_log3, 1.0 / a);
    if (h(L_min) > 0.0) return floor_log3;
    double lo = L_min, hi = L_min;
    while (h(hi) <= 0.0) {
        lo = hi;
        hi *= 2;
        if (hi > 1e18) throw no_threshold_error("threshold: no crossing found");
    }
    // Root error must stay well below the +-1e-3 probes used to test the
    // predicate flip, even for thresholds at L ~ 1e4.
    while (hi - lo > 1e-9 * std::max(1.0, hi)) {
        const double mid = (lo + hi) / 2;
        (h(mid) > 0.0 ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace detail

// True iff p^alpha - (2^omega - 1) c sqrt(p) log p > 0, with the safety
// margin (the verdict survives worsening the right side by e^+1e-9).
inline bool nosieve_holds(double alpha, double log_p, unsigned omega, double c) {
    if (!(log_p > 1.0)) throw argument_error("nosieve_holds: log_p must exceed 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw argument_error("nosieve_holds: alpha in (0,1)");
    if (!(c > 0.0)) throw argument_error("nosieve_holds: c must be positive");
    if (omega == 0) return true;
    const double rhs = log_2pow_minus1(static_cast<double>(omega)) + std::log(c) +
                       log_p / 2 + std::log(log_p);
    return alpha * log_p > rhs + LOG_MARGIN;
}

namespace detail {

inline double frozen_c(const BoundConfig& cfg) {
    return pv_constant(LogReal::from_bigint(cfg.pv_reference_prime));
}

inline LogReal per_omega_threshold_real(double alpha, double omega, const BoundConfig& cfg) {
    const double K = (omega <= 0.0 ? -std::numeric_limits<double>::infinity()
                                   : log_2pow_minus1(omega) + std::log(frozen_c(cfg)));
    return LogReal::from_log(largest_root_threshold(alpha, K));
}

}  // namespace detail

// Crossing point p_u of p^(alpha - 1/2) = (2^omega - 1) c(p0) log p; the
// inequality holds for all p above it.  c is frozen at the reference
// prime p0, which is conservative since c(p) decreases.
inline LogReal per_omega_threshold(double alpha, unsigned omega, const BoundConfig& cfg) {
    return detail::per_omega_threshold_real(alpha, static_cast<double>(omega), cfg);
}

struct GlobalThreshold {
    LogReal p_star = LogReal::from_log(0.0);
    double robin_omega = 0.0;  // Robin estimate evaluated at p_star
    int iterations = 0;
};

// Self-consistent threshold where omega is replaced by the Robin estimate
// at p itself: alternate threshold / Robin updates from omega = 20 until
// log p moves by < 1e-3, capped at 200 iterations.
inline GlobalThreshold global_robin_threshold(double alpha, const BoundConfig& cfg) {
    if (!(alpha > 0.5)) throw no_threshold_error("global_robin_threshold: requires alpha > 0.5");
    double L = per_omega_threshold(alpha, 20, cfg).log();
    std::ostringstream trace;
    for (int it = 1; it <= 200; ++it) {
        const double w = robin_omega_bound(L, cfg);
        const double L2 = detail::per_omega_threshold_real(alpha, w, cfg).log();
        trace << " L=" << L2 << " omega=" << w << ";";
        if (std::abs(L2 - L) < 1e-3)
            return {LogReal::from_log(L2), robin_omega_bound(L2, cfg), it};
        L = L2;
    }
    throw iteration_error("global_robin_threshold: no fixed point after 200 iterations; trace:" +
                          trace.str());
}

struct ExceptionClass {
    double alpha = 0.0;
    unsigned omega = 0;
    BigInt p_min;             // primorial(omega) + 1, the least value in the class
    LogReal p_threshold = LogReal::from_log(0.0);
    bool is_exception = false;
    ScreenMode mode = ScreenMode::raw;
};

struct OmegaTable {
    double alpha = 0.0;
    ScreenMode mode = ScreenMode::raw;
    LogReal p_star = LogReal::from_log(0.0);
    double robin_omega = 0.0;
    unsigned omega_cap = 0;  // classes above this are cleared by primorial(omega) > p_star
    std::optional<unsigned> omega_lower, omega_upper;
    std::vector<ExceptionClass> classes;
};

// Smallest omega whose primorial exceeds p_star, minus one.
inline unsigned omega_cap_for(const LogReal& p_star) {
    unsigned w = 1;
    while (log_primorial(w) <= p_star.log()) ++w;
    return w - 1;
}

inline std::vector<OmegaTable> omega_exception_table(const std::vector<double>& alphas,
                                                     const BoundConfig& cfg, ScreenMode mode) {
    std::vector<OmegaTable> out;
    for (double alpha : alphas) {
        if (!(alpha > 0.5 && alpha < 1.0))
            throw argument_error("omega_exception_table: alpha must lie in (0.5, 1)");
        OmegaTable t;
        t.alpha = alpha;
        t.mode = mode;
        const GlobalThreshold g = global_robin_threshold(alpha, cfg);
        t.p_star = g.p_star;
        t.robin_omega = g.robin_omega;
        t.omega_cap = omega_cap_for(g.p_star);
        for (unsigned w = 1; w <= t.omega_cap; ++w) {
            ExceptionClass c;
            c.alpha = alpha;
            c.omega = w;
            c.p_min = primorial(w) + 1;
            c.p_threshold = per_omega_threshold(alpha, w, cfg);
            const BigInt floor_val = mode == ScreenMode::cutoff_applied
                                         ? std::max(c.p_min, cfg.verified_cutoff)
                                         : c.p_min;
            c.is_exception = log_bigint(floor_val) < c.p_threshold.log();
            c.mode = mode;
            if (c.is_exception) {
                if (!t.omega_lower) t.omega_lower = w;
                t.omega_upper = w;
            }
            t.classes.push_back(std::move(c));
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace primroot
