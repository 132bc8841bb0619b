// Explicit character-sum bound evaluation in the log domain.
//
// Two majorants for the least-primitive-root machinery:
//   PV:      c(p) * sqrt(p) * log p
//   Burgess: C(r) * H^(1-1/r) * p^((r+1)/(4r^2)) * (log p)^(1/(2r))
// Everything is carried as LogReal so p near 10^1300 stays representable.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "primroot/bound_config.hpp"
#include "primroot/errors.hpp"
#include "primroot/logreal.hpp"

namespace primroot {

inline constexpr double LOG_MARGIN = 1e-9;  // safety margin for "holds" verdicts, log domain

// c(p) = 1/(2pi) + (1/(pi log p)) * (0.4325 + (10.15 + sqrt p)/(1 + sqrt p) + 1/sqrt p).
// Strictly decreasing in p with limit 1/(2pi).
inline double pv_constant(const LogReal& p) {
    static const double PI = std::acos(-1.0);
    const double L = p.log();
    if (L < std::log(3.0) - 1e-12) throw domain_error("pv_constant: p must be >= 3");
    double middle, inv_sqrt;
    if (L / 2 > 700.0) {  // sqrt(p) overflows double; use the exact limits
        middle = 1.0;
        inv_sqrt = 0.0;
    } else {
        const double s = std::exp(L / 2);
        middle = (10.15 + s) / (1.0 + s);
        inv_sqrt = 1.0 / s;
    }
    return 1.0 / (2 * PI) + (0.4325 + middle + inv_sqrt) / (PI * L);
}

inline LogReal pv_bound(const LogReal& p, double c) {
    const double L = p.log();
    if (L < std::log(3.0) - 1e-12) throw domain_error("pv_bound: p must be >= 3");
    if (!(c > 0.0)) throw argument_error("pv_bound: c must be positive");
    return LogReal::from_log(std::log(c) + L / 2 + std::log(L));
}

inline LogReal burgess_bound(const LogReal& H, const LogReal& p, int r, const BoundConfig& cfg) {
    if (r < 2) throw argument_error("burgess_bound: r must be >= 2");
    const auto it = cfg.burgess_constants.find(r);
    if (it == cfg.burgess_constants.end())
        throw config_error("burgess_bound: C(" + std::to_string(r) + ") not configured");
    if (H.log() > p.log()) throw argument_error("burgess_bound: H must not exceed p");
    const double L = p.log();
    if (L <= 0.0) throw domain_error("burgess_bound: p must exceed 1");
    const double rr = static_cast<double>(r);
    return LogReal::from_log(std::log(it->second.value) + (1.0 - 1.0 / rr) * H.log() +
                             (rr + 1.0) / (4.0 * rr * rr) * L + std::log(L) / (2.0 * rr));
}

inline int best_burgess_r(double alpha, const LogReal& p, const BoundConfig& cfg) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw argument_error("best_burgess_r: alpha in (0,1)");
    if (cfg.burgess_constants.empty()) throw config_error("best_burgess_r: empty C(r) table");
    const LogReal H = p.pow(alpha);
    int best = 0;
    double best_log = 0.0;
    for (const auto& [r, c] : cfg.burgess_constants) {
        const double v = burgess_bound(H, p, r, cfg).log();
        if (best == 0 || v < best_log) {  // map iterates ascending r: ties keep smaller r
            best = r;
            best_log = v;
        }
    }
    return best;
}

// Smallest log p >= log 3 above which Burgess (r=2, H=p^alpha) <= PV with
// the varying constant c(p).  Absent when no such point exists — in
// particular for alpha > 5/8, where the p-exponent gap favors PV forever.
inline std::optional<LogReal> crossover_p(double alpha, const BoundConfig& cfg) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw argument_error("crossover_p: alpha in (0,1)");
    if (alpha > 0.625) return std::nullopt;
    const auto diff = [&](double L) {  // log PV - log Burgess; crossover where >= 0
        const LogReal p = LogReal::from_log(L);
        return pv_bound(p, pv_constant(p)).log() - burgess_bound(p.pow(alpha), p, 2, cfg).log();
    };
    const double L0 = std::log(3.0);
    if (diff(L0) >= 0.0) return LogReal::from_log(L0);
    double lo = L0, hi = L0;
    bool bracketed = false;
    for (double step = 1.0; hi < 1e7; step *= 2) {
        lo = hi;
        hi += step;
        if (diff(hi) >= 0.0) {
            bracketed = true;
            break;
        }
    }
    if (!bracketed) return std::nullopt;
    // Same tolerance rationale as the threshold solver: the crossover must
    // flip the comparison across +-1e-3 in log p.
    while (hi - lo > 1e-9 * std::max(1.0, hi)) {
        const double mid = (lo + hi) / 2;
        (diff(mid) >= 0.0 ? hi : lo) = mid;
    }
    return LogReal::from_log(hi);
}

// (log n / log log n) * (1 + 1/log log n + R/(log log n)^2), an upper
// estimate for omega(n); R is the configured Robin constant.
inline double robin_omega_bound(double log_n, const BoundConfig& cfg) {
    if (!(log_n > 0.0) || std::log(log_n) <= 1.0)
        throw domain_error("robin_omega_bound: requires log log n > 1");
    const double LL = std::log(log_n);
    return log_n / LL * (1.0 + 1.0 / LL + cfg.robin_constant / (LL * LL));
}

}  // namespace primroot
