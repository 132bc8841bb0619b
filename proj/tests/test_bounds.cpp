#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "primroot/bound_config.hpp"
#include "primroot/bounds.hpp"

using namespace primroot;

namespace {
const BoundConfig CFG = default_bound_config();
const double LN10 = std::log(10.0);
}  // namespace

TEST_CASE("pv constant: frozen reference values") {
    REQUIRE(std::abs(pv_constant(LogReal::from_value(2.5e15)) - 0.172015699354) < 1e-10);
    REQUIRE(std::abs(pv_constant(LogReal::from_value(1e15)) - 0.172356887738) < 1e-10);
    REQUIRE(std::abs(pv_constant(LogReal::from_value(1e16)) - 0.171531764302) < 1e-10);
}

TEST_CASE("pv constant decreases to 1/(2 pi)") {
    const double limit = 1.0 / (2.0 * std::acos(-1.0));
    double prev = pv_constant(LogReal::from_value(3.0));
    for (double l10 = 1; l10 <= 300; l10 += 1) {
        const double c = pv_constant(LogReal::from_log(l10 * LN10));
        REQUIRE(c < prev);
        REQUIRE(c > limit);
        prev = c;
    }
    // Deep overflow regime: sqrt(p) no longer fits a double.
    const double far = pv_constant(LogReal::from_log(2000.0));
    REQUIRE(std::abs(far - (limit + (0.4325 + 1.0) / (std::acos(-1.0) * 2000.0))) < 1e-15);
    REQUIRE_THROWS_AS(pv_constant(LogReal::from_value(2.0)), domain_error);
}

TEST_CASE("pv bound at the reference prime") {
    const LogReal p0 = LogReal::from_value(2.5e15);
    REQUIRE(std::abs(pv_bound(p0, pv_constant(p0)).log() - 19.535630212422) < 1e-8);
    REQUIRE_THROWS_AS(pv_bound(p0, 0.0), argument_error);
}

TEST_CASE("burgess bound formula") {
    // C(2) = 6, p = e^40, H = p^0.7:
    // log = ln 6 + (1/2)(0.7 * 40) + (3/16) * 40 + ln(40)/4.
    const LogReal p = LogReal::from_log(40.0);
    const double expected = std::log(6.0) + 14.0 + 7.5 + std::log(40.0) / 4.0;
    REQUIRE(std::abs(burgess_bound(p.pow(0.7), p, 2, CFG).log() - expected) < 1e-12);
    REQUIRE_THROWS_AS(burgess_bound(p.pow(1.1), p, 2, CFG), argument_error);  // H > p
    REQUIRE_THROWS_AS(burgess_bound(p, p, 1, CFG), argument_error);
    REQUIRE_THROWS_AS(burgess_bound(p, p, 9, CFG), config_error);  // C(9) not configured
}

TEST_CASE("best burgess r prefers r=2 from 1.5e6 upward at alpha 0.7") {
    REQUIRE(best_burgess_r(0.7, LogReal::from_value(1.5e6), CFG) == 2);
    REQUIRE(best_burgess_r(0.7, LogReal::from_log(30 * LN10), CFG) == 2);
    // Below the documented r=2/r=3 switch near 2.3e5, r=2 is no longer best.
    REQUIRE(best_burgess_r(0.7, LogReal::from_value(1e5), CFG) != 2);
}

TEST_CASE("crossover against pv: present iff alpha <= 5/8") {
    const auto c06 = crossover_p(0.6, CFG);
    REQUIRE(c06.has_value());
    REQUIRE(std::abs(c06->log10() - 21.9603842039) < 1e-3);
    const auto c062 = crossover_p(0.62, CFG);
    REQUIRE(c062.has_value());
    REQUIRE(std::abs(c062->log10() - 39.022055378) < 1e-3);
    REQUIRE_FALSE(crossover_p(0.63, CFG).has_value());
    REQUIRE_FALSE(crossover_p(0.7, CFG).has_value());
}

TEST_CASE("crossover location is driven by C(2)") {
    BoundConfig low = CFG, high = CFG;
    low.burgess_constants[2].value = 5.0;
    high.burgess_constants[2].value = 7.0;
    REQUIRE(std::abs(crossover_p(0.6, low)->log10() - 19.0487) < 1e-2);
    REQUIRE(std::abs(crossover_p(0.6, high)->log10() - 24.5794) < 1e-2);
}

TEST_CASE("crossover flips the comparison across +-1e-3 in log p") {
    for (double alpha : {0.55, 0.6, 0.62}) {
        const double L = crossover_p(alpha, CFG)->log();
        const auto diff = [&](double l) {
            const LogReal p = LogReal::from_log(l);
            return pv_bound(p, pv_constant(p)).log() -
                   burgess_bound(p.pow(alpha), p, 2, CFG).log();
        };
        REQUIRE(diff(L + 1e-3) > 0.0);
        REQUIRE(diff(L - 1e-3) < 0.0);
    }
}

TEST_CASE("robin omega estimate") {
    // Closed form at log n = e^2 (so log log n = 2).
    const double e2 = std::exp(2.0);
    REQUIRE(std::abs(robin_omega_bound(e2, CFG) - 8.2178311036) < 1e-9);
    // 510510 = 17# has omega = 7; the estimate stays above it.
    REQUIRE(std::abs(robin_omega_bound(std::log(510510.0), CFG) - (7.0 + 2.311108)) < 1e-5);
    REQUIRE_THROWS_AS(robin_omega_bound(std::exp(1.0), CFG), domain_error);
    REQUIRE_THROWS_AS(robin_omega_bound(0.5, CFG), domain_error);
}
