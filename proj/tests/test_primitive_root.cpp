#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "primroot/factorization.hpp"
#include "primroot/oracles.hpp"
#include "primroot/primes.hpp"
#include "primroot/primitive_root.hpp"

using namespace primroot;

TEST_CASE("least primitive root, known values") {
    REQUIRE(least_primitive_root(BigInt(2)) == 1);
    REQUIRE(least_primitive_root(BigInt(3)) == 2);
    REQUIRE(least_primitive_root(BigInt(5)) == 2);
    REQUIRE(least_primitive_root(BigInt(7)) == 3);
    REQUIRE(least_primitive_root(BigInt(11)) == 2);
    REQUIRE(least_primitive_root(BigInt(191)) == 19);
    REQUIRE(least_primitive_root(BigInt(409)) == 21);
    REQUIRE(least_primitive_root(BigInt(2311)) == 3);
}

TEST_CASE("least primitive root matches the order oracle below 2000") {
    for (std::uint64_t p : primes_up_to(2000))
        REQUIRE(least_primitive_root(BigInt(p)) == oracle::least_primitive_root(p));
}

TEST_CASE("e-free agrees with the power-residue oracle") {
    for (std::uint64_t p : {13ULL, 61ULL, 101ULL}) {
        const oracle::EFreeOracle ef(p);
        for (std::uint64_t e = 2; e <= p - 1; ++e) {
            if ((p - 1) % e != 0) continue;
            const auto ef_factors = factorize(BigInt(e));
            for (std::uint64_t x = 1; x < p; ++x)
                REQUIRE(is_e_free(BigInt(x), BigInt(p), ef_factors) == ef.is_e_free(x, e));
        }
    }
}

TEST_CASE("(p-1)-free coincides with primitive root") {
    const std::uint64_t p = 61;
    const auto pm1 = factorize(BigInt(p - 1));
    for (std::uint64_t x = 1; x < p; ++x)
        REQUIRE(is_primitive_root(BigInt(x), BigInt(p), pm1) == oracle::is_primitive_root(x, p));
}

TEST_CASE("argument validation") {
    const auto f6 = factorize(BigInt(6));
    REQUIRE_THROWS_AS(is_e_free(BigInt(2), BigInt(11), f6), argument_error);   // 6 does not divide 10
    REQUIRE_THROWS_AS(is_e_free(BigInt(13), BigInt(13), factorize(BigInt(12))), argument_error);
    REQUIRE_THROWS_AS(is_primitive_root(BigInt(2), BigInt(11), f6), argument_error);
    REQUIRE_THROWS_AS(least_primitive_root(BigInt(11), factorize(BigInt(6))), argument_error);
}

TEST_CASE("works above 64 bits") {
    const BigInt p = (BigInt(1) << 89) - 1;  // 2^89 - 1, p-1 = 2 * 3^2 * 5 * 17 * 23 * 89 * ...
    const BigInt g = least_primitive_root(p, FactorOptions{});
    REQUIRE(g >= 2);
    REQUIRE(is_primitive_root(g, p, factorize(p - 1)));
}
