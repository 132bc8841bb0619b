#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "primroot/oracles.hpp"
#include "primroot/primes.hpp"

using namespace primroot;

TEST_CASE("primes_up_to enumerates exactly") {
    REQUIRE(primes_up_to(1).empty());
    REQUIRE(primes_up_to(2) == std::vector<std::uint64_t>{2});
    const auto ps = primes_up_to(100);
    REQUIRE(ps.size() == 25);
    REQUIRE(ps.front() == 2);
    REQUIRE(ps.back() == 97);
    REQUIRE(primes_up_to(1'000'000).size() == 78498);
    REQUIRE(primes_up_to(1'000'000) == oracle::segmented_primes(0, 1'000'000));
    REQUIRE_THROWS_AS(primes_up_to(PRIME_ENUMERATION_CEILING + 1), capacity_error);
}

TEST_CASE("first_n_primes and nth_prime") {
    REQUIRE(first_n_primes(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                                             31, 37, 41});
    REQUIRE(nth_prime(1) == 2);
    REQUIRE(nth_prime(25) == 97);
    REQUIRE(nth_prime(1000) == 7919);
    REQUIRE_THROWS_AS(nth_prime(0), argument_error);
}

TEST_CASE("primorial values and logs") {
    REQUIRE(primorial(1) == 2);
    REQUIRE(primorial(5) == 2310);
    // 23# agrees with the independent repeated-multiplication oracle.
    REQUIRE(primorial(23) == BigInt("267064515689275851355624017992790"));
    REQUIRE(primorial(23) == oracle::primorial<BigInt>(23));
    REQUIRE(std::abs(log_primorial(23) - 74.6650430508) < 1e-8);
    REQUIRE(std::abs(log_primorial(23) - log_bigint(primorial(23))) < 1e-10);
    REQUIRE_THROWS_AS(primorial(0), argument_error);
    REQUIRE_THROWS_AS(primorial(100'001), capacity_error);
}

TEST_CASE("is_prime agrees with trial division up to 20000") {
    for (std::uint64_t n = 0; n < 20'000; ++n)
        REQUIRE(is_prime_u64(n) == oracle::is_prime_trial(n));
}

TEST_CASE("is_prime rejects strong-pseudoprime traps") {
    REQUIRE_FALSE(is_prime_u64(561));         // Carmichael
    REQUIRE_FALSE(is_prime_u64(3215031751));  // strong pseudoprime to bases 2,3,5,7
    REQUIRE(is_prime_u64(2'500'000'000'000'043ULL));
    REQUIRE_FALSE(is_prime(BigInt("2500000000000041")));
}

TEST_CASE("is_prime on big integers, with certainty classification") {
    const BigInt m89 = (BigInt(1) << 89) - 1;  // Mersenne prime 2^89 - 1
    REQUIRE(to_decimal(m89) == "618970019642690137449562111");
    REQUIRE(is_prime(m89));
    REQUIRE(is_prime_detail(m89) == PrimalityCertainty::prime_probable);  // above MR limit
    REQUIRE(is_prime_detail(BigInt(2311)) == PrimalityCertainty::prime_deterministic);
    REQUIRE(is_prime_detail(BigInt("618970019642690137449562113")) ==
            PrimalityCertainty::composite);
}

TEST_CASE("next_prime walks upward") {
    REQUIRE(next_prime_u64(2) == 3);
    REQUIRE(next_prime_u64(13) == 17);
    REQUIRE(next_prime(BigInt("2500000000000000")) == BigInt("2500000000000043"));
}
