#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "primroot/character_table.hpp"
#include "primroot/oracles.hpp"
#include "primroot/primes.hpp"

using namespace primroot;

TEST_CASE("table structure for p = 7") {
    const CharacterTable t = build_character_table(7);
    REQUIRE(t.p == 7);
    REQUIRE(t.g == 3);  // least primitive root of 7
    REQUIRE(t.dlog_of(1) == 0);
    REQUIRE(t.dlog_of(3) == 1);
    REQUIRE(t.dlog_of(2) == 2);  // 3^2 = 2 mod 7
    // Squarefree divisors of 6 only.
    REQUIRE(t.classes.size() == 4);
    REQUIRE(t.classes[0].d == 1);
    REQUIRE(t.classes[1].d == 2);
    REQUIRE(t.classes[1].mu == -1);
    REQUIRE(t.classes[2].d == 3);
    REQUIRE(t.classes[3].d == 6);
    REQUIRE(t.classes[3].mu == 1);
    REQUIRE(t.classes[3].phi == 2);
    REQUIRE(t.classes[3].coprime_j == std::vector<std::uint64_t>{1, 5});
}

TEST_CASE("indicator equals the multiplicative-order predicate") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL, 101ULL, 151ULL}) {
        const CharacterTable t = build_character_table(p);
        for (std::uint64_t x = 1; x < p; ++x) {
            const double ind = primitive_root_indicator(x, t);
            const double truth = oracle::is_primitive_root(x, p) ? 1.0 : 0.0;
            REQUIRE(std::abs(ind - truth) < 1e-9);
        }
    }
}

TEST_CASE("indicator sums to the primitive-root count") {
    const CharacterTable t = build_character_table(101);
    double s = 0.0;
    for (std::uint64_t x = 1; x < 101; ++x) s += primitive_root_indicator(x, t);
    REQUIRE(std::abs(s - 40.0) < 1e-8);  // phi(100) = 40
}

TEST_CASE("e-free indicator for every even divisor of p-1") {
    const std::uint64_t p = 13;
    const CharacterTable t = build_character_table(p);
    const oracle::EFreeOracle ef(p);
    for (std::uint64_t e : {2ULL, 4ULL, 6ULL, 12ULL}) {
        for (std::uint64_t x = 1; x < p; ++x) {
            const double ind = efree_indicator(x, e, t);
            const double truth = ef.is_e_free(x, e) ? 1.0 : 0.0;
            REQUIRE(std::abs(ind - truth) < 1e-9);
        }
    }
}

TEST_CASE("squares mod 7 are exactly the 2-free complement") {
    const CharacterTable t = build_character_table(7);
    // Quadratic residues mod 7: {1, 2, 4}.
    for (std::uint64_t x : {1ULL, 2ULL, 4ULL}) REQUIRE(std::abs(efree_indicator(x, 2, t)) < 1e-9);
    for (std::uint64_t x : {3ULL, 5ULL, 6ULL})
        REQUIRE(std::abs(efree_indicator(x, 2, t) - 1.0) < 1e-9);
}

TEST_CASE("validation") {
    REQUIRE_THROWS_AS(build_character_table(4), argument_error);
    REQUIRE_THROWS_AS(build_character_table(2), argument_error);
    REQUIRE_THROWS_AS(build_character_table(10'007), capacity_error);
    const CharacterTable t = build_character_table(7);
    REQUIRE_THROWS_AS(t.dlog_of(0), argument_error);
    REQUIRE_THROWS_AS(t.dlog_of(7), argument_error);
    REQUIRE_THROWS_AS(efree_indicator(1, 4, t), argument_error);  // 4 does not divide 6
}
