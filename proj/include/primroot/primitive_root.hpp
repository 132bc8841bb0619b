// Primitive roots and e-free elements mod an odd prime p.
//
// g is a primitive root mod p iff g^((p-1)/q) != 1 for every prime q | p-1;
// n is e-free iff n^((p-1)/q) != 1 for every prime q | e (so (p-1)-free
// coincides with primitive root).
#pragma once

#include <cstdint>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"
#include "primroot/factorization.hpp"

namespace primroot {

inline bool is_e_free(const BigInt& n, const BigInt& p, const PrimeFactorization& e_factors) {
    if (p < 2) throw argument_error("is_e_free: p must be prime >= 2");
    if (e_factors.value < 1 || (p - 1) % e_factors.value != 0)
        throw argument_error("is_e_free: e must divide p-1");
    if (n % p == 0) throw argument_error("is_e_free: n must be nonzero mod p");
    const BigInt pm1 = p - 1;
    for (const auto& [q, exp] : e_factors.factors)
        if (powmod(n, pm1 / q, p) == 1) return false;
    return true;
}

inline bool is_primitive_root(const BigInt& g, const BigInt& p, const PrimeFactorization& pm1) {
    if (pm1.value != p - 1) throw argument_error("is_primitive_root: factorization must be of p-1");
    return is_e_free(g, p, pm1);
}

// Least primitive root of p; by convention 1 for p = 2.
inline BigInt least_primitive_root(const BigInt& p, const PrimeFactorization& pm1) {
    if (p == 2) return 1;
    if (pm1.value != p - 1)
        throw argument_error("least_primitive_root: factorization must be of p-1");
    if (fits_u64(p)) {
        const std::uint64_t pu = to_u64(p);
        for (std::uint64_t g = 2; g < pu; ++g) {
            bool ok = true;
            for (const auto& [q, exp] : pm1.factors)
                if (powmod_u64(g, to_u64((p - 1) / q), pu) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
    } else {
        for (BigInt g = 2; g < p; ++g)
            if (is_e_free(g, p, pm1)) return g;
    }
    throw domain_error("least_primitive_root: no generator found (p not prime?)");
}

inline BigInt least_primitive_root(const BigInt& p, const FactorOptions& opt = {}) {
    if (p == 2) return 1;
    return least_primitive_root(p, factorize(p - 1, opt));
}

}  // namespace primroot
