// Exception hierarchy. Every library error derives from primroot::error so
// boundary code (CLI, tests) can map failures onto the exit-code contract.
#pragma once

#include <stdexcept>
#include <string>

namespace primroot {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented enumeration/representation ceiling.
struct capacity_error : error {
    using error::error;
};

// A precondition on arguments was violated.
struct argument_error : error {
    using error::error;
};

// Input outside the mathematical domain of the operation.
struct domain_error : error {
    using error::error;
};

// Configuration file or BoundConfig contents invalid.
struct config_error : error {
    using error::error;
};

// A composite cofactor survived every factoring stage; never silently wrong.
struct factor_error : error {
    using error::error;
};

// No sieving-prime choice yields delta > 0.
struct infeasible_sieve_error : error {
    using error::error;
};

// The screening inequality has no finite crossing for these parameters.
struct no_threshold_error : error {
    using error::error;
};

// A fixed-point iteration failed to converge within its cap.
struct iteration_error : error {
    using error::error;
};

}  // namespace primroot
