// Umbrella header.
#pragma once

#include "primroot/bigint.hpp"
#include "primroot/bound_config.hpp"
#include "primroot/bounds.hpp"
#include "primroot/character_table.hpp"
#include "primroot/cli.hpp"
#include "primroot/config_io.hpp"
#include "primroot/divisor_tree.hpp"
#include "primroot/errors.hpp"
#include "primroot/factorization.hpp"
#include "primroot/logreal.hpp"
#include "primroot/oracles.hpp"
#include "primroot/power_bounds.hpp"
#include "primroot/primes.hpp"
#include "primroot/primitive_root.hpp"
#include "primroot/pv_screen.hpp"
#include "primroot/report.hpp"
#include "primroot/sieve.hpp"
#include "primroot/verify.hpp"
