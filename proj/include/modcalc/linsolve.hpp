#pragma once

// Dense linear solving over Z/p^k. Z/p^k is a local ring, so plain row
// reduction with unit pivots is not enough; this brings the system to
// diagonal (Smith) form with global min-valuation pivoting, which decides
// solvability exactly.

#include "modcalc/int_util.hpp"

#include <optional>
#include <vector>

namespace modcalc {

// Solve A x = b (mod p^k). A is rows x cols, row-major. Returns any
// solution, or nullopt when the system is inconsistent mod p^k.
std::optional<std::vector<Int>> solve_mod_prime_power(std::vector<std::vector<Int>> A,
                                                      std::vector<Int> b,
                                                      const Int& p, unsigned k);

}  // namespace modcalc
