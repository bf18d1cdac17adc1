#pragma once

#include <cstdint>
#include <vector>

#include "np/rational.hpp"

namespace np {

/// GMP's Baillie-PSW test followed by further Miller-Rabin rounds; no
/// composite is known to pass.
bool is_prime(const Integer& n);

/// Primes p with lo <= p < hi, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

Integer euler_phi(const Integer& n);

/// Multiplicative order of m modulo n (n >= 1, gcd(m, n) == 1).
std::uint64_t multiplicative_order(const Integer& m, const Integer& n);

}  // namespace np
