#ifndef MURM_PRIMES_HPP
#define MURM_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "murm/util.hpp"

namespace murm {

// Primes up to and including limit.
std::vector<u64> primes_up_to(u64 limit);

// lpf[n] = least prime factor of n for 0 <= n <= limit (lpf[0]=lpf[1]=0).
std::vector<uint32_t> least_prime_factor_table(uint32_t limit);

// Moebius function over [0, limit].
std::vector<int8_t> mobius_table(uint32_t limit);

// Euler phi over [0, limit].
std::vector<uint32_t> euler_phi_table(uint32_t limit);

} // namespace murm

#endif
