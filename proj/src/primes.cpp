#include "murm/primes.hpp"

namespace murm {

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<char> comp(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
        }
    }
    return out;
}

std::vector<uint32_t> least_prime_factor_table(uint32_t limit) {
    std::vector<uint32_t> lpf(limit + 1, 0);
    for (uint32_t i = 2; i <= limit; ++i) {
        if (lpf[i] == 0) {
            for (uint64_t j = i; j <= limit; j += i)
                if (lpf[j] == 0) lpf[j] = i;
        }
    }
    return lpf;
}

std::vector<int8_t> mobius_table(uint32_t limit) {
    auto lpf = least_prime_factor_table(limit);
    std::vector<int8_t> mu(limit + 1, 0);
    if (limit >= 1) mu[1] = 1;
    for (uint32_t n = 2; n <= limit; ++n) {
        uint32_t p = lpf[n];
        uint32_t m = n / p;
        mu[n] = (m % p == 0) ? 0 : -mu[m];
    }
    return mu;
}

std::vector<uint32_t> euler_phi_table(uint32_t limit) {
    auto lpf = least_prime_factor_table(limit);
    std::vector<uint32_t> phi(limit + 1, 0);
    if (limit >= 1) phi[1] = 1;
    for (uint32_t n = 2; n <= limit; ++n) {
        uint32_t p = lpf[n];
        uint32_t m = n / p;
        phi[n] = (m % p == 0) ? phi[m] * p : phi[m] * (p - 1);
    }
    return phi;
}

} // namespace murm
