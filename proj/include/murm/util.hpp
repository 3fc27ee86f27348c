#ifndef MURM_UTIL_HPP
#define MURM_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace murm {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128_t;
using u128 = __uint128_t;

// Throwing overflow guards for the height/discriminant arithmetic.  All
// enumeration-range inputs fit i128 with room to spare; anything that does
// not is a caller bug, never wraparound.
inline i128 checked_mul(i128 a, i128 b) {
    if (a == 0 || b == 0) return 0;
    i128 r = a * b;
    if (r / b != a) throw std::overflow_error("i128 multiply overflow");
    return r;
}

inline i128 cube(i64 a) {
    i128 aa = (i128)a * a;
    return checked_mul(aa, a);
}

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }

std::string to_string_i128(i128 x);

// a*b mod m for m < 2^63.
inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m, gcd(a,m) must be 1.
u64 invmod(u64 a, u64 m);

// Floor square root for 64-bit and 128-bit arguments.
u64 isqrt(u64 n);
u128 isqrt128(u128 n);

// Legendre symbol (a/p) for odd prime p; returns -1, 0, +1.
int legendre(i64 a, i64 p);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

// Compensated accumulator for long mixed-sign reductions.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace murm

#endif
