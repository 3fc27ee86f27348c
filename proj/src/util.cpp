#include "murm/util.hpp"

#include <algorithm>
#include <cmath>

namespace murm {

std::string to_string_i128(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    u128 v = neg ? (u128)(-x) : (u128)x;
    std::string s;
    while (v) {
        s.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

u64 invmod(u64 a, u64 m) {
    // extended euclid on signed 128-bit, m < 2^63
    i128 r0 = (i128)m, r1 = (i128)(a % m);
    i128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i128 q = r0 / r1;
        i128 r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        i128 t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("invmod: arguments not coprime");
    if (t0 < 0) t0 += m;
    return (u64)t0;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return r;
}

u128 isqrt128(u128 n) {
    if (n == 0) return 0;
    u128 r = (u128)sqrtl((long double)n);
    if (r > 0) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int legendre(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    u64 r = powmod((u64)a, (u64)((p - 1) / 2), (u64)p);
    return r == 1 ? 1 : -1;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sinclair base set: deterministic for n < 2^64
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace murm
