#include "murm/weierstrass.hpp"

#include <stdexcept>

namespace murm {

WInvariants invariants(const WModel& m) {
    WInvariants v;
    v.b2 = m.a1 * m.a1 + 4 * m.a2;
    v.b4 = 2 * m.a4 + m.a1 * m.a3;
    v.b6 = m.a3 * m.a3 + 4 * m.a6;
    v.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 -
           m.a4 * m.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
             9 * v.b2 * v.b4 * v.b6;
    return v;
}

WModel transform(const WModel& m, const BigInt& r, const BigInt& s, const BigInt& t,
                 const BigInt& u) {
    BigInt u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    WModel n;
    BigInt a1n = m.a1 + 2 * s;
    BigInt a2n = m.a2 - s * m.a1 + 3 * r - s * s;
    BigInt a3n = m.a3 + r * m.a1 + 2 * t;
    BigInt a4n = m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t;
    BigInt a6n = m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1;
    auto divx = [](const BigInt& x, const BigInt& d) {
        if (x % d != 0) throw std::logic_error("non-integral Weierstrass transform");
        return BigInt(x / d);
    };
    n.a1 = divx(a1n, u);
    n.a2 = divx(a2n, u2);
    n.a3 = divx(a3n, u3);
    n.a4 = divx(a4n, u4);
    n.a6 = divx(a6n, u6);
    return n;
}

u64 count_points_small(const WModel& m, u64 p) {
    auto red = [&](const BigInt& x) -> u64 {
        BigInt r = x % (long long)p;
        if (r < 0) r += (long long)p;
        return r.convert_to<u64>();
    };
    u64 a1 = red(m.a1), a2 = red(m.a2), a3 = red(m.a3), a4 = red(m.a4), a6 = red(m.a6);
    u64 count = 1; // point at infinity
    for (u64 x = 0; x < p; ++x) {
        u64 rhs = (mulmod(mulmod(x, x, p), x, p) + mulmod(a2, mulmod(x, x, p), p) +
                   mulmod(a4, x, p) + a6) % p;
        for (u64 y = 0; y < p; ++y) {
            u64 lhs = (mulmod(y, y, p) + mulmod(a1, mulmod(x, y, p), p) + mulmod(a3, y, p)) % p;
            if (lhs == rhs) ++count;
        }
    }
    return count;
}

int valuation(const BigInt& x, u64 p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    BigInt v = x < 0 ? BigInt(-x) : x;
    int k = 0;
    while (v % (long long)p == 0) {
        v /= (long long)p;
        ++k;
    }
    return k;
}

BigInt divexact_pow(const BigInt& x, u64 p, int k) {
    BigInt r = x;
    for (int i = 0; i < k; ++i) {
        if (r % (long long)p != 0) throw std::logic_error("divexact_pow: not divisible");
        r /= (long long)p;
    }
    return r;
}

} // namespace murm
