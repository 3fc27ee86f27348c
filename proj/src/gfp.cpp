#include "murm/gfp.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace murm {

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

i64 trace_naive(u64 p, u64 A, u64 B) {
    // chi table: chi[u] = +1 if u is a nonzero square, -1 nonresidue, 0 at 0
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (u64 x = 1; x <= (p - 1) / 2; ++x) chi[mulmod(x, x, p)] = 1;
    i64 s = 0;
    // evaluate f(x) = x^3 + A x + B incrementally
    for (u64 x = 0; x < p; ++x) {
        u64 fx = addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(A, x, p), B, p), p);
        s += chi[fx];
    }
    return -s;
}

namespace {

struct AffinePt {
    u64 x = 0, y = 0;
    bool inf = true;
};

struct CurveFp {
    u64 p, A;

    AffinePt add(const AffinePt& P, const AffinePt& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        u64 lam;
        if (P.x == Q.x) {
            if (addmod(P.y, Q.y, p) == 0) return {};
            // tangent
            u64 num = addmod(mulmod(3, mulmod(P.x, P.x, p), p), A, p);
            lam = mulmod(num, invmod(addmod(P.y, P.y, p), p), p);
        } else {
            u64 num = submod(Q.y, P.y, p);
            lam = mulmod(num, invmod(submod(Q.x, P.x, p), p), p);
        }
        u64 x3 = submod(submod(mulmod(lam, lam, p), P.x, p), Q.x, p);
        u64 y3 = submod(mulmod(lam, submod(P.x, x3, p), p), P.y, p);
        return {x3, y3, false};
    }

    AffinePt neg(const AffinePt& P) const {
        if (P.inf) return P;
        return {P.x, P.y ? p - P.y : 0, false};
    }

    AffinePt mul(AffinePt P, u64 k) const {
        AffinePt R;
        while (k) {
            if (k & 1) R = add(R, P);
            P = add(P, P);
            k >>= 1;
        }
        return R;
    }
};

// Exact order of P given a multiple m of it (m <= ~2^22, trial factoring).
u64 point_order_from_multiple(const CurveFp& E, const AffinePt& P, u64 m) {
    u64 ord = m;
    u64 rem = m;
    for (u64 q = 2; q * q <= rem; ++q) {
        while (rem % q == 0) {
            rem /= q;
            while (ord % q == 0 && E.mul(P, ord / q).inf) ord /= q;
        }
    }
    if (rem > 1) {
        u64 q = rem;
        while (ord % q == 0 && E.mul(P, ord / q).inf) ord /= q;
    }
    return ord;
}

// All m in [lo, hi] with m*P = O, by shifted BSGS.
std::vector<u64> kill_multiples_in_interval(const CurveFp& E, const AffinePt& P, u64 lo, u64 hi) {
    std::vector<u64> hits;
    if (P.inf) {
        for (u64 m = lo; m <= hi; ++m) hits.push_back(m);
        return hits;
    }
    u64 w = hi - lo + 1;
    u64 S = isqrt(w) + 1;
    // baby steps: j*P for 0 <= j < S, stored by x-coordinate
    std::vector<AffinePt> baby(S);
    baby[0] = AffinePt{};
    for (u64 j = 1; j < S; ++j) baby[j] = E.add(baby[j - 1], P);
    std::vector<std::pair<u64, u64>> byx; // (x, j) for finite baby points
    byx.reserve(S);
    for (u64 j = 0; j < S; ++j)
        if (!baby[j].inf) byx.push_back({baby[j].x, j});
    std::sort(byx.begin(), byx.end());

    AffinePt G = E.mul(P, S);
    AffinePt R = E.mul(P, lo);
    for (u64 i = 0; lo + i * S <= hi; ++i) {
        // looking for j with R + i*S*P... we walk R directly
        if (R.inf) {
            if (lo + i * S <= hi) hits.push_back(lo + i * S);
        } else {
            auto it = std::lower_bound(byx.begin(), byx.end(), std::make_pair(R.x, (u64)0));
            for (; it != byx.end() && it->first == R.x; ++it) {
                u64 j = it->second;
                // R = -(j P)  =>  (lo + iS + j) P = O
                if (baby[j].y == (R.y ? E.p - R.y : 0)) {
                    u64 m = lo + i * S + j;
                    if (m <= hi) hits.push_back(m);
                }
                // R = +(j P)  =>  (lo + iS - j) P = O
                if (baby[j].y == R.y && j > 0) {
                    u64 m = lo + i * S - j;
                    if (m >= lo && m <= hi) hits.push_back(m);
                }
            }
        }
        R = E.add(R, G);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

u64 count_points_exhaustive(u64 p, u64 A, u64 B) {
    return (u64)((i64)p + 1 - trace_naive(p, A, B));
}

// One multiple of #E known to lie in [lo,hi] given that e divides #E; 0 if
// not unique.
u64 unique_multiple(u64 e, u64 lo, u64 hi) {
    u64 first = (lo + e - 1) / e * e;
    if (first > hi) return 0;
    if (first + e <= hi) return 0;
    return first;
}

} // namespace

u64 ec_group_order_bsgs(u64 p, u64 A, u64 B) {
    u64 two_sqrt = isqrt(4 * p);
    while ((two_sqrt + 1) * (two_sqrt + 1) <= 4 * p) ++two_sqrt;
    u64 lo = p + 1 - two_sqrt, hi = p + 1 + two_sqrt;

    // quadratic twist by d: y^2 = x^3 + A d^2 x + B d^3
    u64 d = 2;
    while (powmod(d, (p - 1) / 2, p) != p - 1) ++d;
    u64 Atw = mulmod(A, mulmod(d, d, p), p);
    u64 Btw = mulmod(B, mulmod(d, mulmod(d, d, p), p), p);

    CurveFp E{p, A}, Etw{p, Atw};
    u64 e = 1, etw = 1;

    auto next_point = [&](const CurveFp& C, u64 b, u64& xcursor) -> AffinePt {
        for (;; ++xcursor) {
            u64 x = xcursor % p;
            u64 fx = addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(C.A, x, p), b, p), p);
            if (auto y = sqrt_mod(fx, p)) {
                ++xcursor;
                return {x, *y, false};
            }
        }
    };

    u64 xc = 1, xctw = 1;
    for (int round = 0; round < 12; ++round) {
        bool on_twist = (round % 2 == 1);
        const CurveFp& C = on_twist ? Etw : E;
        u64 b = on_twist ? Btw : B;
        AffinePt P = next_point(C, b, on_twist ? xctw : xc);
        auto hits = kill_multiples_in_interval(C, P, lo, hi);
        if (hits.empty()) continue; // cannot happen if the curve data is consistent
        u64 ord = point_order_from_multiple(C, P, hits[0]);
        u64& acc = on_twist ? etw : e;
        acc = std::lcm(acc, ord);

        // unique multiple of e in the Hasse interval?
        if (u64 m = unique_multiple(e, lo, hi)) {
            // cross-check with twist knowledge: etw must divide 2p+2-m
            if ((2 * p + 2 - m) % etw == 0) return m;
        }
        // joint determination: candidates n with e | n and etw | 2p+2-n
        u64 cand = 0;
        int ncand = 0;
        for (u64 n = (lo + e - 1) / e * e; n <= hi; n += e) {
            if ((2 * p + 2 - n) % etw == 0) {
                cand = n;
                if (++ncand > 1) break;
            }
        }
        if (ncand == 1) return cand;
    }
    // ambiguous; exhaustive count is always correct
    return count_points_exhaustive(p, A, B);
}

} // namespace murm
