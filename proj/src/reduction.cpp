#include "murm/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "murm/gfp.hpp"
#include "murm/primes.hpp"

namespace murm {

const char* kind_name(RedKind k) {
    switch (k) {
        case RedKind::good: return "good";
        case RedKind::split_mult: return "split-mult";
        case RedKind::nonsplit_mult: return "nonsplit-mult";
        case RedKind::additive: return "additive";
    }
    return "?";
}

const char* kodaira_name(Kodaira t, int n) {
    static thread_local std::string buf;
    switch (t) {
        case Kodaira::I0: return "I0";
        case Kodaira::In: buf = "I" + std::to_string(n); return buf.c_str();
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::I0star: return "I0*";
        case Kodaira::Instar:
            buf = "I" + std::to_string(n - 6) + "*";
            return buf.c_str();
        case Kodaira::IVstar: return "IV*";
        case Kodaira::IIIstar: return "III*";
        case Kodaira::IIstar: return "II*";
    }
    return "?";
}

namespace {

constexpr int VINF = 99;

int val_i128(i128 x, u64 p) {
    if (x == 0) return VINF;
    int v = 0;
    while (x % (i128)p == 0) { x /= (i128)p; ++v; }
    return v;
}

i128 unit_part_i128(i128 x, u64 p) {
    if (x == 0) return 0;
    while (x % (i128)p == 0) x /= (i128)p;
    return x;
}

// is a p-adic unit u (given exactly) a square in Z_p?
bool unit_is_square(i128 u, u64 p) {
    if (p == 2) {
        i128 m = u % 8;
        if (m < 0) m += 8;
        return m == 1;
    }
    i64 r = (i64)(u % (i128)p);
    return legendre(r, (i64)p) == 1;
}

bool unit_is_square_big(const BigInt& u, u64 p) {
    if (p == 2) {
        BigInt m = u % 8;
        if (m < 0) m += 8;
        return m == 1;
    }
    BigInt r = u % (long long)p;
    if (r < 0) r += (long long)p;
    return legendre(r.convert_to<i64>(), (i64)p) == 1;
}

} // namespace

// ---------------------------------------------------------------------------
// Kraus conditions at p = 2, 3: which (c4, c6) pairs come from an integral
// model over Z_p, and a representative model mod p when one exists.
// Derived from b2 = a1^2 + 4a2, b4 = 2a4 + a1a3, b6 = a3^2 + 4a6 and
// 24 b4 = b2^2 - c4, 216 b6 = -c6 - b2^3 + 36 b2 b4.
// ---------------------------------------------------------------------------

namespace {

struct KrausSolution {
    bool ok = false;
    u64 b2 = 0, b4u = 0, b6u = 0; // residues mod p^k (k large enough for mod-p model)
};

KrausSolution kraus_solve(const BigInt& c4, const BigInt& c6, u64 p) {
    KrausSolution sol;
    if (p == 3) {
        const i64 P5 = 243;
        i64 c4r = ((c4 % P5) + P5).convert_to<i64>() % P5;
        i64 c6r = ((c6 % P5) + P5).convert_to<i64>() % P5;
        for (i64 b2 = 0; b2 < 27; ++b2) {
            i64 num = ((b2 * b2 - c4r) % P5 + P5) % P5;
            if (num % 3 != 0) continue;
            i64 cubic = ((b2 * b2 * b2 - 3 * c4r * b2 - 2 * c6r) % P5 + P5) % P5;
            if (cubic % 27 != 0) continue;
            // b4 = (b2^2 - c4)/24 in Z_3: value mod 3 = (num/3) * inv(8) mod 3
            i64 b4m3 = (num / 3) % 3 * 2 % 3; // inv(8) = 2 mod 3
            // 2*(216 b6) = b2^3 - 3 c4 b2 - 2 c6 = cubic, so
            // b6 mod 3 = (cubic/27) * inv(16) mod 3 = (cubic/27) mod 3
            i64 b6m3 = (cubic / 27) % 3;
            sol.ok = true;
            sol.b2 = (u64)b2;
            sol.b4u = (u64)b4m3;
            sol.b6u = (u64)b6m3;
            return sol;
        }
        return sol;
    }
    if (p == 2) {
        const i64 P12 = 4096;
        i64 c4r = ((c4 % P12) + P12).convert_to<i64>() % P12;
        i64 c6r = ((c6 % P12) + P12).convert_to<i64>() % P12;
        for (i64 b2 = 0; b2 < 64; ++b2) {
            if (b2 % 4 != 0 && b2 % 4 != 1) continue;
            i64 num = ((b2 * b2 - c4r) % P12 + P12) % P12; // mod 2^12
            if (num % 8 != 0) continue;
            // b4 = num/8 * inv(3) mod 2^9
            i64 b4 = (num / 8) * 171 % 512; // inv(3) mod 512 = 171
            i64 E = ((-c6r - b2 * b2 * b2 + 36 * b2 * b4) % P12 + P12) % P12;
            if (E % 8 != 0) continue;
            // b6 = E/8 * inv(27) mod 2^6
            i64 inv27 = 19; // 27*19 = 513 = 1 mod 64
            i64 b6 = (E / 8) % 64 * inv27 % 64;
            if (b6 % 4 != 0 && b6 % 4 != 1) continue;
            if ((b4 % 2) != ((b2 % 2) * (b6 % 2)) % 2) continue;
            sol.ok = true;
            sol.b2 = (u64)b2;
            sol.b4u = (u64)(b4 % 64);
            sol.b6u = (u64)(b6 % 64);
            return sol;
        }
        return sol;
    }
    sol.ok = true; // p >= 5: always
    return sol;
}

} // namespace

bool kraus_exists(const BigInt& c4, const BigInt& c6, u64 p) { return kraus_solve(c4, c6, p).ok; }

WModel kraus_model_mod_p(const BigInt& c4, const BigInt& c6, u64 p) {
    KrausSolution s = kraus_solve(c4, c6, p);
    if (!s.ok) throw std::logic_error("kraus_model_mod_p: no integral model");
    WModel m;
    if (p == 3) {
        // a1 = a3 = 0; a2 = b2/4, a4 = b4/2, a6 = b6/4 (units mod 3: inv(4)=1, inv(2)=2)
        m.a1 = 0;
        m.a3 = 0;
        m.a2 = (long long)(s.b2 % 3);
        m.a4 = (long long)(s.b4u * 2 % 3);
        m.a6 = (long long)(s.b6u % 3);
        return m;
    }
    // p == 2
    u64 a1 = s.b2 % 2;
    u64 a2 = ((s.b2 - a1) / 4) % 2;
    u64 a3 = s.b6u % 2;
    u64 a6 = ((s.b6u - a3) / 4) % 2;
    u64 a4 = ((s.b4u - a1 * a3) / 2) % 2;
    m.a1 = (long long)a1;
    m.a2 = (long long)a2;
    m.a3 = (long long)a3;
    m.a4 = (long long)a4;
    m.a6 = (long long)a6;
    return m;
}

// ---------------------------------------------------------------------------
// Fast reduction-type classification without Weierstrass translations.
// ---------------------------------------------------------------------------

LocalClass local_class(i64 A, i64 B, u64 p) {
    LocalClass out;
    i128 D = disc_quantity(A, B);
    if (D == 0) throw std::domain_error("local_class: singular curve");
    if (p >= 5) {
        if (D % (i128)p != 0) {
            out.kind = RedKind::good; // trace via point counting elsewhere
            out.a_known = false;
            return out;
        }
        if (A % (i64)p != 0) {
            // node with -c6 = 864 B deciding the tangent field
            i128 mc6 = (i128)864 * B;
            bool split = unit_is_square(unit_part_i128(mc6, p), p);
            out.kind = split ? RedKind::split_mult : RedKind::nonsplit_mult;
            out.a_small = split ? 1 : -1;
            out.a_known = true;
            return out;
        }
        out.kind = RedKind::additive;
        out.a_small = 0;
        out.a_known = true;
        return out;
    }

    // p = 2, 3: walk u = p descents on the invariants
    BigInt c4 = BigInt(-48) * A;
    BigInt c6 = BigInt(-864) * B;
    BigInt disc = BigInt(-16) * Rational::from_i128(D).num();
    while (true) {
        int vd = valuation(disc, p);
        if (vd == 0) {
            WModel m = kraus_model_mod_p(c4, c6, p);
            u64 cnt = count_points_small(m, p);
            out.kind = RedKind::good;
            out.a_small = (int)((i64)p + 1 - (i64)cnt);
            out.a_known = true;
            return out;
        }
        int vc4 = (c4 == 0) ? VINF : valuation(c4, p);
        if (vc4 == 0) {
            BigInt mc6 = -c6;
            bool split = unit_is_square_big(mc6, p);
            out.kind = split ? RedKind::split_mult : RedKind::nonsplit_mult;
            out.a_small = split ? 1 : -1;
            out.a_known = true;
            return out;
        }
        int vc6 = (c6 == 0) ? VINF : valuation(c6, p);
        if (vc4 >= 4 && vc6 >= 6 && vd >= 12) {
            BigInt c4d = divexact_pow(c4, p, 4);
            BigInt c6d = divexact_pow(c6, p, 6);
            if (kraus_exists(c4d, c6d, p)) {
                c4 = c4d;
                c6 = c6d;
                disc = divexact_pow(disc, p, 12);
                continue;
            }
        }
        out.kind = RedKind::additive;
        out.a_small = 0;
        out.a_known = true;
        return out;
    }
}

// ---------------------------------------------------------------------------
// Tate's algorithm, search-based translations (p small).
// ---------------------------------------------------------------------------

namespace {

// multiplicity-aware roots of a monic cubic T^3 + c2 T^2 + c1 T + c0 mod p
struct CubicRoots {
    int nroots = 0;               // distinct roots found in F_p
    u64 root[3] = {0, 0, 0};
    int mult[3] = {0, 0, 0};
    bool separable = false;
};

CubicRoots cubic_roots(u64 c2, u64 c1, u64 c0, u64 p) {
    CubicRoots r;
    // universal discriminant 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 (a=c2,b=c1,c=c0)
    u64 t1 = mulmod(mulmod(18 % p, c2, p), mulmod(c1, c0, p), p);
    u64 t2 = mulmod(4 % p, mulmod(mulmod(c2, c2, p), mulmod(c2, c0, p), p), p);
    u64 t3 = mulmod(mulmod(c2, c2, p), mulmod(c1, c1, p), p);
    u64 t4 = mulmod(4 % p, mulmod(c1, mulmod(c1, c1, p), p), p);
    u64 t5 = mulmod(27 % p, mulmod(c0, c0, p), p);
    u64 disc = submod(addmod(t1, t3, p), addmod(t2, addmod(t4, t5, p), p), p);
    r.separable = (disc != 0);
    for (u64 x = 0; x < p; ++x) {
        // synthetic division to get multiplicity
        u64 c[4] = {c0, c1, c2, 1};
        int mult = 0;
        while (true) {
            // evaluate and divide by (T - x): Horner
            u64 q[3], rem = 0;
            int deg = 3 - mult;
            if (deg <= 0) break;
            rem = c[deg];
            for (int i = deg - 1; i >= 0; --i) {
                q[i] = rem;
                rem = addmod(mulmod(rem, x, p), c[i], p);
            }
            if (rem != 0) break;
            ++mult;
            for (int i = 0; i < deg; ++i) c[i] = q[i];
            c[deg] = 0;
        }
        if (mult > 0) {
            r.root[r.nroots] = x;
            r.mult[r.nroots] = mult;
            ++r.nroots;
        }
    }
    return r;
}

struct QuadInfo {
    bool separable = false;
    u64 dbl_root = 0; // meaningful when !separable
};

// a X^2 + b X + c mod p, a a unit
QuadInfo quad_info(u64 a, u64 b, u64 c, u64 p) {
    QuadInfo q;
    u64 disc = submod(mulmod(b, b, p), mulmod(4 % p, mulmod(a, c, p), p), p);
    q.separable = (disc != 0);
    if (!q.separable) {
        for (u64 x = 0; x < p; ++x) {
            u64 v = addmod(mulmod(a, mulmod(x, x, p), p), addmod(mulmod(b, x, p), c, p), p);
            if (v == 0) { q.dbl_root = x; break; }
        }
    }
    return q;
}

u64 red_mod(const BigInt& x, u64 m) {
    BigInt r = x % (long long)m;
    if (r < 0) r += (long long)m;
    return r.convert_to<u64>();
}

int vbig(const BigInt& x, u64 p) { return x == 0 ? VINF : valuation(x, p); }

// find the singular point of a model that is singular mod p (search; p small)
std::pair<u64, u64> singular_point(const WModel& m, u64 p) {
    u64 a1 = red_mod(m.a1, p), a2 = red_mod(m.a2, p), a3 = red_mod(m.a3, p),
        a4 = red_mod(m.a4, p), a6 = red_mod(m.a6, p);
    for (u64 x = 0; x < p; ++x) {
        for (u64 y = 0; y < p; ++y) {
            u64 eq = submod(addmod(mulmod(y, y, p), addmod(mulmod(a1, mulmod(x, y, p), p),
                                                           mulmod(a3, y, p), p), p),
                            addmod(mulmod(mulmod(x, x, p), x, p),
                                   addmod(mulmod(a2, mulmod(x, x, p), p),
                                          addmod(mulmod(a4, x, p), a6, p), p), p), p);
            if (eq != 0) continue;
            u64 dy = addmod(addmod(y, y, p), addmod(mulmod(a1, x, p), a3, p), p);
            if (dy != 0) continue;
            u64 dx = submod(mulmod(a1, y, p),
                            addmod(mulmod(3 % p, mulmod(x, x, p), p),
                                   addmod(mulmod(addmod(a2, a2, p), x, p), a4, p), p), p);
            if (dx != 0) continue;
            return {x, y};
        }
    }
    throw std::logic_error("singular_point: none found");
}

} // namespace

LocalReduction tate_local_generic(const WModel& start, u64 p) {
    LocalReduction out;
    out.p = p;
    WModel E = start;
    int u_scalings = 0;

    while (true) {
        WInvariants I = invariants(E);
        if (I.disc == 0) throw std::domain_error("tate: singular curve");
        int n = vbig(I.disc, p);
        out.n = n;
        out.vc4 = vbig(I.c4, p);
        out.vc6 = vbig(I.c6, p);
        out.c4m = I.c4;
        out.c6m = I.c6;
        out.discm = I.disc;
        out.u_scalings = u_scalings;

        if (n == 0) {
            out.kind = RedKind::good;
            out.f = 0;
            out.type = Kodaira::I0;
            return out;
        }
        if (out.vc4 == 0) {
            out.kind = unit_is_square_big(-I.c6, p) ? RedKind::split_mult : RedKind::nonsplit_mult;
            out.split = out.kind == RedKind::split_mult;
            out.f = 1;
            out.type = Kodaira::In;
            return out;
        }

        // additive: move the singular point to the origin
        auto [x0, y0] = singular_point(E, p);
        E = transform(E, (long long)x0, 0, (long long)y0, 1);
        out.kind = RedKind::additive;

        if (vbig(E.a6, p) < 2) {
            out.f = n;
            out.type = Kodaira::II;
            return out;
        }
        {
            WInvariants I2 = invariants(E);
            if (vbig(I2.b8, p) < 3) {
                out.f = n - 1;
                out.type = Kodaira::III;
                return out;
            }
            if (vbig(I2.b6, p) < 3) {
                out.f = n - 2;
                out.type = Kodaira::IV;
                return out;
            }
        }

        // normalize for the star steps: p | a1,a2 ; p^2 | a3,a4 ; p^3 | a6
        {
            u64 p2 = p * p, p3 = p2 * p;
            bool found = false;
            for (u64 s = 0; s < p && !found; ++s) {
                if (red_mod(E.a1 + 2 * (long long)s, p) != 0) continue;
                for (u64 r = 0; r < p3 && !found; ++r) {
                    BigInt a2n = E.a2 - (long long)s * E.a1 + 3 * (long long)r -
                                 (long long)(s) * (long long)(s);
                    if (red_mod(a2n, p) != 0) continue;
                    for (u64 t = 0; t < p3 && !found; ++t) {
                        BigInt a3n = E.a3 + (long long)r * E.a1 + 2 * (long long)t;
                        if (red_mod(a3n, p2) != 0) continue;
                        WModel C = transform(E, (long long)r, (long long)s, (long long)t, 1);
                        if (red_mod(C.a4, p2) != 0) continue;
                        if (red_mod(C.a6, p3) != 0) continue;
                        E = C;
                        found = true;
                    }
                }
            }
            if (!found) throw std::logic_error("tate: star normalization failed");
        }

        // P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3)
        u64 p2 = p * p, p3 = p2 * p;
        BigInt A2 = divexact_pow(E.a2, p, 1);
        BigInt A4 = divexact_pow(E.a4, p, 2);
        BigInt A6 = divexact_pow(E.a6, p, 3);
        CubicRoots cr = cubic_roots(red_mod(A2, p), red_mod(A4, p), red_mod(A6, p), p);
        if (cr.separable) {
            out.f = n - 4;
            out.type = Kodaira::I0star;
            return out;
        }
        bool triple = false;
        u64 mroot = 0;
        for (int i = 0; i < cr.nroots; ++i) {
            if (cr.mult[i] == 3) { triple = true; mroot = cr.root[i]; }
            if (cr.mult[i] == 2) mroot = cr.root[i];
        }

        if (!triple) {
            // I_m^* chain
            E = transform(E, (long long)(p * mroot), 0, 0, 1);
            int m = 1;
            while (true) {
                // odd m = 2k-1: Y^2 + (a3/p^{k+1}) Y - (a6/p^{2k+2})
                int k = (m + 1) / 2;
                BigInt a3k = divexact_pow(E.a3, p, k + 1);
                BigInt a6k = divexact_pow(E.a6, p, 2 * k + 2);
                QuadInfo q = quad_info(1, red_mod(a3k, p), red_mod(-a6k, p), p);
                if (q.separable) {
                    out.f = n - 4 - m;
                    out.type = Kodaira::Instar;
                    out.n = n; // v(disc); index m = n - 6 at tame p
                    break;
                }
                {
                    BigInt t = BigInt((long long)q.dbl_root);
                    for (int i = 0; i < k + 1; ++i) t *= (long long)p;
                    E = transform(E, 0, 0, t, 1);
                }
                ++m;
                // even m = 2k: (a2/p) X^2 + (a4/p^{k+2}) X + (a6/p^{2k+3})
                k = m / 2;
                BigInt a2k = divexact_pow(E.a2, p, 1);
                BigInt a4k = divexact_pow(E.a4, p, k + 2);
                BigInt a6e = divexact_pow(E.a6, p, 2 * k + 3);
                QuadInfo q2 = quad_info(red_mod(a2k, p), red_mod(a4k, p), red_mod(a6e, p), p);
                if (q2.separable) {
                    out.f = n - 4 - m;
                    out.type = Kodaira::Instar;
                    break;
                }
                {
                    BigInt r = BigInt((long long)q2.dbl_root);
                    for (int i = 0; i < k + 1; ++i) r *= (long long)p;
                    E = transform(E, r, 0, 0, 1);
                }
                ++m;
                if (m > n) throw std::logic_error("tate: I*m chain failed to terminate");
            }
            // store the chain length in out.n as v(disc) (kept) and leave index implicit
            return out;
        }

        // triple root: shift it to zero
        E = transform(E, (long long)(p * mroot), 0, 0, 1);
        // step 9: Y^2 + (a3/p^2) Y - (a6/p^4)
        {
            BigInt a3k = divexact_pow(E.a3, p, 2);
            BigInt a6k = divexact_pow(E.a6, p, 4);
            QuadInfo q = quad_info(1, red_mod(a3k, p), red_mod(-a6k, p), p);
            if (q.separable) {
                out.f = n - 6;
                out.type = Kodaira::IVstar;
                return out;
            }
            BigInt t = BigInt((long long)q.dbl_root) * (long long)p2;
            E = transform(E, 0, 0, t, 1);
        }
        // step 10
        if (vbig(E.a4, p) < 4) {
            out.f = n - 7;
            out.type = Kodaira::IIIstar;
            return out;
        }
        // step 11
        if (vbig(E.a6, p) < 6) {
            out.f = n - 8;
            out.type = Kodaira::IIstar;
            return out;
        }
        // non-minimal: u = p rescale and restart
        E = transform(E, 0, 0, 0, (long long)p);
        ++u_scalings;
    }
}

namespace {

LocalReduction closed_form_large_p(const CurveSeed& seed, u64 p) {
    LocalReduction out;
    out.p = p;
    i128 D = disc_quantity(seed.A, seed.B);
    BigInt disc = BigInt(-16) * Rational::from_i128(D).num();
    BigInt c4 = BigInt(-48) * seed.A;
    BigInt c6 = BigInt(-864) * seed.B;
    out.c4m = c4;
    out.c6m = c6;
    out.discm = disc;
    out.n = vbig(disc, p);
    out.vc4 = vbig(c4, p);
    out.vc6 = vbig(c6, p);
    if (out.n == 0) {
        out.kind = RedKind::good;
        out.f = 0;
        out.type = Kodaira::I0;
        return out;
    }
    if (out.vc4 == 0) {
        out.kind = unit_is_square_big(-c6, p) ? RedKind::split_mult : RedKind::nonsplit_mult;
        out.split = out.kind == RedKind::split_mult;
        out.f = 1;
        out.type = Kodaira::In;
        return out;
    }
    out.kind = RedKind::additive;
    out.f = 2;
    bool potmult = (out.vc4 != VINF) && (3 * out.vc4 < out.n);
    if (potmult) {
        out.type = Kodaira::Instar; // I_{n-6}^*
        return out;
    }
    switch (out.n) {
        case 2: out.type = Kodaira::II; break;
        case 3: out.type = Kodaira::III; break;
        case 4: out.type = Kodaira::IV; break;
        case 6: out.type = Kodaira::I0star; break;
        case 8: out.type = Kodaira::IVstar; break;
        case 9: out.type = Kodaira::IIIstar; break;
        case 10: out.type = Kodaira::IIstar; break;
        default: throw std::logic_error("unexpected additive v(disc) at p >= 5");
    }
    return out;
}

} // namespace

LocalReduction tate_local(const CurveSeed& seed, u64 p) {
    if (p >= 5) return closed_form_large_p(seed, p);
    return tate_local_generic(short_model(seed.A, seed.B), p);
}

// ---------------------------------------------------------------------------
// conductor / root number
// ---------------------------------------------------------------------------

namespace {

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(u64 n, std::vector<u64>& primes) {
    if (n <= 1) return;
    if (is_prime_u64(n)) { primes.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_u64(d, primes);
    factor_u64(n / d, primes);
}

std::vector<u64> prime_divisors_of_disc(const CurveSeed& seed) {
    i128 D = disc_quantity(seed.A, seed.B);
    u128 a = (u128)iabs(D);
    std::vector<u64> ps{2, 3};
    // strip small part, then factor the remainder (fits u64 at pipeline scale)
    for (u64 p : {2ull, 3ull})
        while (a % p == 0) a /= p;
    if (a >> 62) throw std::overflow_error("discriminant too large to factor");
    std::vector<u64> rest;
    factor_u64((u64)a, rest);
    for (u64 p : rest) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

} // namespace

i64 conductor(const CurveSeed& seed) {
    i64 N = 1;
    for (u64 p : prime_divisors_of_disc(seed)) {
        LocalReduction L = tate_local(seed, p);
        for (int i = 0; i < L.f; ++i) N *= (i64)p;
    }
    return N;
}

GlobalInvariants global_invariants(const CurveSeed& seed) {
    GlobalInvariants g;
    for (u64 p : prime_divisors_of_disc(seed)) {
        LocalReduction L = tate_local(seed, p);
        if (L.f == 0) continue;
        for (int i = 0; i < L.f; ++i) g.N *= (i64)p;
        g.locals.push_back(L);
    }
    g.eps = root_number(seed, g.locals);
    return g;
}

bool is_prime_conductor(const CurveSeed& seed) { return is_prime_u64((u64)conductor(seed)); }

int local_root_number(const LocalReduction& L) {
    if (L.kind == RedKind::good) return 1;
    if (L.kind == RedKind::split_mult) return -1;
    if (L.kind == RedKind::nonsplit_mult) return 1;
    u64 p = L.p;
    if (p >= 5) {
        switch (L.type) {
            case Kodaira::II:
            case Kodaira::IIstar:
            case Kodaira::I0star:
            case Kodaira::Instar: return legendre(-1, (i64)p);
            case Kodaira::III:
            case Kodaira::IIIstar: return legendre(-2, (i64)p);
            case Kodaira::IV:
            case Kodaira::IVstar: return legendre(-3, (i64)p);
            default: throw std::logic_error("unexpected Kodaira type for additive reduction");
        }
    }
    return RootNumberTable::instance().lookup(L);
}

int root_number(const CurveSeed& seed, const std::vector<LocalReduction>& locals) {
    (void)seed;
    int w = -1; // archimedean place
    for (const auto& L : locals) w *= local_root_number(L);
    return w;
}

// ---------------------------------------------------------------------------
// root-number classification table at p = 2, 3
// ---------------------------------------------------------------------------

std::string data_dir() {
    if (const char* env = std::getenv("MURM_DATA_DIR")) return env;
    return std::string(MURM_SOURCE_DIR) + "/data";
}

u64 RootNumberTable::make_key(int vc4, int vc6, int vd, bool potmult, int c4u, int c6u, int du) {
    auto cap = [](int v, int c) { return v > c ? c : v; };
    u64 k = 0;
    k = (k << 4) | (u64)cap(vc4, 15);
    k = (k << 4) | (u64)cap(vc6, 15);
    k = (k << 5) | (u64)cap(vd, 31);
    k = (k << 1) | (u64)(potmult ? 1 : 0);
    k = (k << 7) | (u64)c4u;
    k = (k << 7) | (u64)c6u;
    k = (k << 7) | (u64)du;
    return k;
}

namespace {

u64 fnv1a(const std::string& s, u64 h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct TableKeyParts {
    int vc4, vc6, vd, c4u, c6u, du;
    bool potmult;
};

// capping rules shared with the generator script
TableKeyParts key_parts(const LocalReduction& L) {
    TableKeyParts k;
    u64 p = L.p;
    u64 m = (p == 2) ? 32 : 27;
    int vc4 = L.vc4, vc6 = L.vc6;
    int vd = L.n;
    k.potmult = (vc4 != VINF) && (3 * vc4 < vd);
    auto unit_mod = [&](const BigInt& x, int v) -> int {
        if (x == 0) return 0;
        BigInt u = x;
        for (int i = 0; i < v; ++i) u /= (long long)p;
        BigInt r = u % (long long)m;
        if (r < 0) r += (long long)m;
        return (int)r.convert_to<i64>();
    };
    k.c4u = (vc4 == VINF) ? 0 : unit_mod(L.c4m, vc4);
    k.c6u = (vc6 == VINF) ? 0 : unit_mod(L.c6m, vc6);
    k.du = unit_mod(L.discm, vd);
    k.vc4 = vc4 > 12 ? ((vc4 == VINF) ? 15 : 12) : vc4;
    k.vc6 = vc6 > 13 ? ((vc6 == VINF) ? 15 : 13) : vc6;
    k.vd = vd > 24 ? 24 : vd;
    return k;
}

} // namespace

const RootNumberTable& RootNumberTable::instance() {
    static RootNumberTable table;
    return table;
}

RootNumberTable::RootNumberTable() {
    std::string path = data_dir() + "/rootnum_23.tbl";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open root-number table " + path);
    std::string line, body;
    u64 expect_count = 0, expect_sum = 0;
    size_t nrows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("count=", 0) == 0) {
            std::sscanf(line.c_str(), "count=%llu checksum=%llx", &expect_count, &expect_sum);
            continue;
        }
        body += line;
        body += '\n';
        int p, vc4, vc6, vd, pm, c4u, c6u, du, w;
        if (std::sscanf(line.c_str(), "%d %d %d %d %d %d %d %d %d", &p, &vc4, &vc6, &vd, &pm,
                        &c4u, &c6u, &du, &w) != 9)
            throw std::runtime_error("bad row in root-number table: " + line);
        u64 key = make_key(vc4, vc6, vd, pm != 0, c4u, c6u, du);
        auto& map = (p == 2) ? w2_ : w3_;
        map[key] = w;
        ++nrows;
    }
    if (nrows != expect_count || fnv1a(body) != expect_sum)
        throw std::runtime_error("root-number table failed checksum");
}

int RootNumberTable::lookup(const LocalReduction& L) const {
    TableKeyParts k = key_parts(L);
    u64 key = make_key(k.vc4, k.vc6, k.vd, k.potmult, k.c4u, k.c6u, k.du);
    const auto& map = (L.p == 2) ? w2_ : w3_;
    auto it = map.find(key);
    if (it == map.end())
        throw std::runtime_error("root-number table: no entry for p=" + std::to_string(L.p) +
                                 " key " + std::to_string(key));
    return it->second;
}

} // namespace murm
