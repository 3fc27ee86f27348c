#ifndef MURM_WEIERSTRASS_HPP
#define MURM_WEIERSTRASS_HPP

#include <array>

#include "murm/rational.hpp"
#include "murm/util.hpp"

namespace murm {

// General Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WModel {
    BigInt a1, a2, a3, a4, a6;
};

struct WInvariants {
    BigInt b2, b4, b6, b8, c4, c6, disc;
};

WInvariants invariants(const WModel& m);

inline WModel short_model(i64 A, i64 B) { return WModel{0, 0, 0, A, B}; }

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.  All divisions must be exact for
// the result to be integral; the caller guarantees that.
WModel transform(const WModel& m, const BigInt& r, const BigInt& s, const BigInt& t,
                 const BigInt& u);

// #E(F_p) for a model that is nonsingular mod p; direct enumeration, tiny p.
u64 count_points_small(const WModel& m, u64 p);

int valuation(const BigInt& x, u64 p); // v_p(x); x != 0
BigInt divexact_pow(const BigInt& x, u64 p, int k);

} // namespace murm

#endif
