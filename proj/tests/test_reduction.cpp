#include "doctest.h"

#include "murm/frobenius.hpp"
#include "murm/reduction.hpp"

using namespace murm;

TEST_CASE("conductors of well-known curves") {
    CHECK(conductor({0, 1}) == 36);    // y^2 = x^3 + 1
    CHECK(conductor({0, -1}) == 36);
    CHECK(conductor({-1, 0}) == 32);   // y^2 = x^3 - x
    CHECK(conductor({1, 0}) == 64);    // y^2 = x^3 + x
    CHECK(conductor({4, 0}) == 32);
    CHECK(conductor({-4, 0}) == 64);
    CHECK(conductor({-16, 16}) == 37); // minimal short model of the rank-1 conductor-37 curve
    CHECK(conductor({0, 16}) == 27);   // non-minimal at 2; isomorphic to y^2 + y = x^3
    CHECK(conductor({0, -432}) == 27); // x^3 + y^3 = 1 in disguise
    CHECK(conductor({1, 1}) == 496);
}

TEST_CASE("local reduction kinds and exponents") {
    // y^2 = x^3 - x: additive at 2 with conductor exponent 5
    LocalReduction L = tate_local({-1, 0}, 2);
    CHECK(L.kind == RedKind::additive);
    CHECK(L.f == 5);

    // y^2 = x^3 + 1 at 5: good
    CHECK(tate_local({0, 1}, 5).kind == RedKind::good);
    CHECK(tate_local({0, 1}, 5).f == 0);

    // y^2 = x^3 + 2 is additive at 3 (3 | 4*0+27*4)
    CHECK(tate_local({0, 2}, 3).kind == RedKind::additive);

    // conductor 37 curve: multiplicative at 37
    LocalReduction L37 = tate_local({-16, 16}, 37);
    CHECK(L37.kind != RedKind::good);
    CHECK(L37.f == 1);
}

TEST_CASE("fast classifier agrees with Tate at p = 2, 3") {
    for (i64 A = -25; A <= 25; ++A) {
        for (i64 B = -25; B <= 25; ++B) {
            if (!is_valid_seed(A, B)) continue;
            for (u64 p : {2ull, 3ull}) {
                LocalClass fast = local_class(A, B, p);
                LocalReduction full = tate_local({A, B}, p);
                CAPTURE(A);
                CAPTURE(B);
                CAPTURE(p);
                CHECK(fast.kind == full.kind);
                if (full.kind == RedKind::split_mult) CHECK(fast.a_small == 1);
                if (full.kind == RedKind::nonsplit_mult) CHECK(fast.a_small == -1);
            }
        }
    }
}

TEST_CASE("closed-form local data agrees with the generic Tate walk at p = 5, 7") {
    for (i64 A = -20; A <= 20; ++A) {
        for (i64 B = -20; B <= 20; ++B) {
            if (!is_valid_seed(A, B)) continue;
            for (u64 p : {5ull, 7ull}) {
                LocalReduction cf = tate_local({A, B}, p);
                LocalReduction gen = tate_local_generic(short_model(A, B), p);
                CAPTURE(A);
                CAPTURE(B);
                CAPTURE(p);
                CHECK(cf.kind == gen.kind);
                CHECK(cf.f == gen.f);
                if (cf.kind == RedKind::additive) CHECK(cf.type == gen.type);
                if (cf.kind != RedKind::good) CHECK(cf.n == gen.n);
            }
        }
    }
}

TEST_CASE("reduction-kind trichotomy against the conductor") {
    for (i64 A = -10; A <= 10; ++A) {
        for (i64 B = -10; B <= 10; ++B) {
            if (!is_valid_seed(A, B)) continue;
            CurveSeed s{A, B};
            i64 N = conductor(s);
            for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
                LocalClass lc = local_class(A, B, p);
                int v = 0;
                i64 m = N;
                while (m % (i64)p == 0) { m /= (i64)p; ++v; }
                CAPTURE(A);
                CAPTURE(B);
                CAPTURE(p);
                if (lc.kind == RedKind::good) CHECK(v == 0);
                if (lc.kind == RedKind::split_mult || lc.kind == RedKind::nonsplit_mult)
                    CHECK(v == 1);
                if (lc.kind == RedKind::additive) CHECK(v >= 2);
            }
        }
    }
}

TEST_CASE("every conductor prime divides the discriminant quantity") {
    for (i64 A = -12; A <= 12; ++A) {
        for (i64 B = -12; B <= 12; ++B) {
            if (!is_valid_seed(A, B)) continue;
            i64 N = conductor({A, B});
            i128 D = disc_quantity(A, B);
            for (i64 p = 2; p <= N; ++p) {
                if (N % p != 0) continue;
                CHECK(D % (i128)p == 0);
                while (N % p == 0) N /= p;
            }
        }
    }
}
