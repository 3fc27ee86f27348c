#include "murm/curves.hpp"

#include <cassert>

namespace murm {

i128 disc_quantity(i64 A, i64 B) {
    return checked_mul(4, cube(A)) + checked_mul(27, checked_mul(B, B));
}

i128 naive_height(i64 A, i64 B) {
    i128 ha = checked_mul(4, iabs(cube(A)));
    i128 hb = checked_mul(27, checked_mul(B, B));
    return ha > hb ? ha : hb;
}

namespace {

bool p4_divides_A_and_p6_divides_B(i64 A, i64 B, u64 p) {
    u64 p2 = p * p;
    u64 p4 = p2 * p2;
    if (A != 0 && (u64)(A < 0 ? -A : A) % p4 != 0) return false;
    if (B == 0) return true;
    u64 p6 = p4 * p2;
    return (u64)(B < 0 ? -B : B) % p6 == 0;
}

} // namespace

bool is_minimal(i64 A, i64 B) {
    if (A == 0 && B == 0) return false;
    if (A == 0) {
        // need p^6 | B to fail for all p
        u64 b = (u64)(B < 0 ? -B : B);
        for (u64 p = 2; p * p * p * p * p * p <= b; ++p)
            if (p4_divides_A_and_p6_divides_B(A, B, p)) return false;
        return true;
    }
    u64 a = (u64)(A < 0 ? -A : A);
    for (u64 p = 2; p * p * p * p <= a; ++p)
        if (p4_divides_A_and_p6_divides_B(A, B, p)) return false;
    return true;
}

bool is_valid_seed(i64 A, i64 B) {
    return disc_quantity(A, B) != 0 && is_minimal(A, B);
}

std::pair<i64, i64> a_range_for_height(i128 X) {
    if (X < 4) return {0, -1}; // empty
    i64 a = 0;
    while (checked_mul(4, cube(a + 1)) <= X) ++a;
    return {-a, a};
}

namespace {

i64 b_max_for_height(i128 X) {
    if (X < 0) return -1;
    i64 b = (i64)isqrt128((u128)(X / 27));
    while (checked_mul(27, checked_mul(b + 1, b + 1)) <= X) ++b;
    while (b >= 0 && checked_mul(27, checked_mul(b, b)) > X) --b;
    return b;
}

} // namespace

void enumerate_curves_range(i128 X, i64 a_lo, i64 a_hi,
                            const std::function<void(const CurveSeed&)>& emit) {
    if (X < 4) return;
    auto [amin, amax] = a_range_for_height(X);
    if (a_lo < 0 || a_hi > amax) { a_lo = 0; a_hi = amax; }
    i64 bmax = b_max_for_height(X);
    // order: |A| ascending, negative sign first, then |B| ascending, negative first
    for (i64 a = a_lo; a <= a_hi; ++a) {
        for (int sa = 0; sa < (a == 0 ? 1 : 2); ++sa) {
            i64 A = (sa == 0) ? -a : a;
            if (a == 0) A = 0;
            for (i64 b = 0; b <= bmax; ++b) {
                for (int sb = 0; sb < (b == 0 ? 1 : 2); ++sb) {
                    i64 B = (sb == 0) ? -b : b;
                    if (b == 0) B = 0;
                    if (!is_valid_seed(A, B)) continue;
                    emit(CurveSeed{A, B});
                }
            }
        }
    }
}

void enumerate_curves(i128 X, const std::function<void(const CurveSeed&)>& emit) {
    auto [amin, amax] = a_range_for_height(X);
    (void)amin;
    if (X < 4) return;
    enumerate_curves_range(X, 0, amax, emit);
}

u64 count_curves(i128 X) {
    u64 n = 0;
    enumerate_curves(X, [&](const CurveSeed&) { ++n; });
    return n;
}

std::vector<CurveSeed> curves_up_to(i128 X) {
    std::vector<CurveSeed> v;
    enumerate_curves(X, [&](const CurveSeed& s) { v.push_back(s); });
    return v;
}

} // namespace murm
