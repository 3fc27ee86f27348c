#ifndef MURM_CURVES_HPP
#define MURM_CURVES_HPP

#include <functional>
#include <vector>

#include "murm/util.hpp"

namespace murm {

// Short Weierstrass coefficients y^2 = x^3 + A x + B.  Valid seeds are
// nonsingular (4A^3 + 27B^2 != 0) and minimal in the sense that no prime p
// has both p^4 | A and p^6 | B.
struct CurveSeed {
    i64 A = 0;
    i64 B = 0;
    friend bool operator==(const CurveSeed&, const CurveSeed&) = default;
};

// 4A^3 + 27B^2, exact.
i128 disc_quantity(i64 A, i64 B);

// Naive height max(4|A|^3, 27 B^2).
i128 naive_height(i64 A, i64 B);

// True iff no prime p has p^4 | A and p^6 | B.  (0,0) is not minimal.
bool is_minimal(i64 A, i64 B);

bool is_valid_seed(i64 A, i64 B);

// Streams every valid seed with naive height <= X, ordered by A ascending and
// B ascending within each A.  The order is deterministic; the A-range can be
// restricted for sharded runs.
void enumerate_curves(i128 X, const std::function<void(const CurveSeed&)>& emit);
void enumerate_curves_range(i128 X, i64 a_lo, i64 a_hi,
                            const std::function<void(const CurveSeed&)>& emit);

// Inclusive A-range compatible with 4|A|^3 <= X.
std::pair<i64, i64> a_range_for_height(i128 X);

u64 count_curves(i128 X);

std::vector<CurveSeed> curves_up_to(i128 X);

} // namespace murm

#endif
