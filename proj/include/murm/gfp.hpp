#ifndef MURM_GFP_HPP
#define MURM_GFP_HPP

#include <optional>
#include <vector>

#include "murm/util.hpp"

namespace murm {

// Tonelli-Shanks square root mod an odd prime; nullopt if a is a non-residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

// #E(F_p) - (p+1) = -a_p contributions via one pass of quadratic-character
// sums: a_p = -sum_x chi(x^3 + Ax + B).  Requires p odd, good reduction.
i64 trace_naive(u64 p, u64 A, u64 B);

// Group order #E(F_p) for y^2 = x^3 + Ax + B, good reduction at p, via
// baby-step/giant-step order finding with quadratic-twist disambiguation.
// Falls back to exhaustive counting if the candidate order is not unique.
u64 ec_group_order_bsgs(u64 p, u64 A, u64 B);

} // namespace murm

#endif
