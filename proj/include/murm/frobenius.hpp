#ifndef MURM_FROBENIUS_HPP
#define MURM_FROBENIUS_HPP

#include <functional>
#include <map>

#include "murm/curves.hpp"
#include "murm/reduction.hpp"

namespace murm {

// Everything an a_n stream needs to know about the curve's bad places.
struct ReductionData {
    i64 N = 1;
    int eps = 1;
    // a_p and reduction kind at p = 2, 3 and at every bad prime
    std::map<u64, std::pair<int, RedKind>> ap_fixed;
};

ReductionData make_reduction_data(const CurveSeed& seed);
ReductionData make_reduction_data(const CurveSeed& seed, const GlobalInvariants& g);

inline constexpr u64 kBsgsCutoff = 229;      // naive counting below, BSGS above
inline constexpr u64 kNaiveBudget = 1 << 20; // hard ceiling for the O(p) method

// a_p for a prime of good reduction, by quadratic-character sums (p odd) or
// local point counting (p = 2, 3).  Throws on bad reduction.
int ap_naive(const CurveSeed& seed, u64 p);

// Same contract via baby-step/giant-step group-order computation.
int ap_bsgs(const CurveSeed& seed, u64 p);

// Any prime, any reduction type.
int ap_auto(const CurveSeed& seed, u64 p);

// a_{p^k} from a_p: Hecke recurrence for good reduction, a_p^k for bad.
i64 a_prime_power(i64 ap, u64 p, int k, RedKind kind);

enum class StreamMode { all, coprime_to, primes_only };

struct CoefficientStreamSpec {
    u64 n_max = 1;
    StreamMode mode = StreamMode::all;
    u64 coprime_bound = 1; // the P of "no prime factor <= P"
};

// Streams (n, a_n, least prime factor, is_prime) for every 1 <= n <= n_max in
// increasing order.  lpf(1) is reported as 0.
void an_stream_full(const CurveSeed& seed, const ReductionData& red, u64 n_max,
                    const std::function<void(u64, i64, u64, bool)>& sink);

// Mode-filtered stream per the public stream spec.
void an_stream(const CurveSeed& seed, const ReductionData& red, const CoefficientStreamSpec& spec,
               const std::function<void(u64, i64)>& sink);

} // namespace murm

#endif
