#include "murm/frobenius.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "murm/gfp.hpp"
#include "murm/primes.hpp"

namespace murm {

ReductionData make_reduction_data(const CurveSeed& seed, const GlobalInvariants& g) {
    ReductionData rd;
    rd.N = g.N;
    rd.eps = g.eps;
    for (const auto& L : g.locals) {
        if (L.kind == RedKind::good) continue;
        int ap = L.kind == RedKind::split_mult ? 1 : (L.kind == RedKind::nonsplit_mult ? -1 : 0);
        rd.ap_fixed[L.p] = {ap, L.kind};
    }
    for (u64 p : {2ull, 3ull}) {
        if (rd.ap_fixed.count(p)) continue;
        LocalClass lc = local_class(seed.A, seed.B, p);
        rd.ap_fixed[p] = {lc.a_small, lc.kind};
    }
    return rd;
}

ReductionData make_reduction_data(const CurveSeed& seed) {
    return make_reduction_data(seed, global_invariants(seed));
}

int ap_naive(const CurveSeed& seed, u64 p) {
    if (p > kNaiveBudget) throw std::domain_error("ap_naive: prime exceeds naive budget");
    LocalClass lc = local_class(seed.A, seed.B, p);
    if (lc.kind != RedKind::good) throw std::domain_error("ap_naive: not good reduction");
    if (p <= 3) return lc.a_small;
    u64 A = (u64)(((seed.A % (i64)p) + (i64)p) % (i64)p);
    u64 B = (u64)(((seed.B % (i64)p) + (i64)p) % (i64)p);
    i64 t = trace_naive(p, A, B);
    return (int)t;
}

int ap_bsgs(const CurveSeed& seed, u64 p) {
    LocalClass lc = local_class(seed.A, seed.B, p);
    if (lc.kind != RedKind::good) throw std::domain_error("ap_bsgs: not good reduction");
    if (p <= 3) return lc.a_small;
    u64 A = (u64)(((seed.A % (i64)p) + (i64)p) % (i64)p);
    u64 B = (u64)(((seed.B % (i64)p) + (i64)p) % (i64)p);
    u64 order = ec_group_order_bsgs(p, A, B);
    return (int)((i64)p + 1 - (i64)order);
}

int ap_auto(const CurveSeed& seed, u64 p) {
    LocalClass lc = local_class(seed.A, seed.B, p);
    if (lc.kind != RedKind::good || p <= 3) return lc.a_small;
    return p <= kBsgsCutoff ? ap_naive(seed, p) : ap_bsgs(seed, p);
}

i64 a_prime_power(i64 ap, u64 p, int k, RedKind kind) {
    if (k < 0) throw std::domain_error("a_prime_power: negative exponent");
    if (k == 0) return 1;
    if (kind != RedKind::good) {
        // bad reduction: a_{p^k} = a_p^k with a_p in {-1,0,1}
        if (ap == 0) return 0;
        return (ap == 1 || k % 2 == 0) ? 1 : -1;
    }
    i128 prev = 1, cur = ap;
    for (int i = 2; i <= k; ++i) {
        i128 next = (i128)ap * cur - (i128)p * prev;
        prev = cur;
        cur = next;
    }
    if (cur > (i128)INT64_MAX || cur < (i128)INT64_MIN)
        throw std::overflow_error("a_prime_power overflow");
    return (i64)cur;
}

void an_stream_full(const CurveSeed& seed, const ReductionData& red, u64 n_max,
                    const std::function<void(u64, i64, u64, bool)>& sink) {
    if (n_max < 1) return;
    sink(1, 1, 0, false);
    if (n_max == 1) return;

    const u64 sqn = isqrt(n_max);
    auto primes = primes_up_to(sqn);

    // a_{p^v} tables for p <= sqrt(n_max)
    std::vector<std::vector<i64>> pow_tab(primes.size());
    for (size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        int ap;
        RedKind kind = RedKind::good;
        auto it = red.ap_fixed.find(p);
        if (it != red.ap_fixed.end()) {
            ap = it->second.first;
            kind = it->second.second;
        } else {
            ap = p <= kBsgsCutoff ? ap_naive(seed, p) : ap_bsgs(seed, p);
        }
        int vmax = 0;
        u64 q = 1;
        while (q <= n_max / p) { q *= p; ++vmax; }
        pow_tab[i].resize(vmax + 1);
        for (int v = 0; v <= vmax; ++v) pow_tab[i][v] = a_prime_power(ap, p, v, kind);
    }

    auto big_prime_ap = [&](u64 p) -> i64 {
        auto it = red.ap_fixed.find(p);
        if (it != red.ap_fixed.end()) return it->second.first;
        return p <= kBsgsCutoff ? ap_naive(seed, p) : ap_bsgs(seed, p);
    };

    std::unordered_map<u64, i64> big_ap_memo;

    const u64 kSegment = 1ull << 22;
    std::vector<u64> rem(std::min(kSegment, n_max));
    std::vector<i64> acc(rem.size());
    std::vector<u64> lpf(rem.size());

    for (u64 lo = 2; lo <= n_max; lo += rem.size()) {
        u64 hi = std::min(lo + rem.size() - 1, n_max);
        u64 len = hi - lo + 1;
        for (u64 i = 0; i < len; ++i) {
            rem[i] = lo + i;
            acc[i] = 1;
            lpf[i] = 0;
        }
        for (size_t pi = 0; pi < primes.size(); ++pi) {
            u64 p = primes[pi];
            u64 start = (lo + p - 1) / p * p;
            for (u64 m = start; m <= hi; m += p) {
                u64 i = m - lo;
                int v = 0;
                while (rem[i] % p == 0) { rem[i] /= p; ++v; }
                acc[i] *= pow_tab[pi][v];
                if (lpf[i] == 0) lpf[i] = p;
            }
        }
        for (u64 i = 0; i < len; ++i) {
            u64 n = lo + i;
            i64 an = acc[i];
            if (rem[i] > 1) {
                u64 P = rem[i];
                if (P == n) {
                    i64 aP = big_prime_ap(P);
                    big_ap_memo.emplace(P, aP);
                    an *= aP;
                } else {
                    auto it = big_ap_memo.find(P);
                    if (it == big_ap_memo.end()) throw std::logic_error("an_stream: missing a_P");
                    an *= it->second;
                }
                if (lpf[i] == 0) lpf[i] = P;
            }
            sink(n, an, lpf[i], lpf[i] == n);
        }
    }
}

void an_stream(const CurveSeed& seed, const ReductionData& red, const CoefficientStreamSpec& spec,
               const std::function<void(u64, i64)>& sink) {
    an_stream_full(seed, red, spec.n_max, [&](u64 n, i64 an, u64 lpf, bool isp) {
        switch (spec.mode) {
            case StreamMode::all: break;
            case StreamMode::coprime_to:
                if (n != 1 && lpf <= spec.coprime_bound) return;
                break;
            case StreamMode::primes_only:
                if (!isp) return;
                break;
        }
        sink(n, an);
    });
}

} // namespace murm
