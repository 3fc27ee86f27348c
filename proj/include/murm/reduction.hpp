#ifndef MURM_REDUCTION_HPP
#define MURM_REDUCTION_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "murm/curves.hpp"
#include "murm/weierstrass.hpp"

namespace murm {

enum class RedKind { good, split_mult, nonsplit_mult, additive };

const char* kind_name(RedKind k);

enum class Kodaira { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

const char* kodaira_name(Kodaira t, int n);

// Fast translation-free classification of the reduction of E_{A,B} at p,
// including the Frobenius trace when it is cheap (p in {2,3}, or bad p).
// For good reduction at p >= 5 the trace is left to the point-counting code.
struct LocalClass {
    RedKind kind = RedKind::good;
    int a_small = 0;   // a_p for p in {2,3}; +-1 for multiplicative; 0 additive
    bool a_known = false;
};

LocalClass local_class(i64 A, i64 B, u64 p);

// Is there an integral Weierstrass model over Z_p with invariants (c4, c6)?
// Only meaningful at p = 2, 3 (always true for p >= 5).
bool kraus_exists(const BigInt& c4, const BigInt& c6, u64 p);

// A model over Z_p with invariants (c4, c6), reduced mod p.  Requires
// kraus_exists.  p in {2,3}.
WModel kraus_model_mod_p(const BigInt& c4, const BigInt& c6, u64 p);

struct LocalReduction {
    u64 p = 0;
    RedKind kind = RedKind::good;
    int f = 0;            // conductor exponent
    Kodaira type = Kodaira::I0;
    int n = 0;            // v_p(disc_min); index for In / In*
    bool split = false;   // multiplicative only
    int vc4 = 0, vc6 = 0; // valuations of minimal invariants (99 = infinity)
    BigInt c4m, c6m, discm;
    int u_scalings = 0;   // how many p-scalings minimality took
};

// Full local data at p via Tate's algorithm (p = 2, 3 and small p), or the
// closed-form classification for p >= 5.
LocalReduction tate_local(const CurveSeed& seed, u64 p);

// Literal Tate walk regardless of p (search-based steps; p must be small).
// Used to cross-check the closed-form path.
LocalReduction tate_local_generic(const WModel& start, u64 p);

struct GlobalInvariants {
    i64 N = 1;
    int eps = 1;
    std::vector<LocalReduction> locals; // bad primes, ascending
};

i64 conductor(const CurveSeed& seed);
GlobalInvariants global_invariants(const CurveSeed& seed);
bool is_prime_conductor(const CurveSeed& seed);

// Local root number of a bad place.  p >= 5 is closed-form; p = 2, 3
// additive places use the vendored classification table.
int local_root_number(const LocalReduction& L);

// eps(E) = -prod w_p over bad p.
int root_number(const CurveSeed& seed, const std::vector<LocalReduction>& locals);

// Classification table for additive reduction at p = 2, 3, keyed on capped
// valuations and unit residues of the minimal (c4, c6, disc).
class RootNumberTable {
public:
    static const RootNumberTable& instance();
    int lookup(const LocalReduction& L) const;
    static u64 make_key(int vc4, int vc6, int vd, bool potmult, int c4u, int c6u, int du);
    size_t size(u64 p) const { return p == 2 ? w2_.size() : w3_.size(); }

private:
    RootNumberTable();
    std::unordered_map<u64, int> w2_, w3_;
};

// Data directory resolution: $MURM_DATA_DIR, else <source>/data.
std::string data_dir();

} // namespace murm

#endif
