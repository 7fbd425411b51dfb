#pragma once

// Admission decisions, image computation, endopattern predicates, closures
// and image chains.
//
// The tuple scans behind admits() and image() are data-parallel over the
// leading coordinate; Exec selects the OpenMP kernel, the serial reference
// kernel, or a size-based choice.  Both kernels produce identical results
// (merged as sorted set unions), so the choice never changes output.

#include <optional>
#include <vector>

#include "sgp/core.hpp"
#include "sgp/pattern.hpp"

namespace sgp {

enum class Exec { Auto, Serial, Parallel };

/// d * (elements ∪ {z >= tail}) + shift.  scale is the coefficient gcd of
/// the pattern that produced the image; shift is folded into the set
/// whenever scale == 1, so it only survives for non-homogeneous patterns
/// with gcd > 1.
struct TailSet {
  Int scale = 1;
  Int shift = 0;
  ZSet set;

  bool contains(Int z) const {
    Int w = z - shift;
    if (w % scale != 0) return false;
    return set.contains(w / scale);
  }

  /// The set itself when scale == 1; ArityMismatch otherwise.
  ZSet plain() const;

  friend bool operator==(const TailSet&, const TailSet&) = default;
};

/// True iff p lands in `codomain` on every non-increasing tuple from I.
/// Decision procedure for strongly admissible p: tuples whose first entry
/// is at least tail(codomain) - a0 are automatic since p(s) >= s1 + a0.
bool admits(const LinearPattern& p, const RelativeIdeal& i, const ZSet& codomain,
            Exec exec = Exec::Auto);
bool admits(const LinearPattern& p, const RelativeIdeal& i, const NumericalSemigroup& codomain,
            Exec exec = Exec::Auto);
bool admits(const LinearPattern& p, const RelativeIdeal& i, const RelativeIdeal& codomain,
            Exec exec = Exec::Auto);

struct BoundedAdmission {
  bool holds_up_to_bound = false;
  std::optional<std::vector<Int>> witness;  // a refuting tuple, when found
};

/// Semi-decision for arbitrary patterns: checks every non-increasing tuple
/// with entries from I up to `bound`.
BoundedAdmission admits_bounded(const PolynomialPattern& p, const RelativeIdeal& i,
                                const ZSet& codomain, Int bound);

/// Smallest mu <= cap such that the ordinary semigroup {0, mu, ->} admits p
/// (domain M({0,mu,->}) for non-homogeneous p, the semigroup itself for
/// homogeneous p).  CapExceeded past the cap.
Int mu_admissible(const LinearPattern& p, Int cap = 64);

/// Exact image p(I) for p with strongly admissible homogeneous part.
TailSet image(const LinearPattern& p, const RelativeIdeal& i, Exec exec = Exec::Auto);

/// Image as a plain set; requires coefficient gcd 1 so that scale == 1.
ZSet image_set(const LinearPattern& p, const ZSet& domain, Exec exec = Exec::Auto);

/// p maps non-increasing tuples of I into I.  Uses the sharp inequality on
/// a0 and the coefficient total when I is the maximal ideal, and the
/// admission scan otherwise.
bool is_endopattern(const LinearPattern& p, const RelativeIdeal& i, Exec exec = Exec::Auto);

/// image(p, I) == I, with the necessary-condition fast paths on a0.
bool is_surjective_endopattern(const LinearPattern& p, const RelativeIdeal& i,
                               Exec exec = Exec::Auto);

/// Smallest ideal containing I that admits p, computed as the stabilizing
/// chain I, p(I), p(p(I)), ...  Requires p premonic with
/// a0 == -(sum(a_i) - 1) * min(I).  The result is returned over the
/// stabilizer semigroup of the fixed point.
Ideal closure(const LinearPattern& p, const RelativeIdeal& i, Int max_iter = 64,
              Exec exec = Exec::Auto);

struct ImageChain {
  std::vector<NumericalSemigroup> semigroups;  // S, p(S), p(p(S)), ...
  bool stabilized = false;                     // chain constant from the start
};

/// k successive images of S under a homogeneous gcd-1 pattern admitted by S.
ImageChain image_chain(const LinearPattern& p, const NumericalSemigroup& s, Int k,
                       Exec exec = Exec::Auto);

}  // namespace sgp
