#pragma once

// Brute-force reference implementations for differential testing.  These
// share no code with the fast paths: sets are plain sorted vectors, tuples
// are enumerated lexicographically descending, and every pattern value goes
// through evaluate().  Single-threaded on purpose.

#include <optional>
#include <vector>

#include "sgp/core.hpp"
#include "sgp/pattern.hpp"

namespace sgp::oracle {

/// Members of <gens> up to and including `bound`.
std::vector<Int> brute_semigroup(std::span<const Int> gens, Int bound);

struct BruteImage {
  std::vector<Int> values;  // {p(s) : s non-increasing, entries in I, entries <= bound}
  Int complete_below;       // values below this threshold are exhaustive
};

/// Image by exhaustion over tuples with entries up to `bound`.  For
/// strongly admissible p every value v has a witness tuple with s1 <=
/// v - a0, so the result is exhaustive below bound + a0.
BruteImage brute_image(const LinearPattern& p, const ZSet& domain, Int bound);

struct BruteAdmission {
  bool holds_up_to_bound = false;
  std::optional<std::vector<Int>> witness;
};

BruteAdmission brute_admits(const LinearPattern& p, const ZSet& domain, const ZSet& codomain,
                            Int bound);
BruteAdmission brute_admits(const PolynomialPattern& p, const ZSet& domain,
                            const ZSet& codomain, Int bound);

/// Repeatedly adjoins image values within [min(I), bound] until stable;
/// returns the stabilized member list.
std::vector<Int> brute_closure(const LinearPattern& p, const ZSet& domain, Int bound);

}  // namespace sgp::oracle
