#pragma once

// Generalized pseudo-Frobenius level sets PF^d(I,J) and their convergence.

#include <vector>

#include "sgp/core.hpp"

namespace sgp {

/// PF^d(I,J) = (I - dJ) \ (I - (d-1)J); finite since both differences share
/// a tail.
struct PFLevelSet {
  Int d = 1;
  std::vector<Int> values;

  friend bool operator==(const PFLevelSet&, const PFLevelSet&) = default;
};

/// Level set for d >= 1; the empty sum convention (I - 0J) = I makes
/// PF^1(S, M(S)) the classical pseudo-Frobenius set.
PFLevelSet pf_level(const RelativeIdeal& i, const RelativeIdeal& j, Int d);

/// PF^0(S,J) may be taken to be S itself; kept behind its own entry point
/// rather than a d == 0 case since the result is not finite.
RelativeIdeal pf_level_zero(const RelativeIdeal& i);

struct Pf2MedIdentity {
  bool holds = false;
  std::vector<Int> lhs;  // PF^2(S, M(S))
  std::vector<Int> rhs;  // minimal generators shifted by -2m(S)
};

/// Compares PF^2(S,M(S)) against E(S) - 2m(S); they agree whenever S has
/// maximal embedding dimension.  Reported as a plain comparison for any S.
Pf2MedIdentity pf2_med_identity(const NumericalSemigroup& s);

struct PfConvergence {
  Int d0 = 0;                 // |PF^d| == stable_cardinality for all d >= d0
  Int stable_cardinality = 0; // min(J)
};

/// Certifies convergence via the fold translation identity
/// (h+1)J == hJ + min(J), which persists once it holds; d0 is then walked
/// back while the cardinality already matches.  CapExceeded if the identity
/// is not reached within `cap` folds.
PfConvergence pf_convergence(const RelativeIdeal& i, const RelativeIdeal& j, Int cap = 32);

}  // namespace sgp
