#include "sgp/pfd.hpp"

#include <algorithm>

namespace sgp {

namespace {

void require_ideals(const RelativeIdeal& i, const RelativeIdeal& j) {
  if (!(i.parent() == j.parent()))
    fail("ParentMismatch", "PF^d needs ideals of one semigroup");
  if (!i.is_ideal() || !j.is_ideal())
    fail("NotAnIdeal", "PF^d needs ideals, not relative ideals");
}

// Members of `a` missing from `b`, for b ⊆ a; finite since above tail(b)
// the two sets agree.
std::vector<Int> set_minus_nested(const ZSet& a, const ZSet& b) {
  std::vector<Int> out;
  for (Int z : a.in_window(a.min(), *b.tail()))
    if (!b.contains(z)) out.push_back(z);
  return out;
}

}  // namespace

PFLevelSet pf_level(const RelativeIdeal& i, const RelativeIdeal& j, Int d) {
  require_ideals(i, j);
  if (d < 1) fail("NonPositiveDivisor", "pf_level requires d >= 1");
  RelativeIdeal far = difference(i, fold_sum_set(j, d));
  RelativeIdeal near = difference(i, fold_sum_set(j, d - 1));
  return {d, set_minus_nested(far.set(), near.set())};
}

RelativeIdeal pf_level_zero(const RelativeIdeal& i) { return i; }

Pf2MedIdentity pf2_med_identity(const NumericalSemigroup& s) {
  Pf2MedIdentity out;
  out.lhs = pf_level(s.as_ideal(), s.maximal_ideal(), 2).values;
  Int m = s.multiplicity();
  for (Int e : s.minimal_generators()) out.rhs.push_back(e - 2 * m);
  std::sort(out.rhs.begin(), out.rhs.end());
  out.holds = out.lhs == out.rhs;
  return out;
}

PfConvergence pf_convergence(const RelativeIdeal& i, const RelativeIdeal& j, Int cap) {
  require_ideals(i, j);
  if (!j.is_proper()) fail("NotProperIdeal", "pf_convergence needs a proper ideal");
  Int mu = j.min();

  RelativeIdeal fold = j;
  Int h0 = 0;
  for (Int h = 1; h <= cap; ++h) {
    RelativeIdeal next = sumset(fold, j);
    if (next.set() == fold.set().translated(mu)) {
      h0 = h;
      break;
    }
    fold = next;
  }
  if (h0 == 0) fail("CapExceeded", "fold translation identity not reached within the cap");

  // |PF^d| == mu for every d > h0; walk d0 back while it already matches.
  Int d0 = h0 + 1;
  for (Int d = h0; d >= 1; --d) {
    if (static_cast<Int>(pf_level(i, j, d).values.size()) == mu)
      d0 = d;
    else
      break;
  }
  return {d0, mu};
}

}  // namespace sgp
