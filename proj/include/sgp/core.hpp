#pragma once

// Numerical semigroups, relative ideals and their arithmetic.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgp/errors.hpp"

namespace sgp {

using Int = std::int64_t;

/// Set of integers of the form `elements ∪ {z : z >= tail}`.  The tail is
/// optional; without it the set is plain finite.  Normal form: elements
/// sorted, unique, all below the tail, and the tail minimal (tail-1 is not
/// a member).
class ZSet {
public:
  ZSet() = default;

  static ZSet finite(std::vector<Int> elements);
  static ZSet with_tail(std::vector<Int> elements, Int tail);

  bool cofinite() const { return tail_.has_value(); }
  std::optional<Int> tail() const { return tail_; }
  const std::vector<Int>& elements() const { return elements_; }

  bool empty() const { return elements_.empty() && !tail_; }
  bool contains(Int z) const;
  Int min() const;  // throws EmptyIdeal on the empty set

  /// Members in the half-open window [lo, hi), ascending.
  std::vector<Int> in_window(Int lo, Int hi) const;
  /// Members below `hi`, starting at min(), ascending.
  std::vector<Int> below(Int hi) const { return empty() ? std::vector<Int>{} : in_window(min(), hi); }

  bool subset_of(const ZSet& other) const;
  ZSet translated(Int k) const;

  friend bool operator==(const ZSet&, const ZSet&) = default;

private:
  std::vector<Int> elements_;
  std::optional<Int> tail_;

  void normalize();
};

struct NotableElements {
  Int multiplicity = 0;
  Int frobenius = 0;  // -1 for the full semigroup Z+
  Int conductor = 0;
  Int genus = 0;
  std::vector<Int> gaps;
  std::vector<Int> minimal_generators;
  Int embedding_dimension = 0;
  std::vector<Int> pseudo_frobenius;  // {-1} for Z+, so max(PF) == frobenius stays total
};

class RelativeIdeal;

/// Cofinite subset of Z+ containing 0 and closed under addition.  Stored as
/// the members below the conductor plus the conductor itself.
///
/// Convention for S = Z+: conductor 0 and Frobenius element -1, which keeps
/// c = F + 1 total; likewise PF(Z+) = {-1}.
class NumericalSemigroup {
public:
  /// Smallest semigroup containing the generators.  GcdNotOne unless the
  /// generators are coprime as a set.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens);

  /// Validates that `members` is a numerical semigroup.
  static NumericalSemigroup from_members(const ZSet& members);

  /// The ordinary semigroup {0, m, m+1, ...}.
  static NumericalSemigroup ordinary(Int m);

  static NumericalSemigroup integers() { return ordinary(1); }

  bool contains(Int z) const;

  Int conductor() const { return conductor_; }
  Int frobenius() const { return conductor_ - 1; }
  Int multiplicity() const;
  Int genus() const;
  const std::vector<Int>& small_elements() const { return small_; }
  bool is_integers() const { return conductor_ == 0; }

  std::vector<Int> gaps() const;
  std::vector<Int> minimal_generators() const;
  std::vector<Int> pseudo_frobenius() const;
  NotableElements notable_elements() const;

  /// Minimal generator count equals the multiplicity.
  bool is_med() const;
  /// x + y - z lands in S for all members x >= y >= z.  Only triples of
  /// small elements need checking: x >= c forces x + y - z >= x >= c.
  bool is_arf() const;

  RelativeIdeal as_ideal() const;
  RelativeIdeal maximal_ideal() const;

  ZSet zset() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
  NumericalSemigroup(std::vector<Int> small, Int conductor)
      : small_(std::move(small)), conductor_(conductor) {}

  std::vector<Int> small_;  // members strictly below conductor_
  Int conductor_ = 0;
};

/// H ⊆ Z with H + S ⊆ H, stored as parent plus a cofinite ZSet.  Ideal-ness
/// (H ⊆ S) is classified at construction and queryable.
class RelativeIdeal {
public:
  const NumericalSemigroup& parent() const { return parent_; }
  const ZSet& set() const { return set_; }

  const std::vector<Int>& elements() const { return set_.elements(); }
  Int tail() const { return *set_.tail(); }
  Int min() const { return set_.min(); }
  bool contains(Int z) const { return set_.contains(z); }

  bool is_ideal() const { return ideal_; }
  bool is_proper() const;  // ideal and distinct from the parent

  friend bool operator==(const RelativeIdeal&, const RelativeIdeal&) = default;

  /// Unchecked constructor for results whose ideal property is implied by
  /// the operation that produced them.
  static RelativeIdeal trusted(NumericalSemigroup parent, ZSet set);

  /// Re-runs the construction-time checks; used by property tests.
  bool validate() const;

private:
  RelativeIdeal(NumericalSemigroup parent, ZSet set, bool ideal)
      : parent_(std::move(parent)), set_(std::move(set)), ideal_(ideal) {}

  friend RelativeIdeal ideal_from_elements(const NumericalSemigroup&, std::vector<Int>, Int);

  NumericalSemigroup parent_;
  ZSet set_;
  bool ideal_ = false;
};

/// An ideal is a relative ideal contained in its parent; the distinction is
/// the is_ideal() classification, not a separate type.
using Ideal = RelativeIdeal;

/// Normalizes `elements ∪ {z >= tail}` and checks H + S ⊆ H (NotAnIdeal
/// otherwise).  Classifies the result as an ideal when H ⊆ S.
RelativeIdeal ideal_from_elements(const NumericalSemigroup& parent,
                                  std::vector<Int> elements, Int tail);

RelativeIdeal sumset(const RelativeIdeal& h, const RelativeIdeal& k);
RelativeIdeal sumset(const RelativeIdeal& h, const ZSet& k);

/// d-fold sumset J + ... + J.  The empty sum (d = 0) is the singleton {0},
/// which is not itself a relative ideal; fold_sum_set returns it as a plain
/// set while fold_sum requires d >= 1.
ZSet fold_sum_set(const RelativeIdeal& j, Int d);
RelativeIdeal fold_sum(const RelativeIdeal& j, Int d);

/// (I - K) = {z : z + K ⊆ I}.
RelativeIdeal difference(const RelativeIdeal& i, const RelativeIdeal& k);
RelativeIdeal difference(const RelativeIdeal& i, const ZSet& k);

/// Dual H* = (S - H).
RelativeIdeal dual(const RelativeIdeal& h);

RelativeIdeal translate(const RelativeIdeal& h, Int k);

/// {x in Z+ : dx in S}; NonPositiveDivisor unless d >= 1.
NumericalSemigroup quotient(const NumericalSemigroup& s, Int d);

struct LipmanResult {
  NumericalSemigroup semigroup;
  Int h0 = 0;
};

/// Iterates h-fold sums of a proper ideal J until (h+1)J = hJ + min(J) and
/// returns (hJ - hJ) together with that h.
LipmanResult lipman(const NumericalSemigroup& s, const RelativeIdeal& j);

}  // namespace sgp
