#include "sgp/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgp {

// ---------------------------------------------------------------------------
// ZSet

void ZSet::normalize() {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (tail_) {
    while (!elements_.empty() && elements_.back() >= *tail_) elements_.pop_back();
    while (!elements_.empty() && elements_.back() == *tail_ - 1) {
      elements_.pop_back();
      --*tail_;
    }
  }
}

ZSet ZSet::finite(std::vector<Int> elements) {
  ZSet s;
  s.elements_ = std::move(elements);
  s.normalize();
  return s;
}

ZSet ZSet::with_tail(std::vector<Int> elements, Int tail) {
  ZSet s;
  s.elements_ = std::move(elements);
  s.tail_ = tail;
  s.normalize();
  return s;
}

bool ZSet::contains(Int z) const {
  if (tail_ && z >= *tail_) return true;
  return std::binary_search(elements_.begin(), elements_.end(), z);
}

Int ZSet::min() const {
  if (!elements_.empty()) return elements_.front();
  if (tail_) return *tail_;
  fail("EmptyIdeal", "min of the empty set");
}

std::vector<Int> ZSet::in_window(Int lo, Int hi) const {
  std::vector<Int> out;
  for (Int e : elements_)
    if (e >= lo && e < hi) out.push_back(e);
  if (tail_)
    for (Int z = std::max(lo, *tail_); z < hi; ++z) out.push_back(z);
  return out;
}

bool ZSet::subset_of(const ZSet& other) const {
  if (tail_) {
    // the normalized tail of `other` is sharp: other omits other.tail-1
    if (!other.tail_ || *tail_ < *other.tail_) return false;
  }
  for (Int e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

ZSet ZSet::translated(Int k) const {
  ZSet s = *this;
  for (Int& e : s.elements_) e += k;
  if (s.tail_) *s.tail_ += k;
  return s;
}

// ---------------------------------------------------------------------------
// NumericalSemigroup

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
  if (gens.empty()) fail("GcdNotOne", "empty generator set");
  Int g = 0, maxg = 0, ming = 0;
  for (Int a : gens) {
    if (a <= 0) fail("GcdNotOne", "generators must be positive, got " + std::to_string(a));
    g = std::gcd(g, a);
    maxg = std::max(maxg, a);
    ming = ming == 0 ? a : std::min(ming, a);
  }
  if (g != 1)
    fail("GcdNotOne", "gcd of generators is " + std::to_string(g) +
                          "; the generated set is not cofinite");

  // Close under addition up to a bound, then read the conductor off as the
  // start of the first run of m consecutive members; grow the bound if no
  // run exists yet (cannot happen for a coprime set below maxg^2 + m, but
  // the loop makes correctness independent of that estimate).
  Int bound = maxg * maxg + ming + 1;
  for (;;) {
    std::vector<char> member(static_cast<size_t>(bound) + 1, 0);
    member[0] = 1;
    for (Int z = 0; z <= bound; ++z) {
      if (!member[static_cast<size_t>(z)]) continue;
      for (Int a : gens)
        if (z + a <= bound) member[static_cast<size_t>(z + a)] = 1;
    }
    for (Int c = 0; c + ming - 1 <= bound; ++c) {
      bool run = true;
      for (Int z = c; z < c + ming; ++z)
        if (!member[static_cast<size_t>(z)]) {
          run = false;
          break;
        }
      if (!run) continue;
      std::vector<Int> small;
      for (Int z = 0; z < c; ++z)
        if (member[static_cast<size_t>(z)]) small.push_back(z);
      return NumericalSemigroup(std::move(small), c);
    }
    bound *= 2;
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> gens) {
  return from_generators(std::span<const Int>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::from_members(const ZSet& members) {
  if (!members.cofinite()) fail("NotAnIdeal", "a numerical semigroup is cofinite");
  if (!members.contains(0)) fail("NotAnIdeal", "a numerical semigroup contains 0");
  if (members.min() < 0) fail("NotAnIdeal", "negative member");
  Int c = *members.tail();
  const auto& small = members.elements();
  for (Int a : small)
    for (Int b : small) {
      if (a + b >= c) break;
      if (!members.contains(a + b))
        fail("NotAnIdeal", "not closed under addition: " + std::to_string(a) + "+" +
                               std::to_string(b));
    }
  return NumericalSemigroup(small, c);
}

NumericalSemigroup NumericalSemigroup::ordinary(Int m) {
  if (m < 1) fail("NonPositiveDivisor", "ordinary semigroup needs m >= 1");
  if (m == 1) return NumericalSemigroup({}, 0);
  return NumericalSemigroup({0}, m);
}

bool NumericalSemigroup::contains(Int z) const {
  if (z < 0) return false;
  if (z >= conductor_) return true;
  return std::binary_search(small_.begin(), small_.end(), z);
}

Int NumericalSemigroup::multiplicity() const {
  if (small_.size() > 1) return small_[1];
  return conductor_ == 0 ? 1 : conductor_;
}

Int NumericalSemigroup::genus() const {
  return conductor_ - static_cast<Int>(small_.size());
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int z = 1; z < conductor_; ++z)
    if (!contains(z)) out.push_back(z);
  return out;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  // Minimal generators are the members of M(S) not expressible as a sum of
  // two members of M(S); all of them lie below tail(M) + m.
  Int m = multiplicity();
  Int tail_m = conductor_ == 0 ? 1 : conductor_;
  std::vector<Int> out;
  for (Int x = m; x < tail_m + m; ++x) {
    if (!contains(x)) continue;
    bool sum = false;
    for (Int a = m; a <= x - m && !sum; ++a)
      if (contains(a) && contains(x - a)) sum = true;
    if (!sum) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::pseudo_frobenius() const {
  if (conductor_ == 0) return {-1};
  Int m = multiplicity();
  std::vector<Int> out;
  for (Int x : gaps()) {
    bool pf = true;
    for (Int s = m; s < conductor_ - x && pf; ++s)
      if (contains(s) && !contains(x + s)) pf = false;
    if (pf) out.push_back(x);
  }
  return out;
}

NotableElements NumericalSemigroup::notable_elements() const {
  NotableElements n;
  n.multiplicity = multiplicity();
  n.frobenius = frobenius();
  n.conductor = conductor_;
  n.gaps = gaps();
  n.genus = static_cast<Int>(n.gaps.size());
  n.minimal_generators = minimal_generators();
  n.embedding_dimension = static_cast<Int>(n.minimal_generators.size());
  n.pseudo_frobenius = pseudo_frobenius();
  return n;
}

bool NumericalSemigroup::is_med() const {
  return static_cast<Int>(minimal_generators().size()) == multiplicity();
}

bool NumericalSemigroup::is_arf() const {
  for (size_t i = 0; i < small_.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (size_t k = 0; k <= j; ++k)
        if (!contains(small_[i] + small_[j] - small_[k])) return false;
  return true;
}

ZSet NumericalSemigroup::zset() const { return ZSet::with_tail(small_, conductor_); }

RelativeIdeal NumericalSemigroup::as_ideal() const {
  return RelativeIdeal::trusted(*this, zset());
}

RelativeIdeal NumericalSemigroup::maximal_ideal() const {
  std::vector<Int> elems(small_.begin(), small_.end());
  if (!elems.empty()) elems.erase(elems.begin());  // drop 0
  Int t = conductor_ == 0 ? 1 : conductor_;
  return RelativeIdeal::trusted(*this, ZSet::with_tail(std::move(elems), t));
}

// ---------------------------------------------------------------------------
// RelativeIdeal

RelativeIdeal RelativeIdeal::trusted(NumericalSemigroup parent, ZSet set) {
  bool ideal = set.min() >= 0 && set.subset_of(parent.zset());
  return RelativeIdeal(std::move(parent), std::move(set), ideal);
}

bool RelativeIdeal::is_proper() const { return ideal_ && set_ != parent_.zset(); }

bool RelativeIdeal::validate() const {
  if (!set_.cofinite() || set_.empty()) return false;
  Int t = tail();
  for (Int h : elements())
    for (Int s = 1; s < t - h; ++s)
      if (parent_.contains(s) && !set_.contains(h + s)) return false;
  return ideal_ == (set_.min() >= 0 && set_.subset_of(parent_.zset()));
}

RelativeIdeal ideal_from_elements(const NumericalSemigroup& parent,
                                  std::vector<Int> elements, Int tail) {
  ZSet set = ZSet::with_tail(std::move(elements), tail);
  if (set.empty()) fail("EmptyIdeal", "an ideal is non-empty");
  Int t = *set.tail();
  for (Int h : set.elements())
    for (Int s = 1; s < t - h; ++s)
      if (parent.contains(s) && !set.contains(h + s))
        fail("NotAnIdeal", "H + S is not contained in H: " + std::to_string(h) + "+" +
                               std::to_string(s) + " missing");
  return RelativeIdeal::trusted(parent, std::move(set));
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void check_parents(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.parent() == b.parent()))
    fail("ParentMismatch", "operands live over different semigroups");
}

ZSet sumset_sets(const ZSet& h, const ZSet& k) {
  if (h.empty() || k.empty()) fail("EmptyIdeal", "sumset of an empty set");
  // Everything at or above tail(H)+min(K) (resp. tail(K)+min(H)) is a sum.
  std::optional<Int> t;
  if (h.tail()) t = *h.tail() + k.min();
  if (k.tail()) {
    Int t2 = *k.tail() + h.min();
    t = t ? std::min(*t, t2) : t2;
  }
  std::vector<Int> sums;
  if (t) {
    for (Int a : h.below(*t - k.min()))
      for (Int b : k.below(*t - a)) sums.push_back(a + b);
    return ZSet::with_tail(std::move(sums), *t);
  }
  for (Int a : h.elements())
    for (Int b : k.elements()) sums.push_back(a + b);
  return ZSet::finite(std::move(sums));
}

ZSet difference_sets(const ZSet& i, const ZSet& k) {
  if (k.empty()) fail("EmptyIdeal", "difference by the empty set");
  if (i.empty() || !i.cofinite()) fail("EmptyIdeal", "difference into a non-cofinite set");
  Int ti = *i.tail();
  Int lo = i.min() - k.min();   // z + min(K) >= min(I) is necessary
  Int hi = ti - k.min();        // every z >= hi qualifies
  std::vector<Int> found;
  for (Int z = lo; z < hi; ++z) {
    bool ok = true;
    // only k with z + k < tail(I) can fail
    for (Int kk : k.below(ti - z)) {
      if (!i.contains(z + kk)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(z);
  }
  return ZSet::with_tail(std::move(found), hi);
}

}  // namespace

RelativeIdeal sumset(const RelativeIdeal& h, const RelativeIdeal& k) {
  check_parents(h, k);
  return RelativeIdeal::trusted(h.parent(), sumset_sets(h.set(), k.set()));
}

RelativeIdeal sumset(const RelativeIdeal& h, const ZSet& k) {
  return RelativeIdeal::trusted(h.parent(), sumset_sets(h.set(), k));
}

ZSet fold_sum_set(const RelativeIdeal& j, Int d) {
  if (d < 0) fail("NonPositiveDivisor", "fold count must be non-negative");
  if (d == 0) return ZSet::finite({0});
  ZSet acc = j.set();
  for (Int i = 1; i < d; ++i) acc = sumset_sets(acc, j.set());
  return acc;
}

RelativeIdeal fold_sum(const RelativeIdeal& j, Int d) {
  if (d < 1) fail("NonPositiveDivisor", "fold_sum requires d >= 1; the empty sum {0} is fold_sum_set(j, 0)");
  return RelativeIdeal::trusted(j.parent(), fold_sum_set(j, d));
}

RelativeIdeal difference(const RelativeIdeal& i, const RelativeIdeal& k) {
  check_parents(i, k);
  return RelativeIdeal::trusted(i.parent(), difference_sets(i.set(), k.set()));
}

RelativeIdeal difference(const RelativeIdeal& i, const ZSet& k) {
  return RelativeIdeal::trusted(i.parent(), difference_sets(i.set(), k));
}

RelativeIdeal dual(const RelativeIdeal& h) {
  return difference(h.parent().as_ideal(), h);
}

RelativeIdeal translate(const RelativeIdeal& h, Int k) {
  return RelativeIdeal::trusted(h.parent(), h.set().translated(k));
}

NumericalSemigroup quotient(const NumericalSemigroup& s, Int d) {
  if (d < 1) fail("NonPositiveDivisor", "quotient requires d >= 1");
  Int c = s.conductor();
  Int t = (c + d - 1) / d;  // dx >= c from x >= ceil(c/d)
  std::vector<Int> members;
  for (Int x = 0; x < t; ++x)
    if (s.contains(d * x)) members.push_back(x);
  return NumericalSemigroup::from_members(ZSet::with_tail(std::move(members), t));
}

LipmanResult lipman(const NumericalSemigroup& s, const RelativeIdeal& j) {
  if (!(j.parent() == s) || !j.is_proper())
    fail("NotProperIdeal", "lipman requires a proper ideal of s");
  Int mu = j.min();
  RelativeIdeal cur = j;
  for (Int h = 1; h <= 512; ++h) {
    RelativeIdeal next = sumset(cur, j);
    if (next.set() == cur.set().translated(mu)) {
      RelativeIdeal l = difference(cur, cur);
      return {NumericalSemigroup::from_members(l.set()), h};
    }
    cur = next;
  }
  fail("MaxIterExceeded", "lipman iteration did not stabilize");
}

}  // namespace sgp
