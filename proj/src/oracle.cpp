#include "sgp/oracle.hpp"

#include <algorithm>
#include <set>

namespace sgp::oracle {

namespace {

// Lexicographically descending enumeration of non-increasing tuples over a
// descending pool; `body` returns false to stop.
template <typename Body>
bool each_tuple_desc(const std::vector<Int>& pool_desc, size_t n, std::vector<Int>& tuple,
                     size_t pos, size_t min_index, Body&& body) {
  if (pos == n) return body(tuple);
  for (size_t j = min_index; j < pool_desc.size(); ++j) {
    tuple[pos] = pool_desc[j];
    if (!each_tuple_desc(pool_desc, n, tuple, pos + 1, j, body)) return false;
  }
  return true;
}

template <typename Body>
void for_each_tuple(const std::vector<Int>& members_ascending, size_t n, Body&& body) {
  std::vector<Int> pool(members_ascending.rbegin(), members_ascending.rend());
  std::vector<Int> tuple(n);
  each_tuple_desc(pool, n, tuple, 0, 0, body);
}

}  // namespace

std::vector<Int> brute_semigroup(std::span<const Int> gens, Int bound) {
  std::set<Int> members = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Int> snapshot(members.begin(), members.end());
    for (Int a : snapshot)
      for (Int g : gens) {
        if (a + g <= bound && !members.count(a + g)) {
          members.insert(a + g);
          grew = true;
        }
      }
  }
  return {members.begin(), members.end()};
}

BruteImage brute_image(const LinearPattern& p, const ZSet& domain, Int bound) {
  std::set<Int> values;
  std::vector<Int> pool = domain.below(bound + 1);
  for_each_tuple(pool, static_cast<size_t>(p.length()), [&](const std::vector<Int>& t) {
    values.insert(p.evaluate(t));
    return true;
  });
  BruteImage out;
  out.values.assign(values.begin(), values.end());
  out.complete_below = bound + p.constant() + 1;
  return out;
}

BruteAdmission brute_admits(const LinearPattern& p, const ZSet& domain, const ZSet& codomain,
                            Int bound) {
  BruteAdmission out;
  out.holds_up_to_bound = true;
  std::vector<Int> pool = domain.below(bound + 1);
  for_each_tuple(pool, static_cast<size_t>(p.length()), [&](const std::vector<Int>& t) {
    if (!codomain.contains(p.evaluate(t))) {
      out.holds_up_to_bound = false;
      out.witness = t;
      return false;
    }
    return true;
  });
  return out;
}

BruteAdmission brute_admits(const PolynomialPattern& p, const ZSet& domain,
                            const ZSet& codomain, Int bound) {
  BruteAdmission out;
  out.holds_up_to_bound = true;
  std::vector<Int> pool = domain.below(bound + 1);
  for_each_tuple(pool, static_cast<size_t>(p.length()), [&](const std::vector<Int>& t) {
    if (!codomain.contains(p.evaluate(t))) {
      out.holds_up_to_bound = false;
      out.witness = t;
      return false;
    }
    return true;
  });
  return out;
}

std::vector<Int> brute_closure(const LinearPattern& p, const ZSet& domain, Int bound) {
  std::set<Int> members;
  for (Int z : domain.below(bound + 1)) members.insert(z);
  Int lo = members.empty() ? 0 : *members.begin();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Int> snapshot(members.begin(), members.end());
    for_each_tuple(snapshot, static_cast<size_t>(p.length()), [&](const std::vector<Int>& t) {
      Int v = p.evaluate(t);
      if (v >= lo && v <= bound && !members.count(v)) {
        members.insert(v);
        grew = true;
      }
      return true;
    });
  }
  return {members.begin(), members.end()};
}

}  // namespace sgp::oracle
