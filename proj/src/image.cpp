#include "sgp/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgp {

namespace {

void require_strongly_admissible(const LinearPattern& p) {
  if (!p.classify().strongly_admissible)
    fail("NotStronglyAdmissible",
         "the decision procedure needs all partial coefficient sums >= 1");
}

// Non-increasing tuples over `pool` with coordinates pos..n-1 indexed at
// most max_index; accumulates the linear value and hands every complete
// tuple's value to `body`, which returns false to abort the scan.
template <typename Body>
bool scan_rest(const std::vector<Int>& pool, const std::vector<Int>& coeffs, size_t pos,
               size_t max_index, Int acc, Body&& body) {
  if (pos == coeffs.size()) return body(acc);
  for (size_t j = 0; j <= max_index; ++j)
    if (!scan_rest(pool, coeffs, pos + 1, j, acc + coeffs[pos] * pool[j], body)) return false;
  return true;
}

template <typename Body>
bool scan_from(const std::vector<Int>& pool, const std::vector<Int>& coeffs, Int constant,
               size_t first_index, Body&& body) {
  return scan_rest(pool, coeffs, 1, first_index, constant + coeffs[0] * pool[first_index],
                   body);
}

// Estimated tuple count C(|pool| + n - 1, n), as a double to avoid overflow.
double tuple_count_estimate(size_t pool, size_t n) {
  double c = 1;
  for (size_t i = 0; i < n; ++i)
    c = c * static_cast<double>(pool + i) / static_cast<double>(i + 1);
  return c;
}

bool use_parallel(Exec exec, size_t pool, size_t n) {
  switch (exec) {
    case Exec::Serial: return false;
    case Exec::Parallel: return true;
    case Exec::Auto: return tuple_count_estimate(pool, n) > 65536.0;
  }
  return false;
}

// All values of p over non-increasing tuples drawn from `pool`, as a sorted
// set.  The parallel kernel splits on the leading entry and merges
// per-thread buckets, which is order-independent.
std::vector<Int> collect_values(const LinearPattern& p, const std::vector<Int>& pool,
                                Exec exec) {
  const std::vector<Int>& coeffs = p.coefficients();
  std::vector<Int> values;
  if (pool.empty()) return values;
  bool parallel = use_parallel(exec, pool.size(), coeffs.size());
#ifdef _OPENMP
  if (parallel) {
    std::vector<std::vector<Int>> buckets(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(pool.size()); ++j) {
      auto& local = buckets[static_cast<size_t>(omp_get_thread_num())];
      scan_from(pool, coeffs, p.constant(), static_cast<size_t>(j), [&](Int v) {
        local.push_back(v);
        return true;
      });
    }
    for (auto& b : buckets) values.insert(values.end(), b.begin(), b.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }
#else
  (void)parallel;
#endif
  for (size_t j = 0; j < pool.size(); ++j)
    scan_from(pool, coeffs, p.constant(), j, [&](Int v) {
      values.push_back(v);
      return true;
    });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Does any tuple with s1 < s1_limit evaluate outside the codomain?
bool scan_violation(const LinearPattern& p, const ZSet& domain, Int s1_limit,
                    const ZSet& codomain, Exec exec) {
  if (domain.empty()) return false;
  std::vector<Int> pool = domain.below(s1_limit);
  if (pool.empty()) return false;
  const std::vector<Int>& coeffs = p.coefficients();
  bool parallel = use_parallel(exec, pool.size(), coeffs.size());
#ifdef _OPENMP
  if (parallel) {
    int violated = 0;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(pool.size()); ++j) {
      int skip;
#pragma omp atomic read
      skip = violated;
      if (skip) continue;
      bool ok = scan_from(pool, coeffs, p.constant(), static_cast<size_t>(j),
                          [&](Int v) { return codomain.contains(v); });
      if (!ok) {
#pragma omp atomic write
        violated = 1;
      }
    }
    return violated != 0;
  }
#else
  (void)parallel;
#endif
  for (size_t j = 0; j < pool.size(); ++j)
    if (!scan_from(pool, coeffs, p.constant(), j,
                   [&](Int v) { return codomain.contains(v); }))
      return true;
  return false;
}

}  // namespace

ZSet TailSet::plain() const {
  if (scale != 1) fail("ArityMismatch", "TailSet with scale > 1 is not a plain set");
  return set;
}

// ---------------------------------------------------------------------------
// admits

bool admits(const LinearPattern& p, const RelativeIdeal& i, const ZSet& codomain, Exec exec) {
  require_strongly_admissible(p);
  if (!codomain.cofinite()) fail("EmptyIdeal", "codomain must be cofinite");
  if (i.set().min() < 0)
    fail("NotAnIdeal", "image and admission decisions need a domain inside Z+");
  Int c = *codomain.tail();
  // p(s) >= s1 + a0 on domains inside Z+, so s1 >= c - a0 is automatic.
  return !scan_violation(p, i.set(), c - p.constant(), codomain, exec);
}

bool admits(const LinearPattern& p, const RelativeIdeal& i, const NumericalSemigroup& codomain,
            Exec exec) {
  return admits(p, i, codomain.zset(), exec);
}

bool admits(const LinearPattern& p, const RelativeIdeal& i, const RelativeIdeal& codomain,
            Exec exec) {
  return admits(p, i, codomain.set(), exec);
}

BoundedAdmission admits_bounded(const PolynomialPattern& p, const RelativeIdeal& i,
                                const ZSet& codomain, Int bound) {
  std::vector<Int> pool = i.set().below(bound + 1);
  std::vector<Int> tuple(static_cast<size_t>(p.length()));
  BoundedAdmission out;
  out.holds_up_to_bound = true;
  auto rec = [&](auto&& self, size_t pos, size_t max_index) -> bool {
    if (pos == tuple.size()) {
      if (!codomain.contains(p.evaluate(tuple))) {
        out.holds_up_to_bound = false;
        out.witness = tuple;
        return true;
      }
      return false;
    }
    for (size_t j = 0; j <= max_index; ++j) {
      tuple[pos] = pool[j];
      if (self(self, pos + 1, j)) return true;
    }
    return false;
  };
  for (size_t j = 0; j < pool.size(); ++j) {
    tuple[0] = pool[j];
    if (rec(rec, 1, j)) break;
  }
  return out;
}

Int mu_admissible(const LinearPattern& p, Int cap) {
  require_strongly_admissible(p);
  if (cap < 1) fail("CapExceeded", "cap must be at least 1");
  for (Int mu = 1; mu <= cap; ++mu) {
    NumericalSemigroup s = NumericalSemigroup::ordinary(mu);
    // Non-homogeneous patterns take the maximal ideal as domain, homogeneous
    // ones the whole semigroup.
    RelativeIdeal domain = p.homogeneous() ? s.as_ideal() : s.maximal_ideal();
    if (admits(p, domain, s.zset())) return mu;
  }
  fail("CapExceeded", "no ordinary semigroup up to {0," + std::to_string(cap) + ",->} admits p");
}

// ---------------------------------------------------------------------------
// image

namespace {

// Bezout coefficients b with sum(c_i * b_i) == gcd(c), folded left-to-right
// for determinism.
std::vector<Int> bezout(const std::vector<Int>& c) {
  auto ext = [](Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int r = a - q * b;
      a = b;
      b = r;
      Int nx = x0 - q * x1, ny = y0 - q * y1;
      x0 = x1;
      y0 = y1;
      x1 = nx;
      y1 = ny;
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
  };
  std::vector<Int> b(c.size(), 0);
  Int g = c[0];
  b[0] = 1;
  for (size_t i = 1; i < c.size(); ++i) {
    Int x, y;
    Int g2 = ext(g, c[i], x, y);
    for (size_t j = 0; j < i; ++j) b[j] *= x;
    b[i] = y;
    g = g2;
  }
  if (g < 0)
    for (Int& v : b) v = -v;
  return b;
}

Int eval_at(const std::vector<Int>& coeffs, const std::vector<Int>& s) {
  Int v = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * s[i];
  return v;
}

// Image of a homogeneous pattern with coprime coefficients, all partial
// sums >= 1, over a domain with min >= 0.  Since q(s) >= s1 on such
// domains, scanning tuples with s1 < B yields every value below B.
//
// The Bezout anchor tuples give a proven threshold past which the image is
// solid, but that bound can be far larger than the true tail.  The image
// is closed under addition, so a run of v consecutive values with v itself
// a value already certifies a solid tail; the scan widens geometrically
// until one appears, with the anchor bound as the cap.
ZSet coprime_image(const std::vector<Int>& c, const ZSet& domain, Exec exec) {
  if (domain.min() < 0)
    fail("NotAnIdeal", "image and admission decisions need a domain inside Z+");
  size_t n = c.size();
  std::vector<Int> b = bezout(c);
  Int alpha = std::accumulate(c.begin(), c.end(), Int{0});
  Int ci = *domain.tail();

  // the larger of the two anchor values is a safe threshold either way
  std::vector<Int> anchor_a(n), anchor_b(n);
  anchor_a[n - 1] = ci + std::max<Int>(0, -(alpha - 1) * b[n - 1]);
  anchor_b[n - 1] = ci + std::min<Int>(0, alpha * b[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    anchor_a[i] = anchor_a[i + 1] + std::max<Int>(0, (alpha - 1) * (b[i + 1] - b[i]));
    anchor_b[i] = anchor_b[i + 1] + std::min<Int>(0, alpha * (b[i + 1] - b[i]));
  }
  Int hard_bound = std::max(eval_at(c, anchor_a), eval_at(c, anchor_b));

  LinearPattern q(c, 0);
  for (Int scan = std::min(hard_bound, ci + 2);; scan = std::min(hard_bound, 2 * scan)) {
    std::vector<Int> values = collect_values(q, domain.below(scan), exec);
    if (scan >= hard_bound) {
      std::erase_if(values, [&](Int v) { return v >= hard_bound; });
      return ZSet::with_tail(std::move(values), hard_bound);
    }
    auto first_positive = std::upper_bound(values.begin(), values.end(), 0);
    if (first_positive != values.end()) {
      Int v = *first_positive;
      Int run = 1;
      for (size_t i = 1; i < values.size(); ++i) {
        run = values[i] == values[i - 1] + 1 ? run + 1 : 1;
        if (run >= v && values[i] < scan) {
          Int tail = values[i] - v + 1;
          std::erase_if(values, [&](Int w) { return w >= tail; });
          return ZSet::with_tail(std::move(values), tail);
        }
      }
    }
  }
}

}  // namespace

ZSet image_set(const LinearPattern& p, const ZSet& domain, Exec exec) {
  require_strongly_admissible(p);
  if (domain.empty() || !domain.cofinite()) fail("EmptyIdeal", "image of an empty domain");
  if (p.coefficient_gcd() != 1)
    fail("ArityMismatch", "image_set needs coefficient gcd 1; use image() for scaled results");
  ZSet img = coprime_image(p.coefficients(), domain, exec);
  return p.constant() == 0 ? img : img.translated(p.constant());
}

TailSet image(const LinearPattern& p, const RelativeIdeal& i, Exec exec) {
  require_strongly_admissible(p);
  if (i.set().empty()) fail("EmptyIdeal", "image of an empty ideal");
  Int d = p.coefficient_gcd();
  if (d == 1) return {1, 0, image_set(p, i.set(), exec)};
  std::vector<Int> c;
  for (Int a : p.coefficients()) c.push_back(a / d);
  return {d, p.constant(), coprime_image(c, i.set(), exec)};
}

// ---------------------------------------------------------------------------
// Endopatterns, closure, chains

bool is_endopattern(const LinearPattern& p, const RelativeIdeal& i, Exec exec) {
  require_strongly_admissible(p);
  if (i == i.parent().maximal_ideal()) {
    if (!admits(p, i, i.parent().zset(), exec)) return false;
    Int m = i.parent().multiplicity();
    Int total = p.coefficient_total();
    return p.constant() > 0 || (total > 0 && total * m > -p.constant());
  }
  return admits(p, i, i.set(), exec);
}

bool is_surjective_endopattern(const LinearPattern& p, const RelativeIdeal& i, Exec exec) {
  require_strongly_admissible(p);
  if (!admits(p, i, i.set(), exec)) return false;
  // min(I) must be attained, forcing a0 == -(sum(a)-1)*min(I).
  if (p.constant() != -(p.coefficient_total() - 1) * i.min()) return false;
  if (p.classify().premonic) return true;
  return image(p, i, exec).plain() == i.set();
}

Ideal closure(const LinearPattern& p, const RelativeIdeal& i, Int max_iter, Exec exec) {
  Classification c = p.classify();
  if (!c.strongly_admissible)
    fail("NotStronglyAdmissible", "closure iteration needs a strongly admissible pattern");
  if (!c.premonic) fail("PreconditionViolated", "closure requires a premonic pattern");
  Int mu = i.min();
  if (p.constant() != -(p.coefficient_total() - 1) * mu)
    fail("PreconditionViolated", "closure requires a0 == -(sum(a)-1)*min(I)");

  ZSet cur = i.set();
  for (Int k = 0; k < max_iter; ++k) {
    ZSet next = image_set(p, cur, exec);
    if (next == cur) {
      // The fixed point is closed under addition, hence an ideal of its
      // stabilizer {z >= 0 : z + cur ⊆ cur}.
      Int t = *cur.tail();
      Int stab_tail = t - cur.min();
      std::vector<Int> members;
      for (Int z = 0; z < stab_tail; ++z) {
        bool ok = true;
        for (Int e : cur.elements())
          if (!cur.contains(z + e)) {
            ok = false;
            break;
          }
        if (ok) members.push_back(z);
      }
      NumericalSemigroup parent =
          NumericalSemigroup::from_members(ZSet::with_tail(std::move(members), stab_tail));
      return RelativeIdeal::trusted(std::move(parent), std::move(cur));
    }
    cur = std::move(next);
  }
  fail("MaxIterExceeded", "closure chain did not stabilize within the iteration cap");
}

ImageChain image_chain(const LinearPattern& p, const NumericalSemigroup& s, Int k, Exec exec) {
  require_strongly_admissible(p);
  if (!p.homogeneous() || p.coefficient_gcd() != 1)
    fail("PreconditionViolated", "image chains need a homogeneous pattern with gcd 1");
  if (!admits(p, s.as_ideal(), s.zset(), exec))
    fail("NotAdmitted", "the semigroup does not admit the pattern");
  ImageChain out;
  out.semigroups.push_back(s);
  for (Int step = 0; step < k; ++step) {
    ZSet img = image_set(p, out.semigroups.back().zset(), exec);
    out.semigroups.push_back(NumericalSemigroup::from_members(img));
  }
  out.stabilized = k >= 1 && out.semigroups[1] == out.semigroups[0];
  return out;
}

}  // namespace sgp
