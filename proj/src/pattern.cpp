#include "sgp/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgp {

// ---------------------------------------------------------------------------
// LinearPattern

LinearPattern::LinearPattern(std::vector<Int> coefficients, Int constant)
    : coeffs_(std::move(coefficients)), constant_(constant) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
  prefix_.reserve(coeffs_.size());
  Int acc = 0;
  for (Int a : coeffs_) {
    acc += a;
    prefix_.push_back(acc);
    gcd_ = std::gcd(gcd_, a);
  }
}

Classification LinearPattern::classify() const {
  Classification c;
  c.admissible_homogeneous = true;
  c.strongly_admissible = true;
  for (Int a : prefix_) {
    if (a < 0) c.admissible_homogeneous = false;
    if (a < 1) c.strongly_admissible = false;
    if (a == 1) c.premonic = true;
  }
  c.monic = coeffs_.front() == 1;
  return c;
}

Int LinearPattern::evaluate(std::span<const Int> s) const {
  if (static_cast<Int>(s.size()) != length())
    fail("ArityMismatch", "pattern of length " + std::to_string(length()) + " applied to " +
                              std::to_string(s.size()) + " arguments");
  Int v = constant_;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] > s[i - 1])
      fail("NotNonIncreasing", "argument tuple must be non-increasing");
    v += coeffs_[i] * s[i];
  }
  return v;
}

// ---------------------------------------------------------------------------
// PolynomialPattern

PolynomialPattern::PolynomialPattern(Int length) : length_(std::max<Int>(1, length)) {}

PolynomialPattern::PolynomialPattern(const LinearPattern& p) : length_(p.length()) {
  const auto& a = p.coefficients();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::vector<Int> exp(a.size(), 0);
    exp[i] = 1;
    terms_[std::move(exp)] = a[i];
  }
  if (p.constant() != 0) terms_[std::vector<Int>(a.size(), 0)] = p.constant();
}

Int PolynomialPattern::degree() const {
  Int d = 0;
  for (const auto& [exp, coeff] : terms_)
    d = std::max(d, std::accumulate(exp.begin(), exp.end(), Int{0}));
  return d;
}

LinearPattern PolynomialPattern::to_linear() const {
  std::vector<Int> coeffs(length_, 0);
  Int constant = 0;
  for (const auto& [exp, coeff] : terms_) {
    Int total = std::accumulate(exp.begin(), exp.end(), Int{0});
    if (total == 0) {
      constant = coeff;
    } else if (total == 1) {
      size_t i = static_cast<size_t>(std::find(exp.begin(), exp.end(), 1) - exp.begin());
      coeffs[i] = coeff;
    } else {
      fail("ArityMismatch", "pattern is not linear");
    }
  }
  return {std::move(coeffs), constant};
}

Int PolynomialPattern::evaluate(std::span<const Int> s) const {
  if (static_cast<Int>(s.size()) != length_)
    fail("ArityMismatch", "pattern of length " + std::to_string(length_) + " applied to " +
                              std::to_string(s.size()) + " arguments");
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[i - 1]) fail("NotNonIncreasing", "argument tuple must be non-increasing");
  Int v = 0;
  for (const auto& [exp, coeff] : terms_) {
    Int term = coeff;
    for (size_t i = 0; i < exp.size(); ++i)
      for (Int k = 0; k < exp[i]; ++k) term *= s[i];
    v += term;
  }
  return v;
}

void PolynomialPattern::set_term(std::vector<Int> exponents, Int coefficient) {
  exponents.resize(static_cast<size_t>(length_), 0);
  if (coefficient == 0)
    terms_.erase(exponents);
  else
    terms_[std::move(exponents)] = coefficient;
}

// ---------------------------------------------------------------------------
// Semiring operations

LinearPattern add(const LinearPattern& p, const LinearPattern& q) {
  std::vector<Int> coeffs(std::max(p.length(), q.length()), 0);
  for (Int i = 0; i < p.length(); ++i) coeffs[static_cast<size_t>(i)] += p.coefficients()[static_cast<size_t>(i)];
  for (Int i = 0; i < q.length(); ++i) coeffs[static_cast<size_t>(i)] += q.coefficients()[static_cast<size_t>(i)];
  return {std::move(coeffs), p.constant() + q.constant()};
}

LinearPattern subtract(const LinearPattern& p, const LinearPattern& q) {
  std::vector<Int> coeffs(std::max(p.length(), q.length()), 0);
  for (Int i = 0; i < p.length(); ++i) coeffs[static_cast<size_t>(i)] += p.coefficients()[static_cast<size_t>(i)];
  for (Int i = 0; i < q.length(); ++i) coeffs[static_cast<size_t>(i)] -= q.coefficients()[static_cast<size_t>(i)];
  return {std::move(coeffs), p.constant() - q.constant()};
}

namespace {

std::vector<Int> padded(std::vector<Int> exp, Int n) {
  exp.resize(static_cast<size_t>(n), 0);
  return exp;
}

}  // namespace

PolynomialPattern add(const PolynomialPattern& p, const PolynomialPattern& q) {
  Int n = std::max(p.length(), q.length());
  PolynomialPattern out(n);
  std::map<std::vector<Int>, Int> acc;
  for (const auto& [exp, c] : p.terms()) acc[padded(exp, n)] += c;
  for (const auto& [exp, c] : q.terms()) acc[padded(exp, n)] += c;
  for (auto& [exp, c] : acc)
    if (c != 0) out.set_term(exp, c);
  return out;
}

PolynomialPattern multiply(const PolynomialPattern& p, const PolynomialPattern& q) {
  Int n = std::max(p.length(), q.length());
  PolynomialPattern out(n);
  std::map<std::vector<Int>, Int> acc;
  for (const auto& [pe, pc] : p.terms())
    for (const auto& [qe, qc] : q.terms()) {
      std::vector<Int> exp = padded(pe, n);
      std::vector<Int> other = padded(qe, n);
      for (size_t i = 0; i < exp.size(); ++i) exp[i] += other[i];
      acc[std::move(exp)] += pc * qc;
    }
  for (auto& [exp, c] : acc)
    if (c != 0) out.set_term(exp, c);
  return out;
}

bool nonnegative_on(const LinearPattern& r, const RelativeIdeal& i) {
  for (Int a : r.prefix_sums())
    if (a < 0) return false;
  return r.coefficient_total() * i.min() + r.constant() >= 0;
}

namespace {

// Smallest violating tuple (entries from I, values <= bound) of r < 0, if any.
std::optional<std::vector<Int>> negative_witness(const PolynomialPattern& r,
                                                 const RelativeIdeal& i, Int bound) {
  std::vector<Int> pool = i.set().below(bound + 1);
  std::vector<Int> tuple(static_cast<size_t>(r.length()));
  std::optional<std::vector<Int>> witness;
  auto rec = [&](auto&& self, size_t pos, size_t max_index) -> bool {
    if (pos == tuple.size()) {
      if (r.evaluate(tuple) < 0) {
        witness = tuple;
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
  if (!pool.empty())
    for (size_t j = 0; j < pool.size(); ++j) {
      tuple[0] = pool[j];
      if (rec(rec, 1, j)) break;
    }
  return witness;
}

std::string tuple_string(std::span<const Int> s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

}  // namespace

PolynomialPattern scalar_multiply(const PolynomialPattern& r, const PolynomialPattern& p,
                                  const RelativeIdeal& i, Int bound) {
  if (r.is_linear()) {
    LinearPattern lin = r.to_linear();
    if (!nonnegative_on(lin, i))
      fail("ScalarNotNonNegative", "linear certificate failed (partial sums or value at the minimum)");
  } else if (auto w = negative_witness(r, i, bound)) {
    fail("ScalarNotNonNegative", "negative at " + tuple_string(*w));
  }
  return multiply(r, p);
}

// ---------------------------------------------------------------------------
// Composition

LinearPattern compose(const LinearPattern& p, std::span<const LinearPattern> qs,
                      const RelativeIdeal& i) {
  if (static_cast<Int>(qs.size()) != p.length())
    fail("ArityMismatch", "outer pattern of length " + std::to_string(p.length()) + " needs " +
                              std::to_string(p.length()) + " inner patterns");
  // normalization drops trailing zeros, so a common length means padding
  Int n = 0;
  for (const LinearPattern& q : qs) n = std::max(n, q.length());
  for (size_t k = 0; k + 1 < qs.size(); ++k) {
    if (!nonnegative_on(subtract(qs[k], qs[k + 1]), i))
      fail("OrderingNotCertified",
           "q" + std::to_string(k + 1) + " >= q" + std::to_string(k + 2) +
               " could not be certified on the ideal");
  }
  std::vector<Int> coeffs(static_cast<size_t>(n), 0);
  Int constant = p.constant();
  for (size_t k = 0; k < qs.size(); ++k) {
    Int a = p.coefficients()[k];
    for (size_t j = 0; j < qs[k].coefficients().size(); ++j)
      coeffs[j] += a * qs[k].coefficients()[j];
    constant += a * qs[k].constant();
  }
  return {std::move(coeffs), constant};
}

LinearPattern pattern_from_generators(const NumericalSemigroup& s) {
  std::vector<Int> gens = s.minimal_generators();
  std::sort(gens.rbegin(), gens.rend());
  std::vector<Int> coeffs;
  coeffs.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    coeffs.push_back(i == 0 ? gens[0] : gens[i] - gens[i - 1]);
  return {std::move(coeffs), 0};
}

}  // namespace sgp
