#pragma once

// Linear and polynomial patterns and their coefficient-level operations.

#include <map>
#include <span>
#include <vector>

#include "sgp/core.hpp"

namespace sgp {

struct Classification {
  bool admissible_homogeneous = false;  // all partial coefficient sums >= 0
  bool strongly_admissible = false;     // all partial coefficient sums >= 1
  bool premonic = false;                // some prefix sum equals 1
  bool monic = false;                   // a1 == 1
};

/// a1*X1 + ... + an*Xn + a0, evaluated on non-increasing integer tuples.
/// Normal form drops trailing zero coefficients but keeps n >= 1.
class LinearPattern {
public:
  LinearPattern(std::vector<Int> coefficients, Int constant);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int constant() const { return constant_; }
  Int length() const { return static_cast<Int>(coeffs_.size()); }

  /// Prefix sums A_k = a1 + ... + ak.
  const std::vector<Int>& prefix_sums() const { return prefix_; }
  Int coefficient_total() const { return prefix_.back(); }
  /// gcd of the coefficients (0 for the zero pattern).
  Int coefficient_gcd() const { return gcd_; }

  bool homogeneous() const { return constant_ == 0; }
  LinearPattern homogeneous_part() const { return {coeffs_, 0}; }

  Classification classify() const;
  bool strongly_admissible() const { return classify().strongly_admissible; }
  bool premonic() const { return classify().premonic; }

  Int evaluate(std::span<const Int> s) const;

  static LinearPattern arf() { return {{1, 1, -1}, 0}; }
  static LinearPattern identity() { return {{1}, 0}; }
  static LinearPattern zero() { return {{0}, 0}; }

  friend bool operator==(const LinearPattern&, const LinearPattern&) = default;

private:
  std::vector<Int> coeffs_;
  Int constant_ = 0;
  std::vector<Int> prefix_;
  Int gcd_ = 0;
};

/// Integer polynomial in X1..Xn as a map from exponent vectors to non-zero
/// coefficients; the degree-0 term is the constant.
class PolynomialPattern {
public:
  explicit PolynomialPattern(Int length = 1);
  PolynomialPattern(const LinearPattern& p);  // lossless embedding

  Int length() const { return length_; }
  Int degree() const;
  const std::map<std::vector<Int>, Int>& terms() const { return terms_; }

  bool is_linear() const { return degree() <= 1; }
  LinearPattern to_linear() const;

  Int evaluate(std::span<const Int> s) const;

  void set_term(std::vector<Int> exponents, Int coefficient);

  friend bool operator==(const PolynomialPattern&, const PolynomialPattern&) = default;

private:
  std::map<std::vector<Int>, Int> terms_;
  Int length_ = 1;
};

LinearPattern add(const LinearPattern& p, const LinearPattern& q);
LinearPattern subtract(const LinearPattern& p, const LinearPattern& q);
PolynomialPattern add(const PolynomialPattern& p, const PolynomialPattern& q);
PolynomialPattern multiply(const PolynomialPattern& p, const PolynomialPattern& q);

/// r * p, after certifying r >= 0 on the non-increasing tuples of I.  For
/// linear r the certificate is exact (partial sums >= 0 and A_n*min(I)+r0
/// >= 0); otherwise all tuples with entries up to `bound` are evaluated and
/// acceptance is only as strong as the bound.  ScalarNotNonNegative carries
/// a witness tuple when refuted.
PolynomialPattern scalar_multiply(const PolynomialPattern& r, const PolynomialPattern& p,
                                  const RelativeIdeal& i, Int bound = 20);

/// Whether r is non-negative on all non-increasing tuples of I; exact for
/// linear patterns.
bool nonnegative_on(const LinearPattern& r, const RelativeIdeal& i);

/// p(q1(Y), ..., qn(Y)) with an exact ordering certificate: each consecutive
/// difference q_i - q_{i+1} must be non-negative on the non-increasing
/// tuples of I (OrderingNotCertified names the failing pair otherwise).
LinearPattern compose(const LinearPattern& p, std::span<const LinearPattern> qs,
                      const RelativeIdeal& i);

/// The pattern a1*X1 + (a2-a1)*X2 + ... over the generators of S sorted
/// descending; its image of Z+ is S.
LinearPattern pattern_from_generators(const NumericalSemigroup& s);

}  // namespace sgp
