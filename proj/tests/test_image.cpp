#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgp/image.hpp"
#include "sgp/oracle.hpp"
#include "test_support.hpp"

using namespace sgp;

namespace {

NumericalSemigroup S(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

const LinearPattern kArf = LinearPattern::arf();

}  // namespace

TEST_CASE("admits on the <2,7> examples") {
  NumericalSemigroup s = S({2, 7});
  RelativeIdeal m = s.maximal_ideal();
  CHECK(admits(kArf, m, s));
  CHECK(admits(LinearPattern({1, 1, -1}, 5), m, s));
  CHECK(!admits(LinearPattern({1, 1, -1}, 3), m, s));
}

TEST_CASE("admits requires strong admissibility") {
  NumericalSemigroup s = S({2, 3});
  CHECK_THROWS_WITH_AS(admits(LinearPattern({1, -1}, 0), s.as_ideal(), s),
                       doctest::Contains("NotStronglyAdmissible"), DomainError);
}

TEST_CASE("admits with a separate codomain semigroup") {
  // 2X1 - 1 maps M(<3,5>) into <3,5>
  NumericalSemigroup s = S({3, 5});
  CHECK(admits(LinearPattern({2}, -1), s.maximal_ideal(), s));
  // the ideal {2,->} of Z+ admits X1+X2-3
  RelativeIdeal i = ideal_from_elements(NumericalSemigroup::integers(), {2, 3}, 3);
  CHECK(admits(LinearPattern({1, 1}, -3), i, NumericalSemigroup::integers()));
}

TEST_CASE("admits_bounded") {
  SUBCASE("refutation carries a witness") {
    NumericalSemigroup s = S({2, 3});
    BoundedAdmission r = admits_bounded(PolynomialPattern(LinearPattern({1, -1}, 0)),
                                        s.as_ideal(), s.zset(), 10);
    CHECK(!r.holds_up_to_bound);
    REQUIRE(r.witness.has_value());
    CHECK(LinearPattern({1, -1}, 0).evaluate(*r.witness) == 1);  // some gap witness, 3-2
  }
  SUBCASE("identity holds") {
    NumericalSemigroup s = S({3, 5});
    BoundedAdmission r =
        admits_bounded(PolynomialPattern(LinearPattern({1}, 0)), s.maximal_ideal(), s.zset(), 25);
    CHECK(r.holds_up_to_bound);
  }
  SUBCASE("product of admitted patterns stays admitted (bounded check)") {
    NumericalSemigroup s = S({2, 7});
    PolynomialPattern prod =
        multiply(PolynomialPattern(kArf), PolynomialPattern(LinearPattern({1, 0, 0}, 0)));
    BoundedAdmission r = admits_bounded(prod, s.maximal_ideal(), s.zset(), 20);
    CHECK(r.holds_up_to_bound);
  }
}

TEST_CASE("mu_admissible") {
  CHECK(mu_admissible(LinearPattern({1, 1}, -3)) == 3);
  CHECK(mu_admissible(LinearPattern({1}, 0)) == 1);
  CHECK_THROWS_WITH_AS(mu_admissible(LinearPattern({1, -1}, 0)),
                       doctest::Contains("NotStronglyAdmissible"), DomainError);
  CHECK_THROWS_WITH_AS(mu_admissible(LinearPattern({1, 1}, -3), 2),
                       doctest::Contains("CapExceeded"), DomainError);

  SUBCASE("scan agrees with the oracle") {
    for (const LinearPattern& p :
         {LinearPattern({1, 1, -1}, 5), LinearPattern({2, 1}, -4), LinearPattern({1, 1}, -5),
          LinearPattern({3}, -2), LinearPattern({2, 2}, -7)}) {
      Int mu = mu_admissible(p, 40);
      for (Int candidate = 1; candidate <= mu; ++candidate) {
        NumericalSemigroup o = NumericalSemigroup::ordinary(candidate);
        ZSet domain = p.homogeneous() ? o.zset() : o.maximal_ideal().set();
        Int bound = std::max<Int>(candidate, o.conductor() - p.constant()) + 2;
        bool brute = oracle::brute_admits(p, domain, o.zset(), bound).holds_up_to_bound;
        REQUIRE(brute == (candidate == mu ? true : false));
      }
    }
  }
}

TEST_CASE("image matches the worked ideal example") {
  NumericalSemigroup s = S({3, 5, 7});
  RelativeIdeal i = ideal_from_elements(s, {3, 5, 6}, 8);  // S minus {0,7}
  TailSet img = image(kArf, i);
  CHECK(img.scale == 1);
  CHECK(img.set == s.maximal_ideal().set());
}

TEST_CASE("image of the identity pattern") {
  std::mt19937 rng(29);
  auto family = testing::semigroups_with_frobenius_at_most(8);
  for (int t = 0; t < 20; ++t) {
    RelativeIdeal i = testing::random_ideal(rng, family[rng() % family.size()]);
    CHECK(image(LinearPattern({1}, 0), i).set == i.set());
  }
}

TEST_CASE("image with coefficient gcd > 1 scales") {
  NumericalSemigroup s = S({2, 3});
  TailSet img = image(LinearPattern({2}, 0), s.as_ideal());
  CHECK(img.scale == 2);
  CHECK(img.set == s.zset());
  CHECK(img.contains(0));
  CHECK(!img.contains(2));  // 2*1, but 1 is a gap
  CHECK(img.contains(4));
  CHECK(!img.contains(5));

  // shifted and scaled: 2X1 + 1 on S
  TailSet shifted = image(LinearPattern({2}, 1), s.as_ideal());
  CHECK(shifted.scale == 2);
  CHECK(shifted.shift == 1);
  CHECK(shifted.contains(1));
  CHECK(!shifted.contains(3));
  CHECK(shifted.contains(5));
  CHECK(!shifted.contains(4));
}

TEST_CASE("quotient undoes a length-two image") {
  NumericalSemigroup s = S({2, 3});
  TailSet img = image(LinearPattern({2, 1}, 0), s.as_ideal());
  NumericalSemigroup ps = NumericalSemigroup::from_members(img.plain());
  CHECK(quotient(ps, 3) == s);
}

TEST_CASE("image equals translated homogeneous image") {
  std::mt19937 rng(31);
  auto family = testing::semigroups_with_frobenius_at_most(8);
  for (int t = 0; t < 40; ++t) {
    LinearPattern p = testing::random_strongly_admissible(rng);
    if (p.coefficient_gcd() != 1) continue;
    RelativeIdeal i = testing::random_ideal(rng, family[rng() % family.size()]);
    CHECK(image(p, i).set == image(p.homogeneous_part(), i).set.translated(p.constant()));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(37);
  auto family = testing::semigroups_with_frobenius_at_most(9);
  for (int t = 0; t < 30; ++t) {
    LinearPattern p = testing::random_strongly_admissible(rng);
    const auto& s = family[rng() % family.size()];
    RelativeIdeal i = testing::random_ideal(rng, s);
    CHECK(image(p, i, Exec::Serial) == image(p, i, Exec::Parallel));
    CHECK(admits(p, i, s, Exec::Serial) == admits(p, i, s, Exec::Parallel));
  }
}

TEST_CASE("premonic homogeneous admitted pattern fixes S") {
  for (const auto& s : testing::semigroups_with_frobenius_at_most(8)) {
    for (const LinearPattern& p : {LinearPattern({1, 1, -1}, 0), LinearPattern({2, -1}, 0),
                                   LinearPattern({1, 2, -2}, 0)}) {
      if (!admits(p, s.as_ideal(), s)) continue;
      CHECK(image(p, s.as_ideal()).set == s.zset());
    }
  }
}

TEST_CASE("is_endopattern") {
  CHECK(is_endopattern(kArf, S({2, 7}).maximal_ideal()));
  CHECK(is_endopattern(LinearPattern({1}, 3), S({2, 5}).maximal_ideal()));
  CHECK(is_endopattern(LinearPattern({1, 1}, -3), S({3, 4, 5}).maximal_ideal()));
  CHECK(is_endopattern(LinearPattern({1, 1, 1}, 1), S({2, 7}).maximal_ideal()));

  SUBCASE("maximal-ideal shortcut agrees with the direct scan") {
    std::mt19937 rng(41);
    auto family = testing::semigroups_with_frobenius_at_most(8);
    for (int t = 0; t < 60; ++t) {
      LinearPattern p = testing::random_strongly_admissible(rng);
      const auto& s = family[rng() % family.size()];
      RelativeIdeal m = s.maximal_ideal();
      CHECK(is_endopattern(p, m) == admits(p, m, m));
    }
  }
  SUBCASE("monic admitted by M(S) is an endopattern, S != Z+") {
    std::mt19937 rng(43);
    auto family = testing::semigroups_with_frobenius_at_most(8);
    for (int t = 0; t < 80; ++t) {
      LinearPattern p = testing::random_strongly_admissible(rng);
      if (!p.classify().monic) continue;
      const auto& s = family[rng() % family.size()];
      if (s.is_integers()) continue;
      RelativeIdeal m = s.maximal_ideal();
      if (admits(p, m, s)) CHECK(is_endopattern(p, m));
    }
  }
}

TEST_CASE("is_surjective_endopattern") {
  SUBCASE("arf on the maximal ideal of an arf semigroup") {
    CHECK(is_surjective_endopattern(kArf, S({2, 7}).maximal_ideal()));
  }
  SUBCASE("X1+X2 fixes S but not M(S)") {
    NumericalSemigroup s = S({2, 3});
    CHECK(is_surjective_endopattern(LinearPattern({1, 1}, 0), s.as_ideal()));
    CHECK(!is_surjective_endopattern(LinearPattern({1, 1}, 0), s.maximal_ideal()));
  }
  SUBCASE("identity is always surjective") {
    std::mt19937 rng(47);
    auto family = testing::semigroups_with_frobenius_at_most(8);
    for (int t = 0; t < 20; ++t)
      CHECK(is_surjective_endopattern(LinearPattern({1}, 0),
                                      testing::random_ideal(rng, family[rng() % family.size()])));
  }
  SUBCASE("verdict equals image comparison") {
    std::mt19937 rng(53);
    auto family = testing::semigroups_with_frobenius_at_most(7);
    for (int t = 0; t < 60; ++t) {
      LinearPattern p = testing::random_strongly_admissible(rng);
      if (p.coefficient_gcd() != 1) continue;
      RelativeIdeal i = testing::random_ideal(rng, family[rng() % family.size()]);
      bool direct = admits(p, i, i) && image(p, i).set == i.set();
      CHECK(is_surjective_endopattern(p, i) == direct);
    }
  }
}

TEST_CASE("closure") {
  SUBCASE("ideal already admitting p is its own closure") {
    NumericalSemigroup s = S({2, 7});
    Ideal c = closure(kArf, s.maximal_ideal());
    CHECK(c.set() == s.maximal_ideal().set());
  }
  SUBCASE("the worked example stabilizes through M(S)") {
    NumericalSemigroup s = S({3, 5, 7});
    RelativeIdeal i = ideal_from_elements(s, {3, 5, 6}, 8);
    Ideal c = closure(kArf, i);
    CHECK(c.set() == s.maximal_ideal().set());  // M already admits the pattern
    CHECK(admits(kArf, c, c.parent()));
  }
  SUBCASE("arf-type closure of a non-arf semigroup") {
    NumericalSemigroup s = S({3, 5});
    Ideal c = closure(LinearPattern({2, -1}, 0), s.as_ideal());
    CHECK(s.zset().subset_of(c.set()));
    CHECK(admits(LinearPattern({2, -1}, 0), c, c.parent()));
    // 2*5 - 3 = 7 forces the gap at 7 to fill
    CHECK(c.contains(7));
  }
  SUBCASE("precondition violations") {
    NumericalSemigroup s = S({2, 3});
    CHECK_THROWS_WITH_AS(closure(LinearPattern({2}, 0), s.as_ideal()),
                         doctest::Contains("PreconditionViolated"), DomainError);
    CHECK_THROWS_WITH_AS(closure(LinearPattern({1, 1}, -1), s.maximal_ideal()),
                         doctest::Contains("PreconditionViolated"), DomainError);
  }
}

TEST_CASE("image_chain") {
  SUBCASE("identity chain stabilizes at once") {
    NumericalSemigroup s = S({3, 5});
    ImageChain c = image_chain(LinearPattern({1}, 0), s, 3);
    CHECK(c.semigroups.size() == 4);
    CHECK(c.stabilized);
    for (const auto& t : c.semigroups) CHECK(t == s);
  }
  SUBCASE("2X1+X2 on <2,3> descends strictly") {
    ImageChain c = image_chain(LinearPattern({2, 1}, 0), S({2, 3}), 2);
    CHECK(!c.stabilized);
    CHECK(c.semigroups[1].zset().subset_of(c.semigroups[0].zset()));
    CHECK(c.semigroups[2].zset().subset_of(c.semigroups[1].zset()));
    CHECK(c.semigroups[1] != c.semigroups[0]);
    CHECK(c.semigroups[2] != c.semigroups[1]);
  }
  SUBCASE("premonic admitted pattern gives a constant chain") {
    NumericalSemigroup s = S({2, 7});
    ImageChain c = image_chain(kArf, s, 3);
    CHECK(c.stabilized);
    for (const auto& t : c.semigroups) CHECK(t == s);
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(image_chain(LinearPattern({1, 1}, -1), S({2, 3}), 2),
                         doctest::Contains("PreconditionViolated"), DomainError);
    CHECK_THROWS_WITH_AS(image_chain(kArf, S({3, 5}), 2), doctest::Contains("NotAdmitted"),
                         DomainError);
  }
}
