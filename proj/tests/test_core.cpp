#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sgp/core.hpp"
#include "sgp/oracle.hpp"
#include "test_support.hpp"

using namespace sgp;

namespace {

NumericalSemigroup S(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace

TEST_CASE("zset normalization and membership") {
  ZSet a = ZSet::with_tail({2, 3}, 4);  // {2,3,4,...} collapses to tail 2
  CHECK(a.elements().empty());
  CHECK(*a.tail() == 2);
  CHECK(a.contains(2));
  CHECK(!a.contains(1));

  ZSet b = ZSet::with_tail({7, 3, 3, 9}, 8);
  CHECK(b.elements() == std::vector<Int>{3});
  CHECK(*b.tail() == 7);

  CHECK(ZSet::finite({0}).min() == 0);
  CHECK_THROWS_AS(ZSet::finite({}).min(), DomainError);

  CHECK(ZSet::with_tail({1}, 5).subset_of(ZSet::with_tail({}, 1)));
  CHECK(!ZSet::with_tail({}, 3).subset_of(ZSet::with_tail({}, 4)));
}

TEST_CASE("from_generators examples") {
  NumericalSemigroup s = S({3, 5, 7});
  CHECK(s.gaps() == std::vector<Int>{1, 2, 4});
  CHECK(s.frobenius() == 4);
  CHECK(s.conductor() == 5);

  NumericalSemigroup z = S({1});
  CHECK(z.conductor() == 0);
  CHECK(z == NumericalSemigroup::integers());

  NumericalSemigroup t = S({2, 7});
  CHECK(t.small_elements() == std::vector<Int>{0, 2, 4});
  CHECK(t.conductor() == 6);

  CHECK_THROWS_WITH_AS(S({2, 4}), doctest::Contains("GcdNotOne"), DomainError);
  CHECK_THROWS_AS(S({0, 3}), DomainError);
}

TEST_CASE("from_generators matches the oracle closure") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> gen(2, 19);
  int done = 0;
  while (done < 40) {
    std::vector<Int> gens;
    Int g = 0;
    for (int k = 0; k < 3; ++k) {
      gens.push_back(gen(rng));
      g = std::gcd(g, gens.back());
    }
    if (g != 1) continue;
    ++done;
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    Int bound = 3 * s.conductor() + 3;
    std::vector<Int> brute = oracle::brute_semigroup(gens, bound);
    for (Int z = 0; z <= bound; ++z)
      REQUIRE(s.contains(z) == std::binary_search(brute.begin(), brute.end(), z));
    // representation invariants
    REQUIRE(s.contains(0));
    if (s.conductor() > 0) REQUIRE(!s.contains(s.conductor() - 1));
    for (Int a : s.small_elements())
      for (Int b : s.small_elements())
        REQUIRE(s.contains(a + b));
  }
}

TEST_CASE("membership") {
  CHECK(!S({2, 7}).contains(5));
  CHECK(S({2, 7}).contains(0));
  CHECK(!S({3, 5, 7}).contains(4));
  CHECK(!S({3, 5, 7}).contains(-3));
}

TEST_CASE("notable elements") {
  SUBCASE("<2,5>") {
    NotableElements n = S({2, 5}).notable_elements();
    CHECK(n.pseudo_frobenius == std::vector<Int>{3});
    CHECK(n.frobenius == 3);
  }
  SUBCASE("<2,7>") {
    NotableElements n = S({2, 7}).notable_elements();
    CHECK(n.pseudo_frobenius == std::vector<Int>{5});
  }
  SUBCASE("<3,5,7>") {
    NotableElements n = S({3, 5, 7}).notable_elements();
    CHECK(n.gaps == std::vector<Int>{1, 2, 4});
    CHECK(n.genus == 3);
    CHECK(n.multiplicity == 3);
    CHECK(n.minimal_generators == std::vector<Int>{3, 5, 7});
    CHECK(n.embedding_dimension == 3);
  }
  SUBCASE("Z+ uses the F = -1 convention") {
    NotableElements n = NumericalSemigroup::integers().notable_elements();
    CHECK(n.frobenius == -1);
    CHECK(n.conductor == 0);
    CHECK(n.genus == 0);
    CHECK(n.multiplicity == 1);
    CHECK(n.minimal_generators == std::vector<Int>{1});
    CHECK(n.pseudo_frobenius == std::vector<Int>{-1});
  }
  SUBCASE("F(S) is the maximum of PF(S) across a family") {
    for (const auto& s : testing::semigroups_with_frobenius_at_most(9)) {
      auto pf = s.pseudo_frobenius();
      REQUIRE(!pf.empty());
      REQUIRE(pf.back() == s.frobenius());
    }
  }
}

TEST_CASE("med and arf predicates") {
  CHECK(S({3, 4, 5}).is_med());
  CHECK(S({2, 7}).is_med());
  CHECK(!S({3, 5}).is_med());

  CHECK(S({2, 7}).is_arf());
  CHECK(NumericalSemigroup::integers().is_arf());
  CHECK(!S({3, 5}).is_arf());
  // whole-semigroup Arf check for <3,5,7>: every triple lands back in S
  CHECK(S({3, 5, 7}).is_arf());

  SUBCASE("agrees with brute-force triple checks") {
    for (const auto& s : testing::semigroups_with_frobenius_at_most(8)) {
      Int c = s.conductor();
      bool brute = true;
      for (Int x = 0; x <= c + 2 && brute; ++x)
        for (Int y = 0; y <= x && brute; ++y)
          for (Int z = 0; z <= y && brute; ++z)
            if (s.contains(x) && s.contains(y) && s.contains(z) && !s.contains(x + y - z))
              brute = false;
      REQUIRE(s.is_arf() == brute);
    }
  }
  SUBCASE("arf implies med on the family") {
    for (const auto& s : testing::semigroups_with_frobenius_at_most(9))
      if (s.is_arf()) REQUIRE(s.is_med());
  }
}

TEST_CASE("maximal ideal") {
  RelativeIdeal m = S({2, 7}).maximal_ideal();
  CHECK(m.elements() == std::vector<Int>{2, 4});
  CHECK(m.tail() == 6);
  CHECK(m.is_ideal());
  CHECK(m.is_proper());

  RelativeIdeal mz = NumericalSemigroup::integers().maximal_ideal();
  CHECK(mz.elements().empty());
  CHECK(mz.tail() == 1);

  RelativeIdeal m357 = S({3, 5, 7}).maximal_ideal();
  CHECK(m357.set() == ZSet::with_tail({3}, 5));  // {3,5,6,7,...}
}

TEST_CASE("ideal_from_elements") {
  NumericalSemigroup s = S({3, 5, 7});
  SUBCASE("S minus {0,7} is an ideal") {
    RelativeIdeal i = ideal_from_elements(s, {3, 5, 6}, 8);
    CHECK(i.is_ideal());
    CHECK(!i.contains(7));
    CHECK(i.contains(8));
  }
  SUBCASE("S as an ideal of itself") {
    RelativeIdeal i = ideal_from_elements(s, {0, 3}, 5);
    CHECK(i == s.as_ideal());
    CHECK(i.is_ideal());
    CHECK(!i.is_proper());
  }
  SUBCASE("{2,3,->} of Z+ is accepted and normalizes to {2,->}") {
    RelativeIdeal i = ideal_from_elements(NumericalSemigroup::integers(), {2, 3}, 3);
    CHECK(i.elements().empty());
    CHECK(i.tail() == 2);
    CHECK(i.is_ideal());
  }
  SUBCASE("H + S not contained in H is rejected") {
    CHECK_THROWS_WITH_AS(ideal_from_elements(NumericalSemigroup::integers(), {2}, 5),
                         doctest::Contains("NotAnIdeal"), DomainError);
  }
  SUBCASE("relative ideal with negative elements") {
    RelativeIdeal i = ideal_from_elements(S({2, 3}), {-2, -1}, 0);
    CHECK(!i.is_ideal());
    CHECK(i.min() == -2);
  }
}

TEST_CASE("sumset and fold_sum") {
  NumericalSemigroup s = S({2, 7});
  RelativeIdeal m = s.maximal_ideal();

  CHECK(fold_sum(m, 2).set() == ZSet::with_tail({4, 6}, 8));  // {4,6,8,->}
  CHECK(fold_sum_set(m, 0) == ZSet::finite({0}));
  CHECK(fold_sum(m, 1) == m);
  CHECK(fold_sum(NumericalSemigroup::integers().maximal_ideal(), 3).set() ==
        ZSet::with_tail({}, 3));

  SUBCASE("fold recurrence") {
    for (Int d = 0; d <= 5; ++d)
      CHECK(sumset(m, fold_sum_set(m, d)).set() == fold_sum_set(m, d + 1));
  }
  SUBCASE("parent mismatch") {
    CHECK_THROWS_WITH_AS(sumset(m, S({2, 5}).maximal_ideal()),
                         doctest::Contains("ParentMismatch"), DomainError);
  }
}

TEST_CASE("difference") {
  SUBCASE("PF via S - M on <2,5>") {
    NumericalSemigroup s = S({2, 5});
    RelativeIdeal d = difference(s.as_ideal(), s.maximal_ideal());
    // S union {3} = {0,2,3,4,...}
    CHECK(d.set() == ZSet::with_tail({0, 2}, 3));
  }
  SUBCASE("S - S = S") {
    for (const auto& s : {S({2, 5}), S({3, 5, 7}), NumericalSemigroup::integers()})
      CHECK(difference(s.as_ideal(), s.as_ideal()).set() == s.zset());
  }
  SUBCASE("-1 lies in S - 3M for <3,5>") {
    NumericalSemigroup s = S({3, 5});
    RelativeIdeal d = difference(s.as_ideal(), fold_sum(s.maximal_ideal(), 3));
    CHECK(d.contains(-1));
  }
  SUBCASE("agrees with the direct definition") {
    std::mt19937 rng(11);
    auto family = testing::semigroups_with_frobenius_at_most(8);
    for (int t = 0; t < 40; ++t) {
      const auto& s = family[rng() % family.size()];
      RelativeIdeal i = testing::random_ideal(rng, s);
      RelativeIdeal k = testing::random_ideal(rng, s);
      RelativeIdeal d = difference(i, k);
      for (Int z = i.min() - k.min() - 5; z < i.tail() - k.min() + 5; ++z) {
        bool direct = true;
        for (Int kk : k.set().below(i.tail() - z + 1))
          if (!i.contains(z + kk)) {
            direct = false;
            break;
          }
        REQUIRE(d.contains(z) == direct);
      }
    }
  }
}

TEST_CASE("dual") {
  NumericalSemigroup s = S({3, 5});
  SUBCASE("dual of dual contains the original") {
    for (Int seed : {0, 3, 5, 6, 8}) {
      RelativeIdeal principal = translate(s.as_ideal(), seed);
      RelativeIdeal dd = dual(dual(principal));
      CHECK(principal.set().subset_of(dd.set()));
    }
  }
  SUBCASE("dual of M is S union PF") {
    RelativeIdeal d = dual(s.maximal_ideal());
    CHECK(d.contains(7));   // F(S), and PF(<3,5>) = {7}
    CHECK(!d.contains(4));  // 4 + 3 = 7 is a gap
    CHECK(!d.contains(1));
    CHECK(d.set() == ZSet::with_tail({0, 3, 5, 6}, 7));
  }
}

TEST_CASE("quotient") {
  CHECK(quotient(S({2, 7}), 2) == NumericalSemigroup::integers());
  NumericalSemigroup s = S({3, 5});
  CHECK(quotient(s, 1) == s);
  CHECK_THROWS_WITH_AS(quotient(s, 0), doctest::Contains("NonPositiveDivisor"), DomainError);

  SUBCASE("always a valid semigroup") {
    for (const auto& t : testing::semigroups_with_frobenius_at_most(9))
      for (Int d = 1; d <= 6; ++d) {
        NumericalSemigroup q = quotient(t, d);
        for (Int x = 0; x <= q.conductor() + 3; ++x)
          REQUIRE(q.contains(x) == t.contains(d * x));
      }
  }
}

TEST_CASE("lipman") {
  SUBCASE("MED semigroup stabilizes at h0 = 1") {
    NumericalSemigroup s = S({2, 7});
    LipmanResult r = lipman(s, s.maximal_ideal());
    CHECK(r.h0 == 1);
    CHECK(r.semigroup == S({2, 5}));  // M - M
  }
  SUBCASE("Z+") {
    NumericalSemigroup z = NumericalSemigroup::integers();
    LipmanResult r = lipman(z, z.maximal_ideal());
    CHECK(r.h0 == 1);
    CHECK(r.semigroup == z);
  }
  SUBCASE("<3,5> needs two folds") {
    NumericalSemigroup s = S({3, 5});
    LipmanResult r = lipman(s, s.maximal_ideal());
    CHECK(r.h0 == 2);
    CHECK(r.semigroup == S({2, 3}));
    // brute union of (hM - hM) for comparison
    RelativeIdeal m = s.maximal_ideal();
    ZSet u = difference(m, m).set();
    for (Int h = 2; h <= 6; ++h) {
      RelativeIdeal hm = fold_sum(m, h);
      ZSet d = difference(hm, hm).set();
      CHECK(u.subset_of(d));
      u = d;
    }
    CHECK(u == r.semigroup.zset());
  }
  SUBCASE("stabilization identity at the returned h0") {
    for (const auto& s : testing::semigroups_with_frobenius_at_most(8)) {
      if (s.is_integers()) continue;
      RelativeIdeal m = s.maximal_ideal();
      LipmanResult r = lipman(s, m);
      RelativeIdeal at = fold_sum(m, r.h0);
      CHECK(fold_sum(m, r.h0 + 1).set() == at.set().translated(m.min()));
    }
  }
  SUBCASE("rejects the whole semigroup") {
    NumericalSemigroup s = S({3, 5});
    CHECK_THROWS_WITH_AS(lipman(s, s.as_ideal()), doctest::Contains("NotProperIdeal"),
                         DomainError);
  }
}

TEST_CASE("validate() accepts operation results") {
  std::mt19937 rng(23);
  auto family = testing::semigroups_with_frobenius_at_most(8);
  for (int t = 0; t < 25; ++t) {
    const auto& s = family[rng() % family.size()];
    RelativeIdeal i = testing::random_ideal(rng, s);
    RelativeIdeal k = testing::random_ideal(rng, s);
    CHECK(i.validate());
    CHECK(sumset(i, k).validate());
    CHECK(difference(i, k).validate());
    CHECK(dual(i).validate());
  }
}
