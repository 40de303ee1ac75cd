#include <algorithm>
#include <vector>

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"
#include "burnside/mset.hpp"
#include "doctest.h"

using namespace burnside;

namespace {

// The one-point everywhere-defined action.
PartialMSet one_point_total(const MonoidPtr& m) {
  PartialMSet x(m, 1);
  for (int t = 0; t < m->size(); ++t) x.set(0, t, 0);
  return x;
}

// The one-point action defined only on the units (here: only the identity).
PartialMSet one_point_unit(const MonoidPtr& m) { return PartialMSet(m, 1); }

}  // namespace

TEST_CASE("validation") {
  auto m = mono_01();

  SUBCASE("constructor presets the identity column") {
    PartialMSet x(m, 3);
    CHECK(validate(x).ok());
    for (int p = 0; p < 3; ++p) {
      CHECK(x.act(p, m->identity()) == p);
      CHECK_FALSE(x.defined(p, 0));
    }
  }

  SUBCASE("identity violation reported") {
    PartialMSet x(m, 2);
    x.set(0, m->identity(), 1);
    auto rep = validate(x);
    CHECK_FALSE(rep.ok());
    CHECK(rep.kind == ValidationReport::Kind::identity);
    CHECK(rep.x == 0);
  }

  SUBCASE("associativity violation reported") {
    // x*(0*0) defined but (x*0)*0 lands elsewhere is impossible over mono_01
    // with one point, so use two points: 0*zero = 1 but 1*zero = 0.
    PartialMSet x(m, 2);
    x.set(0, 0, 1);
    x.set(1, 0, 0);
    auto rep = validate(x);
    CHECK_FALSE(rep.ok());
    CHECK(rep.kind == ValidationReport::Kind::associativity);
    // Witness: x*(m n) != (x*m)*n or definedness mismatch at (x, m, n).
    CHECK(rep.m == 0);
    CHECK(rep.n == 0);
  }

  SUBCASE("partial columns must respect products") {
    // Over {0,1}: 0*0 = 0, so x*0 defined forces (x*0)*0 defined and equal.
    PartialMSet x(m, 2);
    x.set(0, 0, 1);  // 0 moves to 1 under zero, but 1 has no zero move
    auto rep = validate(x);
    CHECK_FALSE(rep.ok());
  }

  SUBCASE("right regular actions always validate") {
    for (const char* name : {"mono_01", "mono_0pm1", "five_element_nonsubring",
                             "full_transformation 3", "appendix_counterexample"}) {
      auto mm = catalog_build(name).monoid;
      auto r = right_regular(mm);
      CHECK(validate(r).ok());
      CHECK(r.points() == mm->size());
      for (int a = 0; a < mm->size(); ++a)
        for (int b = 0; b < mm->size(); ++b)
          CHECK(r.act(a, b) == mm->mul(a, b));
    }
  }
}

TEST_CASE("restriction to subsets") {
  SUBCASE("invariant subsets restrict") {
    auto x = chain_mset(3);
    // {0} is invariant; {0, 1} is a valid subquotient.
    auto r0 = restrict_to(x, {0});
    CHECK(r0.points() == 1);
    CHECK(validate(r0).ok());
    auto r01 = restrict_to(x, {0, 1});
    CHECK(r01.points() == 2);
    CHECK(validate(r01).ok());
  }

  SUBCASE("non subquotient rejected with witness") {
    // Z/2 acting on itself; {g} alone fails: g*(g g) = g stays, g*g leaves.
    auto z2 = FiniteMonoid::from_cayley({{0, 1}, {1, 0}});
    auto m = std::make_shared<const FiniteMonoid>(z2);
    auto r = right_regular(m);
    bool threw = false;
    try {
      restrict_to(r, {1});
    } catch (const NotSubquotientError& err) {
      threw = true;
      CHECK(err.s == 1);
      CHECK(err.m == 1);
      CHECK(err.n == 1);
    }
    CHECK(threw);
  }

  SUBCASE("subset entries validated") {
    auto x = chain_mset(2);
    CHECK_THROWS_AS(restrict_to(x, {0, 7}), InputError);
    CHECK_THROWS_AS(restrict_to(x, {0, 0}), InputError);
    // The empty restriction is the empty action.
    auto empty = restrict_to(x, {});
    CHECK(empty.points() == 0);
    CHECK(validate(empty).ok());
  }
}

TEST_CASE("sums and products") {
  auto m = mono_01();
  auto one = one_point_total(m);
  auto omega = one_point_unit(m);

  SUBCASE("sum is a disjoint union") {
    auto s = sum(one, omega);
    CHECK(s.points() == 2);
    CHECK(validate(s).ok());
    CHECK(s.act(0, 0) == 0);
    CHECK_FALSE(s.defined(1, 0));
  }

  SUBCASE("product defines where both factors do") {
    auto p = product(sum(one, omega), sum(one, omega));
    CHECK(p.points() == 4);
    CHECK(validate(p).ok());
    int defined = 0;
    for (int i = 0; i < 4; ++i)
      if (p.defined(i, 0)) ++defined;
    CHECK(defined == 1);  // only (total, total)
  }

  SUBCASE("mixed monoids rejected") {
    auto other = one_point_total(mono_0pm1());
    CHECK_THROWS_AS(sum(one, other), InputError);
    CHECK_THROWS_AS(product(one, other), InputError);
  }

  SUBCASE("sum and product are commutative and associative up to iso") {
    auto x = chain_mset(1);
    auto y = sum(one_point_unit(m), one_point_unit(m));
    auto z = one_point_total(m);
    CHECK(isomorphic(sum(x, y), sum(y, x)).has_value());
    CHECK(isomorphic(product(x, y), product(y, x)).has_value());
    CHECK(isomorphic(sum(sum(x, y), z), sum(x, sum(y, z))).has_value());
    CHECK(isomorphic(product(product(x, y), z), product(x, product(y, z)))
              .has_value());
    // The one-point total action is a unit for the product.
    CHECK(isomorphic(product(x, z), x).has_value());
  }
}

TEST_CASE("quotients") {
  auto m = mono_01();

  SUBCASE("merging the chain's two movable points") {
    // Every chain point other than 0 drops to 0 under the zero element.
    auto x = chain_mset(2);
    auto q = quotient(x, {{0}, {1, 2}});
    CHECK(q.points() == 2);
    CHECK(validate(q).ok());
  }

  SUBCASE("full merge of a total action") {
    auto x = one_point_total(m);
    auto y = sum(x, x);
    auto q = quotient(y, {{0, 1}});
    CHECK(q.points() == 1);
    CHECK(isomorphic(q, x).has_value());
  }

  SUBCASE("definedness mismatch rejected with witness") {
    auto y = sum(one_point_unit(m), one_point_total(m));
    bool threw = false;
    try {
      quotient(y, {{0, 1}});
    } catch (const NotCongruenceError& err) {
      threw = true;
      CHECK(err.m == 0);
      CHECK(((err.x == 0 && err.y == 1) || (err.x == 1 && err.y == 0)));
    }
    CHECK(threw);
  }

  SUBCASE("separating classes must stay together") {
    // Chain points 1 and 2 both drop to 0; merging {0,1} while keeping {2}
    // is fine, but over the sign monoid a genuine separation fails.
    auto s = mono_0pm1();
    auto r = right_regular(s);  // points 0,1,2 = elements 0,1,-1
    bool threw = false;
    try {
      quotient(r, {{0, 1}, {2}});  // 0*-1 = 0, 1*-1 = 2: classes separate
    } catch (const NotCongruenceError& err) {
      threw = true;
      CHECK(err.m == 2);
    }
    CHECK(threw);
  }

  SUBCASE("partition shape validated") {
    auto x = chain_mset(2);
    CHECK_THROWS_AS(quotient(x, {{0, 1}}), InputError);          // misses 2
    CHECK_THROWS_AS(quotient(x, {{0, 1}, {1, 2}}), InputError);  // overlap
    CHECK_THROWS_AS(quotient(x, {{0, 1, 2, 3}}), InputError);    // range
  }
}

TEST_CASE("morphisms") {
  auto m = mono_01();
  auto one = one_point_total(m);
  auto omega = one_point_unit(m);

  SUBCASE("identity maps are morphisms") {
    auto x = chain_mset(2);
    std::vector<int> ids = {0, 1, 2};
    CHECK(is_morphism({x, x, ids}));
    CHECK(is_lax_morphism({x, x, ids}));
  }

  SUBCASE("lax but not strict") {
    PointMap f{omega, one, {0}};
    CHECK(is_lax_morphism(f));
    CHECK_FALSE(is_morphism(f));
  }

  SUBCASE("strictness fails backwards too") {
    PointMap f{one, omega, {0}};
    CHECK_FALSE(is_lax_morphism(f));  // <- source defines more
    CHECK_FALSE(is_morphism(f));
  }

  SUBCASE("non-injective collapse can still be strict") {
    // Every chain point has a zero move, so collapsing the whole chain onto
    // the total point keeps definedness aligned in both directions.
    auto x = chain_mset(2);
    PointMap f{x, one, {0, 0, 0}};
    CHECK(is_lax_morphism(f));
    CHECK(is_morphism(f));
  }

  SUBCASE("image mismatch rejected") {
    auto x = chain_mset(1);
    // Swap the two points: 1*zero = 0 but f(1)*zero = f(0) requires 0->1->?
    PointMap f{x, x, {1, 0}};
    CHECK_FALSE(is_lax_morphism(f));
  }
}

TEST_CASE("isomorphism search") {
  auto m = mono_01();

  SUBCASE("relabelled copies are isomorphic") {
    auto x = chain_mset(3);
    // Rebuild with points listed in another order via a manual table.
    PartialMSet y(m, 4);
    // permutation 0->3, 1->2, 2->1, 3->0: top point is now 0, sink is 3
    std::vector<int> perm = {3, 2, 1, 0};
    for (int p = 0; p < 4; ++p)
      for (int t = 0; t < m->size(); ++t)
        if (x.defined(p, t)) y.set(perm[p], t, perm[x.act(p, t)]);
    REQUIRE(validate(y).ok());
    auto f = isomorphic(x, y);
    REQUIRE(f.has_value());
    CHECK(is_morphism(*f));
    // Any witness must be a bijection fixing the sink.
    std::vector<int> seen(4, 0);
    for (int img : f->images) seen[img] += 1;
    CHECK(seen == std::vector<int>{1, 1, 1, 1});
    CHECK(f->images[0] == perm[0]);
  }

  SUBCASE("point counts must match") {
    CHECK_FALSE(isomorphic(chain_mset(2), chain_mset(3)).has_value());
  }

  SUBCASE("definedness profiles separate") {
    auto one = one_point_total(m);
    auto omega = one_point_unit(m);
    CHECK_FALSE(isomorphic(one, omega).has_value());
    CHECK(isomorphic(omega, omega).has_value());
  }

  SUBCASE("same definedness profile, different structure") {
    // Three points, all with a zero move: two fixed points plus one faller
    // versus one fixed point with two fallers.
    auto a = sum(chain_mset(1), chain_mset(0));
    auto b = chain_mset(2);
    CHECK(a.points() == b.points());
    CHECK_FALSE(isomorphic(a, b).has_value());
  }

  SUBCASE("different monoids rejected outright") {
    auto x = one_point_total(mono_01());
    auto y = one_point_total(mono_0pm1());
    CHECK_THROWS_AS(isomorphic(x, y), InputError);
  }
}

TEST_CASE("weak orbit decomposition helper on sums") {
  auto m = mono_0pm1();
  auto r = right_regular(m);
  auto two = sum(r, r);
  CHECK(validate(two).ok());
  CHECK(two.points() == 6);
}
