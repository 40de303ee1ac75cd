#include <algorithm>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/monoid.hpp"
#include "doctest.h"

using namespace burnside;

namespace {

// Independent closure check: multiply every pair and look the result up.
void check_is_monoid(const FiniteMonoid& m) {
  const int n = m.size();
  const int e = m.identity();
  for (int a = 0; a < n; ++a) {
    CHECK(m.mul(e, a) == a);
    CHECK(m.mul(a, e) == a);
    for (int b = 0; b < n; ++b) {
      const int ab = m.mul(a, b);
      REQUIRE(ab >= 0);
      REQUIRE(ab < n);
      for (int c = 0; c < n; ++c)
        CHECK(m.mul(ab, c) == m.mul(a, m.mul(b, c)));
    }
  }
}

}  // namespace

TEST_CASE("cayley table construction") {
  SUBCASE("two element monoid with zero") {
    auto m = FiniteMonoid::from_cayley({{0, 0}, {0, 1}},
                                       std::vector<std::string>{"0", "1"});
    CHECK(m.size() == 2);
    CHECK(m.identity() == 1);
    CHECK(m.is_idempotent(0));
    CHECK(m.is_idempotent(1));
    CHECK(m.label(0) == "0");
    check_is_monoid(m);
  }

  SUBCASE("ragged table rejected") {
    CHECK_THROWS_AS(FiniteMonoid::from_cayley({{0, 0}, {0}}), InputError);
  }

  SUBCASE("out of range entry rejected") {
    CHECK_THROWS_AS(FiniteMonoid::from_cayley({{0, 2}, {0, 1}}), InputError);
  }

  SUBCASE("missing identity rejected") {
    CHECK_THROWS_AS(FiniteMonoid::from_cayley({{0, 0}, {0, 0}}), InputError);
  }

  SUBCASE("non-associative table rejected with witness") {
    // 0 is the identity; (1*1)*2 = 1 while 1*(1*2) = 2.
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    bool threw = false;
    try {
      FiniteMonoid::from_cayley(t);
    } catch (const NonAssociativeError& err) {
      threw = true;
      const int a = err.a, b = err.b, c = err.c;
      CHECK(t[t[a][b]][c] != t[a][t[b][c]]);
    }
    CHECK(threw);
  }

  SUBCASE("label count must match size") {
    CHECK_THROWS_AS(FiniteMonoid::from_cayley(
                        {{0, 0}, {0, 1}}, std::vector<std::string>{"x"}),
                    InputError);
  }
}

TEST_CASE("transformation closures") {
  SUBCASE("degree 1 gives the trivial monoid") {
    auto m = generate_from_transformations(1, {});
    CHECK(m.size() == 1);
    check_is_monoid(m);
  }

  SUBCASE("full transformation closure sizes") {
    auto t2 = generate_from_transformations(2, {{2, 1}, {1, 1}});
    CHECK(t2.size() == 4);
    check_is_monoid(t2);

    auto t3 = generate_from_transformations(
        3, {{2, 1, 3}, {2, 3, 1}, {1, 2, 2}});
    CHECK(t3.size() == 27);
    check_is_monoid(t3);

    auto t4 = generate_from_transformations(
        4, {{2, 1, 3, 4}, {2, 3, 4, 1}, {1, 2, 3, 3}});
    CHECK(t4.size() == 256);
  }

  SUBCASE("identity is element 0 and labels are one-based image lists") {
    auto t2 = generate_from_transformations(2, {{2, 1}, {1, 1}});
    CHECK(t2.identity() == 0);
    CHECK(t2.label(0) == "[1,2]");
    CHECK(t2.label(1) == "[2,1]");
  }

  SUBCASE("symmetric group from permutation generators") {
    auto s3 = generate_from_transformations(3, {{2, 1, 3}, {2, 3, 1}});
    CHECK(s3.size() == 6);
    check_is_monoid(s3);
  }

  SUBCASE("bad generators rejected") {
    CHECK_THROWS_AS(generate_from_transformations(2, {{1}}), InputError);
    CHECK_THROWS_AS(generate_from_transformations(2, {{0, 1}}), InputError);
    CHECK_THROWS_AS(generate_from_transformations(2, {{1, 3}}), InputError);
    CHECK_THROWS_AS(generate_from_transformations(0, {}), InputError);
  }

  SUBCASE("element cap enforced") {
    ClosureOptions opts;
    opts.element_cap = 10;
    CHECK_THROWS_AS(generate_from_transformations(
                        3, {{2, 1, 3}, {2, 3, 1}, {1, 2, 2}}, opts),
                    CapError);
  }
}

TEST_CASE("finite field arithmetic") {
  SUBCASE("prime fields") {
    GaloisField f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.mul(2, 3) == 1);
  }

  SUBCASE("GF(4)") {
    GaloisField f(4);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.add(2, 3) == 1);
    CHECK(f.mul(2, 2) == 3);  // x * x = x + 1
    CHECK(f.mul(2, 3) == 1);  // x * (x+1) = 1
  }

  SUBCASE("GF(8)") {
    GaloisField f(8);
    CHECK(f.mul(2, 4) == 3);  // x * x^2 = x + 1
  }

  SUBCASE("GF(9)") {
    GaloisField f(9);
    CHECK(f.mul(3, 3) == 2);  // x * x = 2
  }

  SUBCASE("field axioms hold for every supported order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      GaloisField f(q);
      for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        for (int b = 0; b < q; ++b) {
          CHECK(f.add(a, b) == f.add(b, a));
          CHECK(f.mul(a, b) == f.mul(b, a));
          for (int c = 0; c < q; ++c) {
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          }
        }
      }
      // Every nonzero element has a multiplicative inverse.
      for (int a = 1; a < q; ++a) {
        bool found = false;
        for (int b = 1; b < q; ++b)
          if (f.mul(a, b) == 1) found = true;
        CHECK(found);
      }
    }
  }

  SUBCASE("non prime powers rejected") {
    CHECK_THROWS_AS(GaloisField(6), InputError);
    CHECK_THROWS_AS(GaloisField(1), InputError);
    CHECK_THROWS_AS(GaloisField(10), InputError);
  }
}

TEST_CASE("matrix monoid closures") {
  SUBCASE("unipotent matrix over GF(2) generates two elements") {
    auto m = generate_from_matrices(2, 2, {{{1, 1}, {0, 1}}});
    CHECK(m.size() == 2);
    check_is_monoid(m);
  }

  SUBCASE("all one-by-one matrices over GF(3)") {
    auto m = generate_from_matrices(3, 1, {{{0}}, {{1}}, {{2}}});
    CHECK(m.size() == 3);
    check_is_monoid(m);
  }

  SUBCASE("integer entries allowed with field order zero") {
    // Sign flips on the line: {1, -1} under multiplication.
    auto m = generate_from_matrices(0, 1, {{{-1}}});
    CHECK(m.size() == 2);
    check_is_monoid(m);
  }

  SUBCASE("bad matrix shapes rejected") {
    CHECK_THROWS_AS(generate_from_matrices(2, 2, {{{1, 1}}}), InputError);
    CHECK_THROWS_AS(generate_from_matrices(2, 2, {{{1, 1}, {0, 1, 0}}}),
                    InputError);
  }

  SUBCASE("field entries are reduced modulo the field order") {
    // [[1,2],[0,1]] over GF(2) reduces to the identity matrix.
    auto m = generate_from_matrices(2, 2, {{{1, 2}, {0, 1}}});
    CHECK(m.size() == 1);
  }
}
