#include <map>
#include <set>
#include <string>
#include <vector>

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"
#include "burnside/green.hpp"
#include "burnside/orbits.hpp"
#include "burnside/ring.hpp"
#include "burnside/structure.hpp"
#include "doctest.h"

using namespace burnside;

namespace {

long long computed_rank(const MonoidPtr& m) {
  return static_cast<long long>(compute_basis(m)->size());
}

long long computed_distinguishable(const MonoidPtr& m) {
  auto g = compute_green(*m);
  return distinguishability(*m, g).monoid_distinguishable ? 1 : 0;
}

}  // namespace

TEST_CASE("catalog listing names every buildable entry") {
  const auto& entries = catalog_entries();
  REQUIRE(entries.size() == 7);

  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK(!e.summary.empty());
    names.insert(e.name);
  }
  CHECK(names == std::set<std::string>{
                     "mono_01", "mono_0pm1", "chain_mset", "full_transformation",
                     "matrix_monoid", "five_element_nonsubring",
                     "appendix_counterexample"});

  // Argument signatures drive how many integers the builder expects.
  std::map<std::string, std::string> args;
  for (const auto& e : entries) args[e.name] = e.args;
  CHECK(args["mono_01"].empty());
  CHECK(args["chain_mset"] == "n");
  CHECK(args["matrix_monoid"] == "n q");
}

TEST_CASE("every catalog monoid is a stable monoid") {
  std::vector<std::string> requests = {
      "mono_01",      "mono_0pm1",          "chain_mset 3",
      "full_transformation 1", "full_transformation 2", "full_transformation 3",
      "full_transformation 4", "matrix_monoid 1 2",     "matrix_monoid 1 3",
      "matrix_monoid 2 2",     "matrix_monoid 2 3",
      "five_element_nonsubring", "appendix_counterexample"};
  for (const auto& req : requests) {
    CAPTURE(req);
    auto obj = catalog_build(req);
    REQUIRE(obj.monoid != nullptr);
    auto g = compute_green(*obj.monoid);
    CHECK(check_stability(*obj.monoid, g));
    if (obj.mset) CHECK(validate(*obj.mset).ok());
    auto it = obj.notes.find("size");
    if (it != obj.notes.end()) CHECK(it->second == obj.monoid->size());
  }
}

TEST_CASE("two and three element monoid notes match computation") {
  auto a = catalog_build("mono_01");
  CHECK(a.notes == std::map<std::string, long long>{
                       {"size", 2}, {"basis_rank", 2}, {"distinguishable", 1}});
  CHECK(computed_rank(a.monoid) == 2);
  CHECK(computed_distinguishable(a.monoid) == 1);
  CHECK_FALSE(a.mset.has_value());

  auto b = catalog_build("mono_0pm1");
  CHECK(b.notes == std::map<std::string, long long>{
                       {"size", 3}, {"basis_rank", 3}, {"distinguishable", 1}});
  CHECK(computed_rank(b.monoid) == 3);
  CHECK(computed_distinguishable(b.monoid) == 1);
}

TEST_CASE("chain notes match orbit counts") {
  for (int n : {0, 1, 4}) {
    CAPTURE(n);
    auto obj = catalog_build("chain_mset " + std::to_string(n));
    REQUIRE(obj.mset.has_value());
    const auto& x = *obj.mset;
    CHECK(obj.notes.at("points") == x.points());
    CHECK(obj.notes.at("weak_orbits") ==
          static_cast<long long>(weak_orbits(x).size()));
    auto g = compute_green(*obj.monoid);
    CHECK(obj.notes.at("strong_orbits") ==
          static_cast<long long>(strong_orbits(x, g).size()));
  }
}

TEST_CASE("full transformation notes match computation") {
  // Degrees 1..3 are small enough to recompute rank and distinguishability.
  const long long sizes[] = {0, 1, 4, 27, 256};
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto obj = catalog_build("full_transformation " + std::to_string(n));
    CHECK(obj.monoid->size() == sizes[n]);
    CHECK(obj.notes.at("size") == sizes[n]);
    CHECK(obj.notes.at("basis_rank") == computed_rank(obj.monoid));
    CHECK(obj.notes.at("distinguishable") == computed_distinguishable(obj.monoid));
  }

  // Degree 4 is beyond the default decomposition caps, so no rank is claimed.
  auto t4 = catalog_build("full_transformation 4");
  CHECK(t4.monoid->size() == 256);
  CHECK(t4.notes.at("size") == 256);
  CHECK(t4.notes.count("basis_rank") == 0);
  CHECK(t4.notes.at("distinguishable") == 0);
  CHECK(computed_distinguishable(t4.monoid) == 0);
}

TEST_CASE("matrix monoid notes match computation") {
  struct Case {
    int n, q;
    long long size;
    long long rank;  // -1 when the catalog makes no claim
  };
  for (auto c : std::vector<Case>{{1, 2, 2, 2}, {1, 3, 3, 3}, {2, 2, 16, 6}}) {
    CAPTURE(c.n);
    CAPTURE(c.q);
    auto obj = catalog_build("matrix_monoid " + std::to_string(c.n) + " " +
                             std::to_string(c.q));
    CHECK(obj.monoid->size() == c.size);
    CHECK(obj.notes.at("size") == c.size);
    CHECK(obj.notes.at("basis_rank") == c.rank);
    CHECK(computed_rank(obj.monoid) == c.rank);
    CHECK(obj.notes.at("distinguishable") == 1);
    CHECK(computed_distinguishable(obj.monoid) == 1);
  }

  auto big = catalog_build("matrix_monoid 2 3");
  CHECK(big.monoid->size() == 81);
  CHECK(big.notes.at("size") == 81);
  CHECK(big.notes.count("basis_rank") == 0);
  CHECK(big.notes.at("distinguishable") == 1);
  CHECK(computed_distinguishable(big.monoid) == 1);
}

TEST_CASE("five idempotent monoid notes match computation") {
  auto obj = catalog_build("five_element_nonsubring");
  CHECK(obj.notes == std::map<std::string, long long>{{"size", 5},
                                                      {"idempotents", 5},
                                                      {"basis_rank", 5},
                                                      {"distinguishable", 0}});
  auto g = compute_green(*obj.monoid);
  CHECK(static_cast<long long>(g.idempotents.size()) == obj.notes.at("idempotents"));
  CHECK(computed_rank(obj.monoid) == 5);
  CHECK(computed_distinguishable(obj.monoid) == 0);
}

TEST_CASE("signed matrix monoid notes match computation") {
  auto obj = catalog_build("appendix_counterexample");
  CHECK(obj.notes == std::map<std::string, long long>{{"size", 13},
                                                      {"r_class_size", 6},
                                                      {"h_e_order", 2},
                                                      {"distinguishable", 0}});
  REQUIRE(obj.monoid->size() == 13);

  auto g = compute_green(*obj.monoid);
  CHECK(computed_distinguishable(obj.monoid) == 0);

  // The quoted R-class size and group order belong to the big regular
  // J-class, the one with a nontrivial maximal subgroup.
  bool found = false;
  for (size_t j = 0; j < g.j_classes.size(); ++j) {
    if (!g.regular_j[j]) continue;
    int e = g.designated_idem[j];
    auto h = maximal_subgroup(*obj.monoid, g, e);
    if (h.order() == 1) continue;
    CHECK_FALSE(found);
    found = true;
    CHECK(h.order() == obj.notes.at("h_e_order"));
    CHECK(static_cast<long long>(g.r_classes[g.r_class[e]].size()) ==
          obj.notes.at("r_class_size"));
  }
  CHECK(found);
}

TEST_CASE("catalog requests accept colon and comma separators") {
  auto spaced = catalog_build("chain_mset 3");
  auto coloned = catalog_build("chain_mset:3");
  auto commaed = catalog_build("chain_mset,3");
  CHECK(spaced.notes == coloned.notes);
  CHECK(spaced.notes == commaed.notes);
  REQUIRE(coloned.mset.has_value());
  CHECK(coloned.mset->points() == 4);

  auto two = catalog_build("matrix_monoid:2:2");
  CHECK(two.monoid->size() == 16);
}

TEST_CASE("catalog requests reject malformed input") {
  CHECK_THROWS_AS(catalog_build("no_such_entry"), InputError);
  CHECK_THROWS_AS(catalog_build("chain_mset"), InputError);         // missing arg
  CHECK_THROWS_AS(catalog_build("chain_mset 1 2"), InputError);     // extra arg
  CHECK_THROWS_AS(catalog_build("mono_01 1"), InputError);          // takes none
  CHECK_THROWS_AS(catalog_build("chain_mset x"), InputError);       // not an integer
  CHECK_THROWS_AS(catalog_build("chain_mset 2x"), InputError);      // trailing junk
  CHECK_THROWS_AS(catalog_build("chain_mset -1"), InputError);      // negative length
  CHECK_THROWS_AS(catalog_build("full_transformation 0"), InputError);
  CHECK_THROWS_AS(catalog_build("full_transformation 5"), InputError);
  CHECK_THROWS_AS(catalog_build("matrix_monoid 3 2"), InputError);
  CHECK_THROWS_AS(catalog_build("matrix_monoid 2 5"), InputError);
}
