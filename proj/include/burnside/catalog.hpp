#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnside/monoid.hpp"
#include "burnside/mset.hpp"

namespace burnside {

// {0, 1} under multiplication.
MonoidPtr mono_01();

// {0, +1, -1} under multiplication.
MonoidPtr mono_0pm1();

// The chain {0, ..., n} over mono_01: x * 0 = 0, x * 1 = x.
PartialMSet chain_mset(int n);

// Full transformation monoid on {1..n}, degrees 1 through 4.
MonoidPtr full_transformation(int n);

// All n x n matrices over GF(q); n <= 2, q in {2, 3}.
MonoidPtr matrix_monoid(int n, int q);

// {1, a, b, e, f}, all idempotent: {a, b} and {e, f} are right-zero bands and
// e, f act as two-sided identities on {a, b}.
MonoidPtr five_element_nonsubring();

// Thirteen signed 3x3 integer matrices: the identity plus the sign pairs of
// three rank-one matrices with equal rows and three with negated lower rows.
MonoidPtr appendix_counterexample();

struct CatalogEntry {
  std::string name;
  std::string args;     // "", "n", or "n q"
  std::string summary;
};

const std::vector<CatalogEntry>& catalog_entries();

// A built catalog object: always a monoid, sometimes also an action over it,
// plus the expected facts the test suite pins down.
struct CatalogObject {
  std::string name;
  MonoidPtr monoid;
  std::optional<PartialMSet> mset;
  std::map<std::string, long long> notes;
};

// Accepts "name", "name k", "name k q"; colons may replace spaces.
CatalogObject catalog_build(const std::string& request);

}  // namespace burnside
