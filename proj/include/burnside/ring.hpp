#pragma once

#include <memory>
#include <string>
#include <vector>

#include "burnside/green.hpp"
#include "burnside/mset.hpp"
#include "burnside/orbits.hpp"

namespace burnside {

// An isomorphism class of strong orbits, represented canonically as a
// quotient of the R-class of a designated idempotent by a right congruence.
struct StrongOrbitClass {
  RightCongruence cong;
  PartialMSet rep;  // R_e / cong
  int apex_j = -1;
  long long aut_order = 0;
  std::string encoding;  // "e<idx>:<restricted growth string>", deterministic
};

// Free basis of the Burnside ring: one class per isomorphism type of strong
// orbit, ordered topologically by "admits a lax morphism into" (sources
// first); ties broken by descending point count, then by encoding.
struct OrbitBasis {
  MonoidPtr monoid;
  GreenData green;
  std::vector<StrongOrbitClass> classes;
  int one_index = -1;  // the class of the one-point total M-set

  int size() const { return static_cast<int>(classes.size()); }
};

using BasisPtr = std::shared_ptr<const OrbitBasis>;

BasisPtr compute_basis(const MonoidPtr& m, int congruence_cap = 12);

// Element of the Burnside ring in coordinates over a basis.
struct BurnsideElement {
  BasisPtr basis;
  std::vector<long long> coeffs;
};

// Multiplicities of each basis class among the strong orbits of x.
BurnsideElement class_of(const PartialMSet& x, const BasisPtr& basis);

// Index of the basis class isomorphic to the given strong orbit action.
int match_class(const PartialMSet& orbit_action, const OrbitBasis& basis);

BurnsideElement ring_zero(const BasisPtr& basis);
BurnsideElement ring_one(const BasisPtr& basis);
BurnsideElement ring_add(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement ring_scale(long long c, const BurnsideElement& a);
BurnsideElement ring_mul(const BurnsideElement& a, const BurnsideElement& b);

// cube[i][j] = coordinates of [O_i][O_j]; symmetric in i, j.
using MultiplicationCube = std::vector<std::vector<std::vector<long long>>>;
MultiplicationCube multiplication_table(const BasisPtr& basis);

// Number of lax morphisms from a strongly connected partial action into x.
// A lax morphism out of a strong orbit is determined by the image of one
// base point, so this runs in |x| * |M| after fixing the base.
long long lax_count(const PartialMSet& orbit, const PartialMSet& x);

// Exhaustive count over all point maps; guarded by a gate on |x|^|orbit|.
long long lax_count_oracle(const PartialMSet& orbit, const PartialMSet& x,
                           long long gate = 1000000);

struct MarksTable {
  BasisPtr basis;
  std::vector<std::vector<long long>> matrix;  // matrix[i][j] = #Lax(O_i, O_j)
};

// Upper triangular with the automorphism orders on the diagonal; both facts
// are asserted.
MarksTable marks_table(const BasisPtr& basis);

struct SemisimplicityCertificate {
  long long determinant = 0;
  long long index = 0;  // product of the automorphism orders
  bool semisimple = false;
  bool multiplicative = false;  // mark vectors multiply through products
  int pairs_checked = 0;
};

// Nonzero determinant certifies semisimplicity over the rationals; the
// multiplicativity of marks is checked on all basis pairs plus seeded random
// sums.
SemisimplicityCertificate semisimplicity_certificate(const MarksTable& marks,
                                                     unsigned seed = 12345);

}  // namespace burnside
