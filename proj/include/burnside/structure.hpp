#pragma once

#include <utility>
#include <vector>

#include "burnside/green.hpp"
#include "burnside/mset.hpp"
#include "burnside/ring.hpp"

namespace burnside {

// Distinguishability of a regular J-class: every pair of its L-classes is
// separated by some R-class containing an idempotent in exactly one of the
// two intersections.
struct JClassDistinguishability {
  int j_class = -1;
  bool distinguishable = true;
  std::vector<std::pair<int, int>> indistinct_pairs;  // L-class ids, first < second
};

struct DistinguishabilityReport {
  std::vector<JClassDistinguishability> regular;  // ascending J-class id
  bool monoid_distinguishable = true;
  bool er = false;                     // every R-class has at most one idempotent
  bool commuting_idempotents = false;
};

// Computes the idempotent-pattern criterion per J-class and cross-checks it
// against products staying in the J-class; also asserts commuting
// idempotents imply the unique-idempotent-per-R-class property, which in
// turn implies distinguishability.
DistinguishabilityReport distinguishability(const FiniteMonoid& m, const GreenData& g);

bool is_er(const FiniteMonoid& m, const GreenData& g);
bool has_commuting_idempotents(const FiniteMonoid& m, const GreenData& g);

// The Burnside ring of the maximal subgroup at a designated idempotent,
// handled independently of the monoid machinery: conjugacy classes of
// subgroups and their coset spaces.
struct GroupBurnsideRing {
  MaximalSubgroup group;
  MonoidPtr gm;                                  // the group as a monoid of its own
  std::vector<std::vector<int>> subgroup_reps;   // conjugacy reps, monoid element ids
  std::vector<PartialMSet> coset_spaces;         // over gm, aligned with subgroup_reps
  MultiplicationCube cube;                       // products of coset-space classes
};

GroupBurnsideRing group_burnside_ring(const MonoidPtr& m, const GreenData& g, int e);

// The carrier x*e with the restricted action of the maximal subgroup at e;
// always a total action (asserted).
PartialMSet restrict_to_group(const PartialMSet& x, const MaximalSubgroup& group,
                              const MonoidPtr& gm);

// Coordinates of a total group action over the coset-space basis, by orbit
// decomposition and stabilizer conjugacy matching.
std::vector<long long> group_burnside_decompose(const PartialMSet& y,
                                                const GroupBurnsideRing& ring);

// matrix[i][j] = number of points of the j-th coset space fixed by every
// element of the i-th subgroup representative.
std::vector<std::vector<long long>> group_marks_classical(const GroupBurnsideRing& ring);

// Everything the structure theorem talks about: the coordinatewise map into
// the product of group Burnside rings, its matrix over the basis, the span of
// the subgroup-determined classes, and the rank comparison.
struct StructureAnalysis {
  MonoidPtr monoid;
  BasisPtr basis;
  DistinguishabilityReport report;
  MultiplicationCube cube;                       // basis products
  std::vector<int> designated;                   // designated idempotents, J-descending order
  std::vector<GroupBurnsideRing> rings;          // aligned with designated
  std::vector<std::pair<int, int>> row_of;       // phi row -> (ring index, subgroup index)
  std::vector<std::vector<long long>> phi_matrix;  // rows x basis columns
  std::vector<char> subgroup_determined;         // per basis class
  std::vector<int> g_basis;                      // basis index per (e, K) in row order
  std::vector<std::vector<long long>> structure_mat;  // square, rows x g_basis
  bool distinguishable = false;
  int rank_burnside = 0;
  int rank_product = 0;
};

// Builds the full analysis and asserts the theorems it rests on: the map is a
// ring homomorphism on basis pairs, sends the one class to the identity
// tuple, is injective on subgroup-determined classes, and its matrix on them
// is upper triangular with unit diagonal; the distinguishability verdict must
// match the rank comparison.
StructureAnalysis analyze_structure(const BasisPtr& basis);

// Coordinates of phi(x): one coefficient vector per designated idempotent.
std::vector<std::vector<long long>> phi(const StructureAnalysis& a,
                                        const BurnsideElement& x);

// Report on the full transformation monoid T_n (n <= 3): rank against the
// 1 + sum over ranks of subgroup-class counts formula, the identity class as
// the only non-subgroup-determined one, ideal closure of the other classes,
// and a full multiplication-table comparison with the direct product of the
// integers and the symmetric groups' Burnside rings.  All four facts are
// asserted for n >= 2 and merely reported for n = 1.
struct TnReport {
  int n = 0;
  int rank = 0;
  int formula_rank = 0;
  bool rank_matches = false;
  bool one_only_non_subgroup_determined = false;
  bool ideal_closed = false;
  bool product_ring_match = false;
  long long embedding_det = 0;
  StructureAnalysis analysis;
};

TnReport tn_report(int n, int congruence_cap = 12);

}  // namespace burnside
