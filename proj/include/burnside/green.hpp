#pragma once

#include <vector>

#include "burnside/monoid.hpp"

namespace burnside {

// Green's preorders and equivalence classes of a finite monoid.
//
// geq_r[x][y] holds iff y lies in xM (x is R-above y), and similarly for the
// left and two-sided versions.  Class ids are assigned so classes sorted by
// their least element get increasing ids; elements inside a class are sorted.
struct GreenData {
  std::vector<std::vector<char>> geq_r, geq_l, geq_j;
  std::vector<int> r_class, l_class, j_class, h_class;
  std::vector<std::vector<int>> r_classes, l_classes, j_classes, h_classes;
  std::vector<int> idempotents;
  std::vector<char> regular_j;          // indexed by J-class id
  std::vector<int> designated_idem;     // least idempotent per regular J-class id, -1 if irregular

  bool r_equiv(int x, int y) const { return r_class[x] == r_class[y]; }
  bool l_equiv(int x, int y) const { return l_class[x] == l_class[y]; }
  bool j_equiv(int x, int y) const { return j_class[x] == j_class[y]; }
  // strict J comparison on class ids: true iff class a > class b in the J order
  bool j_class_above(int a, int b) const;
};

GreenData compute_green(const FiniteMonoid& m);

// Finite monoids are stable: x J xm implies x R xm, and x J mx implies
// x L mx.  Returns true when both directions hold everywhere.
bool check_stability(const FiniteMonoid& m, const GreenData& g);

// The H-class of an idempotent e, which is the largest subgroup of M with
// identity e.  elements is sorted ascending; table is over group-local
// indices.
struct MaximalSubgroup {
  int e = 0;
  std::vector<int> elements;            // monoid element ids, sorted
  std::vector<int> table;               // row-major |H| x |H|, local ids
  std::vector<int> inverse;             // local ids
  int local_identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
  int index_of(int monoid_elem) const;  // -1 when not in H
  int gmul(int a, int b) const { return table[a * order() + b]; }
  int ginv(int a) const { return inverse[a]; }
};

// Throws unless e is idempotent; verifies the H-class is a group.
MaximalSubgroup maximal_subgroup(const FiniteMonoid& m, const GreenData& g, int e);

// Subgroups are handled as sorted vectors of monoid element ids.
std::vector<std::vector<int>> all_subgroups(const MaximalSubgroup& h);

// One representative per conjugacy class: the lexicographically least element
// set in its class.  Representatives are ordered by size, then lexicographic.
std::vector<std::vector<int>> subgroups_up_to_conjugacy(const MaximalSubgroup& h);

bool subgroups_conjugate(const MaximalSubgroup& h, const std::vector<int>& k,
                         const std::vector<int>& l);

// h^-1 * K * h as a sorted monoid-element set (h is a monoid element id in H).
std::vector<int> conjugate_subgroup(const MaximalSubgroup& h,
                                    const std::vector<int>& k, int conj);

// Normalizer of K in H, as sorted monoid element ids.
std::vector<int> normalizer(const MaximalSubgroup& h, const std::vector<int>& k);

bool is_subgroup_of(const MaximalSubgroup& h, const std::vector<int>& k);

}  // namespace burnside
