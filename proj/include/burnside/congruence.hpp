#pragma once

#include <optional>
#include <vector>

#include "burnside/green.hpp"
#include "burnside/mset.hpp"

namespace burnside {

// A right congruence on the R-class of an idempotent e, i.e. on the
// restriction of the right regular action to R_e.  classes partition the
// local indices 0..|R_e|-1 (r_class[i] is the monoid element of local i) and
// are ordered by least member.
struct RightCongruence {
  int e = 0;
  std::vector<int> r_class;
  std::vector<std::vector<int>> classes;

  int local_of(int monoid_elem) const;
  std::vector<int> class_of_map() const;  // local index -> class id
};

// Elements of the R-class of e, ascending.
std::vector<int> r_class_elements(const GreenData& g, int e);

// The R-class of e as an M-set (a strong orbit of the right regular action).
PartialMSet r_class_action(const MonoidPtr& m, const GreenData& g, int e);

// Wraps a partition of R_e given by monoid elements, validating that it is a
// right congruence (NotCongruenceError otherwise, with local witnesses).
RightCongruence make_right_congruence(
    const MonoidPtr& m, const GreenData& g, int e,
    const std::vector<std::vector<int>>& classes_of_elements);

// R_e/cong as an M-set.
PartialMSet congruence_quotient(const MonoidPtr& m, const GreenData& g,
                                const RightCongruence& c);

// All right congruences on R_e, deterministically ordered.  Uses direct
// partition filtering for |R_e| <= 8 and join-closure of principal
// congruences above that; throws CapError when |R_e| exceeds the cap.
std::vector<RightCongruence> enumerate_right_congruences(const MonoidPtr& m,
                                                         const GreenData& g,
                                                         int e, int cap = 12);

// Test-oracle entry points for cross-checking the two enumeration paths.
std::vector<RightCongruence> enumerate_congruences_by_filter(const MonoidPtr& m,
                                                             const GreenData& g,
                                                             int e);
std::vector<RightCongruence> enumerate_congruences_by_joins(const MonoidPtr& m,
                                                            const GreenData& g,
                                                            int e);

// The congruence whose classes are the left cosets Kr, for a subgroup K of
// the maximal subgroup at e.
RightCongruence congruence_from_subgroup(const MonoidPtr& m, const GreenData& g,
                                         int e, const std::vector<int>& k);

// R_e/K as an M-set.
PartialMSet coset_quotient(const MonoidPtr& m, const GreenData& g, int e,
                           const std::vector<int>& k);

// True when every congruence class lies inside a single H-class.
bool congruence_contained_in_h(const GreenData& g, const RightCongruence& c);

// For a congruence contained in H: the class of e, as a sorted set of monoid
// elements.  Asserts the class is a subgroup and regenerates the congruence
// from it.
std::vector<int> identity_class_subgroup(const MonoidPtr& m, const GreenData& g,
                                         const RightCongruence& c);

// The coarsest right congruence on R_e: r and s are related iff rm falls in
// J_e for exactly the same m.
RightCongruence max_congruence(const MonoidPtr& m, const GreenData& g, int e);

struct CosetMorphisms {
  bool exists = false;
  int witness_h = -1;               // element of H_e with hKh^-1 inside L
  std::optional<PointMap> map;      // Kr -> L(hr)
};

// Morphisms R_e/K -> R_e/L exist iff K is contained in some h^-1 L h.
CosetMorphisms coset_quotient_morphisms(const MonoidPtr& m, const GreenData& g,
                                        int e, const std::vector<int>& k,
                                        const std::vector<int>& l);

// R_e/K and R_e/L are isomorphic iff K and L are conjugate in H_e.
bool coset_quotient_isomorphic(const MonoidPtr& m, const GreenData& g, int e,
                               const std::vector<int>& k,
                               const std::vector<int>& l);

}  // namespace burnside
