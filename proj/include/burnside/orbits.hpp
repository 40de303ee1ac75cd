#pragma once

#include <memory>
#include <vector>

#include "burnside/congruence.hpp"
#include "burnside/green.hpp"
#include "burnside/mset.hpp"

namespace burnside {

// Connected components of the undirected action graph, ordered by least
// point.
std::vector<std::vector<int>> weak_orbits(const PartialMSet& x);

// A strongly connected component of the directed action graph, together with
// the restricted action (strong orbits are always subquotients) and the apex:
// the J-class id of the unique minimal J-class of elements that act
// somewhere on the orbit.
struct StrongOrbit {
  std::shared_ptr<const PartialMSet> parent;
  std::vector<int> points;  // parent point ids, ascending
  PartialMSet action;
  int apex_j = -1;
};

std::vector<StrongOrbit> strong_orbits(const PartialMSet& x, const GreenData& g);

// Apex of a strongly connected partial action: J-minimal elements among the
// non-annihilators.  Asserts they form one J-class whose J-upset is exactly
// the non-annihilator set.
int compute_apex(const PartialMSet& orbit_action, const FiniteMonoid& m,
                 const GreenData& g);

// Canonical form of a strong orbit: the designated idempotent e of its apex
// J-class together with a right congruence on R_e, such that R_e/cong is
// isomorphic to the orbit.  The witness iso sends the class of r to the orbit
// point alpha*r, where alpha is the least orbit point fixed by e.
struct CanonicalOrbit {
  RightCongruence cong;
  PartialMSet quotient_rep;
  int alpha = -1;                        // local orbit point with alpha*e = alpha
  std::vector<int> class_to_point;       // congruence class -> local orbit point
};

CanonicalOrbit canonical_form(const StrongOrbit& orbit, const MonoidPtr& m,
                              const GreenData& g);

// Automorphism group of a strong orbit in canonical form (e, cong):
// stabilizer quotient inside the maximal subgroup at e.  stab_l collects the
// h that preserve the congruence under left translation, kern those congruent
// to e; automorphisms are the induced permutations of the quotient's points.
struct OrbitAutomorphisms {
  std::vector<int> stab_l;  // subgroup of H_e, monoid elements
  std::vector<int> kern;    // subgroup of stab_l
  std::vector<std::vector<int>> automorphisms;  // permutations of quotient points
  long long order = 0;
};

OrbitAutomorphisms aut_group(const MonoidPtr& m, const GreenData& g,
                             const RightCongruence& cong);

}  // namespace burnside
