#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burnside/monoid.hpp"

namespace burnside {

// A finite set of points with a partial right action of a finite monoid.
// Entry -1 means "undefined".  Required axioms (see validate):
//   x*1 is defined and equals x;
//   (x*m)*n and x*(mn) are both defined and equal, or both undefined.
class PartialMSet {
 public:
  PartialMSet(MonoidPtr monoid, int points);

  const MonoidPtr& monoid() const { return monoid_; }
  int points() const { return points_; }
  int msize() const { return monoid_->size(); }

  int act(int x, int m) const { return table_[x * msize() + m]; }
  bool defined(int x, int m) const { return act(x, m) >= 0; }
  void set(int x, int m, int y) { table_[x * msize() + m] = y; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int x) const;
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const PartialMSet& a, const PartialMSet& b) {
    return a.points_ == b.points_ && a.table_ == b.table_ &&
           *a.monoid_ == *b.monoid_;
  }

 private:
  MonoidPtr monoid_;
  int points_;
  std::vector<int> table_;  // row-major points x msize
  std::vector<std::string> labels_;
};

struct ValidationReport {
  enum class Kind { ok, identity, associativity };
  Kind kind = Kind::ok;
  int x = -1, m = -1, n = -1;  // witness, meaning depends on kind
  bool ok() const { return kind == Kind::ok; }
  std::string message() const;
};

ValidationReport validate(const PartialMSet& x);

// True when the two carriers live over the same monoid (pointer or structural
// equality).
bool same_monoid(const PartialMSet& x, const PartialMSet& y);

// M acting on itself by right multiplication; a total action.
PartialMSet right_regular(MonoidPtr monoid);

// Restriction of the action to a subset of points.  The subset must be a
// subquotient: s*(mn) inside the subset forces s*m inside it; otherwise
// NotSubquotientError (witness in parent point / monoid coordinates).
// Point order follows the sorted subset.
PartialMSet restrict_to(const PartialMSet& x, std::vector<int> points);

// Disjoint union; points of x keep their ids, points of y are shifted up.
PartialMSet sum(const PartialMSet& x, const PartialMSet& y);

// Cartesian product with the diagonal action; (i,j) becomes i*y.points()+j.
// The action is defined only where both coordinates are.
PartialMSet product(const PartialMSet& x, const PartialMSet& y);

// Quotient by a partition of the points.  The partition must be a right
// congruence: related points act to related points, with matching
// definedness; otherwise NotCongruenceError.  Classes are renumbered by their
// least member.
PartialMSet quotient(const PartialMSet& x,
                     const std::vector<std::vector<int>>& classes);

// Normalizes a partition of 0..n-1: validates exact cover, sorts members,
// orders classes by least member.
std::vector<std::vector<int>> normalize_partition(
    int n, const std::vector<std::vector<int>>& classes);

struct PointMap {
  PartialMSet source;
  PartialMSet target;
  std::vector<int> images;  // per source point
};

// Strict morphism: definedness is preserved in both directions and
// f(x*m) = f(x)*m wherever defined.
bool is_morphism(const PointMap& f);

// Lax morphism: wherever x*m is defined, f(x)*m is defined and equal to
// f(x*m).  The target may define more.
bool is_lax_morphism(const PointMap& f);

// Isomorphism search (backtracking over a definedness-signature refinement).
// Returns a witness map when one exists.
std::optional<PointMap> isomorphic(const PartialMSet& x, const PartialMSet& y);

}  // namespace burnside
