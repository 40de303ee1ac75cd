#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace burnside {

// A finite monoid given by its full Cayley table over elements 0..n-1.
// Instances are validated on construction and never mutated afterwards.
class FiniteMonoid {
 public:
  // Validates shape, range and associativity, and locates the two-sided
  // identity.  Throws MalformedTable-style InputError, NonAssociativeError,
  // or InputError("no identity ...").
  static FiniteMonoid from_cayley(
      const std::vector<std::vector<int>>& table,
      std::optional<std::vector<std::string>> labels = std::nullopt);

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }

  bool has_labels() const { return !labels_.empty(); }
  // Falls back to the element index when no labels were attached.
  std::string label(int a) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::vector<int>> cayley_rows() const;

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.n_ == b.n_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  FiniteMonoid() = default;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<std::string> labels_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

struct ClosureOptions {
  int element_cap = 100000;
};

// Monoid generated by total transformations of {1..n} under composition,
// x(fg) = (xf)g.  Generator images are 1-based lists of length n.  The
// identity map is always adjoined.  Element labels record the image lists.
FiniteMonoid generate_from_transformations(int degree,
                                           const std::vector<std::vector<int>>& gens,
                                           const ClosureOptions& opts = {});

using Matrix = std::vector<std::vector<int>>;

// Monoid generated by dim x dim matrices under matrix multiplication, plus
// the identity matrix.  field_q names GF(q) for a prime power q <= 9; entries
// are reduced mod q (prime-power entries are field-element codes 0..q-1 in
// the base-p polynomial encoding).  field_q == 0 selects plain integer
// matrices: no reduction, closure bounded only by the element cap.
FiniteMonoid generate_from_matrices(int field_q, int dim,
                                    const std::vector<Matrix>& gens,
                                    const ClosureOptions& opts = {});

// Arithmetic tables for GF(q), q a prime power <= 9.  Elements are encoded
// 0..q-1; for q = p^k the code is c0 + c1*p + ... of the polynomial basis
// coefficients.  Throws for q that is not a prime power in range.
struct GaloisField {
  explicit GaloisField(int q);
  int q;
  int add(int a, int b) const { return add_[a * q + b]; }
  int mul(int a, int b) const { return mul_[a * q + b]; }

 private:
  std::vector<int> add_, mul_;
};

}  // namespace burnside
