#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

// Exit-code categories used by the command line driver:
//   input errors -> 2, resource caps -> 3, broken internal invariants -> 4.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

struct CapError : Error {
  explicit CapError(const std::string& what) : Error(what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

// A product (a*b)*c != a*(b*c); carries the witness triple.
struct NonAssociativeError : InputError {
  int a, b, c;
  NonAssociativeError(int a_, int b_, int c_)
      : InputError("table is not associative at (" + std::to_string(a_) + ", " +
                   std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

// Restriction target is not a subquotient: s*(m*n) lands in the subset but
// s*m does not.
struct NotSubquotientError : InputError {
  int s, m, n;
  NotSubquotientError(int s_, int m_, int n_)
      : InputError("subset is not a subquotient: witness (s=" +
                   std::to_string(s_) + ", m=" + std::to_string(m_) + ", n=" +
                   std::to_string(n_) + ")"),
        s(s_), m(m_), n(n_) {}
};

// Partition is not a right congruence: x and y share a class but acting by m
// separates them (different classes, or defined on one side only).
struct NotCongruenceError : InputError {
  int x, y, m;
  NotCongruenceError(int x_, int y_, int m_)
      : InputError("partition is not a right congruence: witness (x=" +
                   std::to_string(x_) + ", x'=" + std::to_string(y_) +
                   ", m=" + std::to_string(m_) + ")"),
        x(x_), y(y_), m(m_) {}
};

}  // namespace burnside
