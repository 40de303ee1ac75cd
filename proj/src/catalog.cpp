#include "burnside/catalog.hpp"

#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

MonoidPtr wrap(FiniteMonoid m) {
  return std::make_shared<const FiniteMonoid>(std::move(m));
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

MonoidPtr mono_01() {
  static const MonoidPtr m = wrap(FiniteMonoid::from_cayley(
      {{0, 0}, {0, 1}}, std::vector<std::string>{"0", "1"}));
  return m;
}

MonoidPtr mono_0pm1() {
  // Element order 0, 1, -1; e.g. (-1)*(-1) = 1.
  static const MonoidPtr m = wrap(FiniteMonoid::from_cayley(
      {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, std::vector<std::string>{"0", "1", "-1"}));
  return m;
}

PartialMSet chain_mset(int n) {
  if (n < 0 || n > 1000000) {
    throw InputError("chain length out of range");
  }
  PartialMSet x(mono_01(), n + 1);
  for (int p = 0; p <= n; ++p) {
    x.set(p, 0, 0);  // x * 0 = 0; the identity column is preset
  }
  std::vector<std::string> labels;
  for (int p = 0; p <= n; ++p) labels.push_back(std::to_string(p));
  x.set_labels(std::move(labels));
  return x;
}

MonoidPtr full_transformation(int n) {
  if (n < 1 || n > 4) {
    throw InputError("full transformation monoid supported for degree 1 to 4");
  }
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> swap01(n), cycle(n), collapse(n);
    for (int i = 0; i < n; ++i) {
      swap01[i] = i + 1;
      cycle[i] = i + 2 > n ? 1 : i + 2;
      collapse[i] = i + 1;
    }
    swap01[0] = 2;
    swap01[1] = 1;
    collapse[n - 1] = n - 1;
    gens = {swap01, cycle, collapse};
  }
  return wrap(generate_from_transformations(n, gens));
}

MonoidPtr matrix_monoid(int n, int q) {
  if (n < 1 || n > 2 || (q != 2 && q != 3)) {
    throw InputError("matrix monoids supported for dimension 1, 2 over GF(2), GF(3)");
  }
  int cells = n * n;
  long long count = ipow(q, cells);
  std::vector<Matrix> gens;
  for (long long code = 0; code < count; ++code) {
    Matrix mat(n, std::vector<int>(n));
    long long rest = code;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        mat[r][c] = static_cast<int>(rest % q);
        rest /= q;
      }
    }
    gens.push_back(std::move(mat));
  }
  return wrap(generate_from_matrices(q, n, gens));
}

MonoidPtr five_element_nonsubring() {
  // Order 1, a, b, e, f.  Three relations pin the whole table: every
  // element is idempotent, {a,b} and {e,f} multiply to their right factor,
  // and e, f are two-sided identities on {a,b}.
  static const MonoidPtr m = wrap(FiniteMonoid::from_cayley(
      {
          {0, 1, 2, 3, 4},  // 1
          {1, 1, 2, 1, 1},  // a
          {2, 1, 2, 2, 2},  // b
          {3, 1, 2, 3, 4},  // e
          {4, 1, 2, 3, 4},  // f
      },
      std::vector<std::string>{"1", "a", "b", "e", "f"}));
  return m;
}

MonoidPtr appendix_counterexample() {
  auto rows_equal = [](int col, int sign) {
    Matrix m(3, std::vector<int>(3, 0));
    for (int r = 0; r < 3; ++r) m[r][col] = sign;
    return m;
  };
  auto rows_flipped = [](int col, int sign) {
    Matrix m(3, std::vector<int>(3, 0));
    m[0][col] = sign;
    m[1][col] = -sign;
    m[2][col] = -sign;
    return m;
  };
  std::vector<Matrix> gens;
  for (int col = 0; col < 3; ++col) {
    gens.push_back(rows_equal(col, 1));
    gens.push_back(rows_equal(col, -1));
  }
  for (int col = 0; col < 3; ++col) {
    gens.push_back(rows_flipped(col, 1));
    gens.push_back(rows_flipped(col, -1));
  }
  static const MonoidPtr m = wrap(generate_from_matrices(0, 3, gens));
  return m;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"mono_01", "", "{0,1} under multiplication"},
      {"mono_0pm1", "", "{0,+1,-1} under multiplication"},
      {"chain_mset", "n", "chain {0..n} over mono_01"},
      {"full_transformation", "n", "all total maps on {1..n}, n <= 4"},
      {"matrix_monoid", "n q", "all n x n matrices over GF(q), n <= 2, q in {2,3}"},
      {"five_element_nonsubring", "",
       "five idempotents whose coset classes span no subring"},
      {"appendix_counterexample", "", "thirteen signed 3x3 matrices"},
  };
  return entries;
}

CatalogObject catalog_build(const std::string& request) {
  std::string cleaned = request;
  for (char& c : cleaned) {
    if (c == ':' || c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string name;
  in >> name;
  std::vector<int> args;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      args.push_back(v);
    } catch (const std::exception&) {
      throw InputError("catalog argument is not an integer: " + tok);
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      std::ostringstream msg;
      msg << "catalog entry " << name << " takes " << n << " argument(s)";
      throw InputError(msg.str());
    }
  };

  CatalogObject obj;
  obj.name = name;
  if (name == "mono_01") {
    need(0);
    obj.monoid = mono_01();
    obj.notes = {{"size", 2}, {"basis_rank", 2}, {"distinguishable", 1}};
  } else if (name == "mono_0pm1") {
    need(0);
    obj.monoid = mono_0pm1();
    obj.notes = {{"size", 3}, {"basis_rank", 3}, {"distinguishable", 1}};
  } else if (name == "chain_mset") {
    need(1);
    obj.monoid = mono_01();
    obj.mset = chain_mset(args[0]);
    obj.notes = {{"points", args[0] + 1},
                 {"weak_orbits", 1},
                 {"strong_orbits", args[0] + 1}};
  } else if (name == "full_transformation") {
    need(1);
    obj.monoid = full_transformation(args[0]);
    obj.notes = {{"size", ipow(args[0], args[0])},
                 {"distinguishable", args[0] == 1 ? 1 : 0}};
    if (args[0] <= 3) {
      static const long long ranks[] = {0, 1, 4, 8};
      obj.notes["basis_rank"] = ranks[args[0]];
    }
  } else if (name == "matrix_monoid") {
    need(2);
    obj.monoid = matrix_monoid(args[0], args[1]);
    obj.notes = {{"size", ipow(args[1], args[0] * args[0])}, {"distinguishable", 1}};
    if (args[0] == 1) {
      obj.notes["basis_rank"] = args[1] == 2 ? 2 : 3;
    } else if (args[0] == 2 && args[1] == 2) {
      obj.notes["basis_rank"] = 6;
    }
  } else if (name == "five_element_nonsubring") {
    need(0);
    obj.monoid = five_element_nonsubring();
    obj.notes = {{"size", 5},
                 {"idempotents", 5},
                 {"basis_rank", 5},
                 {"distinguishable", 0}};
  } else if (name == "appendix_counterexample") {
    need(0);
    obj.monoid = appendix_counterexample();
    obj.notes = {{"size", 13},
                 {"r_class_size", 6},
                 {"h_e_order", 2},
                 {"distinguishable", 0}};
  } else {
    throw InputError("unknown catalog entry: " + name);
  }
  return obj;
}

}  // namespace burnside
