#include "burnside/monoid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

FiniteMonoid FiniteMonoid::from_cayley(
    const std::vector<std::vector<int>>& table,
    std::optional<std::vector<std::string>> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("malformed table: a monoid has at least one element");

  FiniteMonoid m;
  m.n_ = n;
  m.table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw InputError("malformed table: row " + std::to_string(i) +
                       " has length " + std::to_string(table[i].size()) +
                       ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n)
        throw InputError("table entry out of range at (" + std::to_string(i) +
                         ", " + std::to_string(j) + "): " + std::to_string(v));
      m.table_[i * n + j] = v;
    }
  }

  int identity = -1;
  for (int i = 0; i < n && identity < 0; ++i) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = m.mul(i, x) == x && m.mul(x, i) == x;
    if (ok) identity = i;
  }
  if (identity < 0) throw InputError("no identity element in table");
  m.identity_ = identity;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = m.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (m.mul(ab, c) != m.mul(a, m.mul(b, c)))
          throw NonAssociativeError(a, b, c);
    }

  if (labels) {
    if (static_cast<int>(labels->size()) != n)
      throw InputError("label list length does not match monoid size");
    m.labels_ = std::move(*labels);
  }
  return m;
}

std::string FiniteMonoid::label(int a) const {
  if (a >= 0 && a < static_cast<int>(labels_.size())) return labels_[a];
  return std::to_string(a);
}

std::vector<std::vector<int>> FiniteMonoid::cayley_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = mul(i, j);
  return rows;
}

namespace {

// Breadth-first closure of the generators (plus the identity element) under
// right multiplication.  Elements are deduplicated by their representation;
// the Cayley table is filled afterwards by composing representations, which
// always lands inside the closure.
template <typename Rep, typename Compose, typename LabelFn>
FiniteMonoid closure_monoid(Rep identity_rep, std::vector<Rep> gen_reps,
                            Compose compose, LabelFn label_of,
                            const ClosureOptions& opts) {
  std::vector<Rep> elems;
  std::map<Rep, int> index;
  auto intern = [&](const Rep& r) {
    auto it = index.find(r);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(elems.size());
    if (id >= opts.element_cap)
      throw CapError("element cap exceeded while generating monoid (cap " +
                     std::to_string(opts.element_cap) + ")");
    elems.push_back(r);
    index.emplace(r, id);
    return id;
  };

  intern(identity_rep);
  std::vector<int> gen_ids;
  for (const auto& g : gen_reps) gen_ids.push_back(intern(g));

  for (size_t next = 0; next < elems.size(); ++next) {
    const Rep cur = elems[next];  // copy: elems may reallocate
    for (int g : gen_ids) intern(compose(cur, elems[g]));
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(compose(elems[i], elems[j]));
      if (it == index.end())
        throw InternalError("closure is not closed under composition");
      table[i][j] = it->second;
    }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& r : elems) labels.push_back(label_of(r));
  return FiniteMonoid::from_cayley(table, std::move(labels));
}

std::string bracket_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

FiniteMonoid generate_from_transformations(int degree,
                                           const std::vector<std::vector<int>>& gens,
                                           const ClosureOptions& opts) {
  if (degree <= 0) throw InputError("transformation degree must be positive");
  std::vector<std::vector<int>> reps;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw InputError("generator image list has length " +
                       std::to_string(g.size()) + ", expected " +
                       std::to_string(degree));
    std::vector<int> zero_based(degree);
    for (int i = 0; i < degree; ++i) {
      if (g[i] < 1 || g[i] > degree)
        throw InputError("generator image " + std::to_string(g[i]) +
                         " out of range 1.." + std::to_string(degree));
      zero_based[i] = g[i] - 1;
    }
    reps.push_back(std::move(zero_based));
  }

  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  // x(fg) = (xf)g, so the composite's image list is g applied after f.
  auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (size_t x = 0; x < f.size(); ++x) h[x] = g[f[x]];
    return h;
  };
  auto label_of = [](const std::vector<int>& f) {
    std::vector<int> one_based(f.size());
    for (size_t i = 0; i < f.size(); ++i) one_based[i] = f[i] + 1;
    return bracket_list(one_based);
  };
  return closure_monoid(id, reps, compose, label_of, opts);
}

namespace {

constexpr int kMaxFieldOrder = 9;

// Returns the prime p with q = p^k, or 0 when q is not a prime power.
int prime_base(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int r = q;
    while (r % p == 0) r /= p;
    return r == 1 ? p : 0;
  }
  return 0;
}

}  // namespace

GaloisField::GaloisField(int q_) : q(q_) {
  if (q < 2 || q > kMaxFieldOrder || prime_base(q) == 0)
    throw InputError("field order " + std::to_string(q) +
                     " is not a prime power in 2..9");
  const int p = prime_base(q);
  int k = 0;
  for (int r = q; r > 1; r /= p) ++k;

  // x^k rewrites to this polynomial (coefficients of 1, x, ..., x^{k-1}).
  std::vector<int> rewrite;
  if (k == 1) rewrite = {};
  else if (q == 4) rewrite = {1, 1};        // x^2 = x + 1 over GF(2)
  else if (q == 8) rewrite = {1, 1, 0};     // x^3 = x + 1 over GF(2)
  else if (q == 9) rewrite = {2, 0};        // x^2 = 2 over GF(3)

  auto decode = [&](int code) {
    std::vector<int> digits(k);
    for (int i = 0; i < k; ++i) {
      digits[i] = code % p;
      code /= p;
    }
    return digits;
  };
  auto encode = [&](const std::vector<int>& digits) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + digits[i];
    return code;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    const auto da = decode(a);
    for (int b = 0; b < q; ++b) {
      const auto db = decode(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = encode(s);

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
          prod[d - k + i] = (prod[d - k + i] + c * rewrite[i]) % p;
      }
      prod.resize(k);
      mul_[a * q + b] = encode(prod);
    }
  }
}

FiniteMonoid generate_from_matrices(int field_q, int dim,
                                    const std::vector<Matrix>& gens,
                                    const ClosureOptions& opts) {
  if (dim <= 0) throw InputError("matrix dimension must be positive");
  const bool over_integers = field_q == 0;
  std::optional<GaloisField> gf;
  if (!over_integers) gf.emplace(field_q);

  auto flatten = [&](const Matrix& m) {
    if (static_cast<int>(m.size()) != dim)
      throw InputError("matrix generator has " + std::to_string(m.size()) +
                       " rows, expected " + std::to_string(dim));
    std::vector<int> flat;
    flat.reserve(dim * dim);
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != dim)
        throw InputError("matrix generator row has length " +
                         std::to_string(row.size()) + ", expected " +
                         std::to_string(dim));
      for (int v : row)
        flat.push_back(over_integers ? v : ((v % field_q) + field_q) % field_q);
    }
    return flat;
  };

  std::vector<std::vector<int>> reps;
  for (const auto& g : gens) reps.push_back(flatten(g));

  std::vector<int> id(dim * dim, 0);
  for (int i = 0; i < dim; ++i) id[i * dim + i] = 1;

  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(dim * dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int l = 0; l < dim; ++l) {
        const int v = a[i * dim + l];
        if (v == 0) continue;
        for (int j = 0; j < dim; ++j) {
          if (over_integers)
            c[i * dim + j] += v * b[l * dim + j];
          else
            c[i * dim + j] =
                gf->add(c[i * dim + j], gf->mul(v, b[l * dim + j]));
        }
      }
    return c;
  };
  auto label_of = [dim](const std::vector<int>& flat) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < dim; ++i) {
      if (i) os << ',';
      os << '[';
      for (int j = 0; j < dim; ++j) {
        if (j) os << ',';
        os << flat[i * dim + j];
      }
      os << ']';
    }
    os << ']';
    return os.str();
  };
  return closure_monoid(id, reps, compose, label_of, opts);
}

}  // namespace burnside
