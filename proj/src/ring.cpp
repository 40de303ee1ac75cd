#include "burnside/ring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

std::string encode_class(const RightCongruence& cong) {
  // Restricted growth string of the partition, prefixed by the idempotent.
  std::vector<int> rgs(cong.r_class.size(), -1);
  int next = 0;
  std::vector<int> of = cong.class_of_map();
  std::vector<int> relabel(cong.classes.size(), -1);
  for (std::size_t i = 0; i < cong.r_class.size(); ++i) {
    int c = of[i];
    if (relabel[c] < 0) relabel[c] = next++;
    rgs[i] = relabel[c];
  }
  std::ostringstream out;
  out << "e" << cong.e << ":";
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (i) out << ",";
    out << rgs[i];
  }
  return out.str();
}

bool strongly_connected(const PartialMSet& x) {
  int n = x.points();
  if (n == 0) return false;
  int nm = x.monoid()->size();
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int p = 0; p < n; ++p) {
    for (int m = 0; m < nm; ++m) {
      int q = x.act(p, m);
      if (q >= 0 && q != p) {
        fwd[p].push_back(q);
        bwd[q].push_back(p);
      }
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

int find_one_point_total(const std::vector<StrongOrbitClass>& classes) {
  int found = -1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const PartialMSet& rep = classes[i].rep;
    if (rep.points() != 1) continue;
    bool total = true;
    for (int m = 0; m < rep.monoid()->size(); ++m) {
      if (!rep.defined(0, m)) {
        total = false;
        break;
      }
    }
    if (total) {
      if (found >= 0) {
        throw InternalError("two distinct basis classes are one-point total actions");
      }
      found = static_cast<int>(i);
    }
  }
  if (found < 0) {
    throw InternalError("no basis class is the one-point total action");
  }
  return found;
}

}  // namespace

BasisPtr compute_basis(const MonoidPtr& m, int congruence_cap) {
  OrbitBasis basis;
  basis.monoid = m;
  basis.green = compute_green(*m);
  const GreenData& g = basis.green;

  std::vector<StrongOrbitClass> found;
  for (std::size_t j = 0; j < g.j_classes.size(); ++j) {
    int e = g.designated_idem[j];
    if (e < 0) continue;  // irregular J-class, carries no orbit classes
    auto congs = enumerate_right_congruences(m, g, e, congruence_cap);
    std::vector<StrongOrbitClass> local;
    for (const auto& cong : congs) {
      PartialMSet q = congruence_quotient(m, g, cong);
      bool duplicate = false;
      for (const auto& prev : local) {
        if (prev.rep.points() != q.points()) continue;
        if (isomorphic(prev.rep, q)) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      auto orbits = strong_orbits(q, g);
      if (orbits.size() != 1) {
        throw InternalError("congruence quotient of an R-class is not a single strong orbit");
      }
      const int apex = orbits[0].apex_j;
      if (apex != g.j_class[e]) {
        throw InternalError("apex of a quotient orbit differs from its idempotent's J-class");
      }
      const long long aut = aut_group(m, g, cong).order;
      StrongOrbitClass cls{cong, std::move(q), apex, aut, encode_class(cong)};
      local.push_back(std::move(cls));
    }
    for (auto& cls : local) found.push_back(std::move(cls));
  }

  int b = static_cast<int>(found.size());
  std::vector<std::vector<long long>> lax(b, std::vector<long long>(b, 0));
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      lax[i][j] = lax_count(found[i].rep, found[j].rep);
    }
  }
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      if (lax[i][j] > 0 && lax[j][i] > 0) {
        throw InternalError("two non-isomorphic orbit classes admit lax morphisms both ways");
      }
    }
  }

  // Topological order: a class precedes everything it maps into.
  std::vector<int> indeg(b, 0);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i != j && lax[i][j] > 0) ++indeg[j];
    }
  }
  std::vector<int> order;
  std::vector<char> placed(b, 0);
  for (int step = 0; step < b; ++step) {
    int pick = -1;
    for (int i = 0; i < b; ++i) {
      if (placed[i] || indeg[i] != 0) continue;
      if (pick < 0) {
        pick = i;
        continue;
      }
      int pi = found[i].rep.points(), pp = found[pick].rep.points();
      if (pi > pp || (pi == pp && found[i].encoding < found[pick].encoding)) {
        pick = i;
      }
    }
    if (pick < 0) {
      throw InternalError("cycle in the lax morphism order on orbit classes");
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (int j = 0; j < b; ++j) {
      if (pick != j && lax[pick][j] > 0) --indeg[j];
    }
  }

  basis.classes.reserve(b);
  for (int idx : order) basis.classes.push_back(std::move(found[idx]));
  basis.one_index = find_one_point_total(basis.classes);
  return std::make_shared<const OrbitBasis>(std::move(basis));
}

int match_class(const PartialMSet& orbit_action, const OrbitBasis& basis) {
  auto orbits = strong_orbits(orbit_action, basis.green);
  if (orbits.size() != 1) {
    throw InputError("match_class expects a single strong orbit");
  }
  int apex = orbits[0].apex_j;
  for (std::size_t i = 0; i < basis.classes.size(); ++i) {
    const StrongOrbitClass& cls = basis.classes[i];
    if (cls.apex_j != apex) continue;
    if (cls.rep.points() != orbit_action.points()) continue;
    if (isomorphic(cls.rep, orbit_action)) return static_cast<int>(i);
  }
  throw InternalError("a strong orbit matches no basis class");
}

BurnsideElement class_of(const PartialMSet& x, const BasisPtr& basis) {
  if (!(x.monoid() == basis->monoid || *x.monoid() == *basis->monoid)) {
    throw InputError("partial action and basis belong to different monoids");
  }
  BurnsideElement out{basis, std::vector<long long>(basis->size(), 0)};
  for (const auto& orbit : strong_orbits(x, basis->green)) {
    out.coeffs[match_class(orbit.action, *basis)] += 1;
  }
  return out;
}

BurnsideElement ring_zero(const BasisPtr& basis) {
  return BurnsideElement{basis, std::vector<long long>(basis->size(), 0)};
}

BurnsideElement ring_one(const BasisPtr& basis) {
  BurnsideElement out = ring_zero(basis);
  out.coeffs[basis->one_index] = 1;
  return out;
}

static void require_same_basis(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.basis != b.basis) {
    throw InputError("ring elements come from different bases");
  }
}

BurnsideElement ring_add(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_basis(a, b);
  BurnsideElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

BurnsideElement ring_scale(long long c, const BurnsideElement& a) {
  BurnsideElement out = a;
  for (auto& v : out.coeffs) v *= c;
  return out;
}

BurnsideElement ring_mul(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_basis(a, b);
  const OrbitBasis& basis = *a.basis;
  BurnsideElement out = ring_zero(a.basis);
  for (int i = 0; i < basis.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < basis.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      PartialMSet p = product(basis.classes[i].rep, basis.classes[j].rep);
      BurnsideElement pc = class_of(p, a.basis);
      for (int k = 0; k < basis.size(); ++k) {
        out.coeffs[k] += a.coeffs[i] * b.coeffs[j] * pc.coeffs[k];
      }
    }
  }
  return out;
}

MultiplicationCube multiplication_table(const BasisPtr& basis) {
  int b = basis->size();
  MultiplicationCube cube(b, std::vector<std::vector<long long>>(b));
  for (int i = 0; i < b; ++i) {
    for (int j = i; j < b; ++j) {
      PartialMSet p = product(basis->classes[i].rep, basis->classes[j].rep);
      cube[i][j] = class_of(p, basis).coeffs;
      if (j != i) cube[j][i] = cube[i][j];
    }
  }
  return cube;
}

long long lax_count(const PartialMSet& orbit, const PartialMSet& x) {
  if (!same_monoid(orbit, x)) {
    throw InputError("lax morphism count needs actions of the same monoid");
  }
  if (!strongly_connected(orbit)) {
    throw InputError("lax morphism count needs a strongly connected source");
  }
  // A lax morphism out of a strong orbit is fixed by the image p of the base
  // point 0: it exists iff p realizes every defined move of the base and
  // respects coincidences among the images of the base.
  int nm = orbit.monoid()->size();
  std::map<int, std::vector<int>> fibre;  // base image point -> acting elements
  for (int m = 0; m < nm; ++m) {
    int v = orbit.act(0, m);
    if (v >= 0) fibre[v].push_back(m);
  }
  long long count = 0;
  for (int p = 0; p < x.points(); ++p) {
    bool ok = true;
    for (const auto& [v, ms] : fibre) {
      int img = x.act(p, ms[0]);
      if (img < 0) {
        ok = false;
        break;
      }
      for (std::size_t t = 1; t < ms.size() && ok; ++t) {
        if (x.act(p, ms[t]) != img) ok = false;
      }
      if (!ok) break;
    }
    if (ok) ++count;
  }
  return count;
}

long long lax_count_oracle(const PartialMSet& orbit, const PartialMSet& x,
                           long long gate) {
  if (!same_monoid(orbit, x)) {
    throw InputError("lax morphism count needs actions of the same monoid");
  }
  int no = orbit.points(), nx = x.points();
  long long total = 1;
  for (int i = 0; i < no; ++i) {
    if (nx == 0) {
      total = 0;
      break;
    }
    if (total > gate / nx) {
      throw CapError("lax morphism search space exceeds the gate");
    }
    total *= nx;
  }
  if (nx == 0) return 0;
  int nm = orbit.monoid()->size();
  std::vector<int> img(no, 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < no && ok; ++i) {
      for (int m = 0; m < nm && ok; ++m) {
        int q = orbit.act(i, m);
        if (q < 0) continue;
        int t = x.act(img[i], m);
        if (t < 0 || t != img[q]) ok = false;
      }
    }
    if (ok) ++count;
    int pos = no - 1;
    while (pos >= 0 && img[pos] == nx - 1) {
      img[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++img[pos];
  }
  return count;
}

MarksTable marks_table(const BasisPtr& basis) {
  int b = basis->size();
  MarksTable out;
  out.basis = basis;
  out.matrix.assign(b, std::vector<long long>(b, 0));
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      out.matrix[i][j] = lax_count(basis->classes[i].rep, basis->classes[j].rep);
    }
  }
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < i; ++j) {
      if (out.matrix[i][j] != 0) {
        std::ostringstream msg;
        msg << "marks table is not upper triangular at (" << i << ", " << j << ")";
        throw InternalError(msg.str());
      }
    }
    if (out.matrix[i][i] != basis->classes[i].aut_order) {
      std::ostringstream msg;
      msg << "marks diagonal at " << i << " is " << out.matrix[i][i]
          << " but the automorphism group has order " << basis->classes[i].aut_order;
      throw InternalError(msg.str());
    }
  }
  return out;
}

SemisimplicityCertificate semisimplicity_certificate(const MarksTable& marks,
                                                     unsigned seed) {
  const OrbitBasis& basis = *marks.basis;
  int b = basis.size();
  SemisimplicityCertificate cert;
  cert.determinant = 1;
  for (int i = 0; i < b; ++i) cert.determinant *= marks.matrix[i][i];
  cert.index = cert.determinant;
  cert.semisimple = cert.determinant != 0;

  cert.multiplicative = true;
  cert.pairs_checked = 0;
  auto check_pair = [&](const PartialMSet& x, const PartialMSet& y) {
    PartialMSet p = product(x, y);
    for (int k = 0; k < b; ++k) {
      long long lhs = lax_count(basis.classes[k].rep, p);
      long long rhs = lax_count(basis.classes[k].rep, x) *
                      lax_count(basis.classes[k].rep, y);
      if (lhs != rhs) cert.multiplicative = false;
    }
    ++cert.pairs_checked;
  };
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      check_pair(basis.classes[i].rep, basis.classes[j].rep);
    }
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, b - 1);
  std::uniform_int_distribution<int> extra(0, 1);
  auto random_sum = [&]() {
    PartialMSet acc = basis.classes[pick(rng)].rep;
    int more = extra(rng);
    for (int t = 0; t < more; ++t) acc = sum(acc, basis.classes[pick(rng)].rep);
    return acc;
  };
  for (int round = 0; round < 20; ++round) {
    check_pair(random_sum(), random_sum());
  }
  return cert;
}

}  // namespace burnside
