#include "burnside/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"

namespace burnside {

namespace {

// Fraction-free Gaussian elimination; exact for integer matrices.
long long bareiss_det(std::vector<std::vector<long long>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

bool has_commuting_idempotents(const FiniteMonoid& m, const GreenData& g) {
  for (int e : g.idempotents) {
    for (int f : g.idempotents) {
      if (m.mul(e, f) != m.mul(f, e)) return false;
    }
  }
  return true;
}

bool is_er(const FiniteMonoid&, const GreenData& g) {
  std::vector<int> count(g.r_classes.size(), 0);
  for (int e : g.idempotents) {
    if (++count[g.r_class[e]] > 1) return false;
  }
  return true;
}

DistinguishabilityReport distinguishability(const FiniteMonoid& m, const GreenData& g) {
  DistinguishabilityReport rep;
  for (std::size_t j = 0; j < g.j_classes.size(); ++j) {
    if (!g.regular_j[j]) continue;
    const std::vector<int>& members = g.j_classes[j];
    std::vector<int> ls, rs;
    for (int x : members) {
      ls.push_back(g.l_class[x]);
      rs.push_back(g.r_class[x]);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    std::map<int, int> lpos, rpos;
    for (std::size_t i = 0; i < ls.size(); ++i) lpos[ls[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < rs.size(); ++i) rpos[rs[i]] = static_cast<int>(i);

    std::vector<std::vector<char>> pattern(ls.size(), std::vector<char>(rs.size(), 0));
    for (int x : members) {
      if (m.is_idempotent(x)) pattern[lpos[g.l_class[x]]][rpos[g.r_class[x]]] = 1;
    }
    // Products stay in the J-class exactly when the L x R cell of the factors
    // holds an idempotent; checked exhaustively.
    for (int x : members) {
      for (int y : members) {
        bool in_j = g.j_class[m.mul(x, y)] == static_cast<int>(j);
        bool idem = pattern[lpos[g.l_class[x]]][rpos[g.r_class[y]]] != 0;
        if (in_j != idem) {
          throw InternalError("in-class products disagree with the idempotent pattern");
        }
      }
    }

    JClassDistinguishability jd;
    jd.j_class = static_cast<int>(j);
    for (std::size_t a = 0; a + 1 < ls.size(); ++a) {
      for (std::size_t b = a + 1; b < ls.size(); ++b) {
        if (pattern[a] == pattern[b]) jd.indistinct_pairs.emplace_back(ls[a], ls[b]);
      }
    }
    jd.distinguishable = jd.indistinct_pairs.empty();
    if (!jd.distinguishable) rep.monoid_distinguishable = false;
    rep.regular.push_back(std::move(jd));
  }
  rep.er = is_er(m, g);
  rep.commuting_idempotents = has_commuting_idempotents(m, g);
  if (rep.commuting_idempotents && !rep.er) {
    throw InternalError("commuting idempotents must leave one idempotent per R-class");
  }
  if (rep.er && !rep.monoid_distinguishable) {
    throw InternalError("one idempotent per R-class must make the monoid distinguishable");
  }
  return rep;
}

PartialMSet restrict_to_group(const PartialMSet& x, const MaximalSubgroup& group,
                              const MonoidPtr& gm) {
  std::set<int> carrier_set;
  for (int p = 0; p < x.points(); ++p) {
    int q = x.act(p, group.e);
    if (q >= 0) carrier_set.insert(q);
  }
  std::vector<int> carrier(carrier_set.begin(), carrier_set.end());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
  PartialMSet out(gm, static_cast<int>(carrier.size()));
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    for (int t = 0; t < group.order(); ++t) {
      int q = x.act(carrier[i], group.elements[t]);
      auto it = q >= 0 ? pos.find(q) : pos.end();
      if (it == pos.end()) {
        throw InternalError("restriction to a maximal subgroup is not total on the carrier");
      }
      out.set(static_cast<int>(i), t, it->second);
    }
  }
  if (x.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(carrier.size());
    for (int p : carrier) labels.push_back(x.label(p));
    out.set_labels(std::move(labels));
  }
  return out;
}

std::vector<long long> group_burnside_decompose(const PartialMSet& y,
                                                const GroupBurnsideRing& ring) {
  if (!(y.monoid() == ring.gm || *y.monoid() == *ring.gm)) {
    throw InputError("group decomposition needs an action over the same group");
  }
  for (int p = 0; p < y.points(); ++p) {
    for (int t = 0; t < y.msize(); ++t) {
      if (!y.defined(p, t)) {
        throw InputError("group decomposition needs a total action");
      }
    }
  }
  std::vector<long long> out(ring.subgroup_reps.size(), 0);
  for (const auto& orbit : weak_orbits(y)) {
    int p = orbit[0];
    std::vector<int> stab;
    for (int t = 0; t < y.msize(); ++t) {
      if (y.act(p, t) == p) stab.push_back(ring.group.elements[t]);
    }
    int hit = -1;
    for (std::size_t i = 0; i < ring.subgroup_reps.size(); ++i) {
      if (ring.subgroup_reps[i].size() != stab.size()) continue;
      if (subgroups_conjugate(ring.group, stab, ring.subgroup_reps[i])) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit < 0) throw InternalError("an orbit stabilizer matches no subgroup class");
    ++out[hit];
  }
  return out;
}

GroupBurnsideRing group_burnside_ring(const MonoidPtr& m, const GreenData& g, int e) {
  GroupBurnsideRing ring;
  ring.group = maximal_subgroup(*m, g, e);
  int h = ring.group.order();
  std::vector<std::vector<int>> rows(h, std::vector<int>(h));
  std::vector<std::string> labels(h);
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) rows[a][b] = ring.group.gmul(a, b);
    labels[a] = m->label(ring.group.elements[a]);
  }
  ring.gm = std::make_shared<const FiniteMonoid>(FiniteMonoid::from_cayley(rows, labels));
  ring.subgroup_reps = subgroups_up_to_conjugacy(ring.group);

  for (const auto& k : ring.subgroup_reps) {
    std::vector<int> klocal;
    klocal.reserve(k.size());
    for (int x : k) klocal.push_back(ring.group.index_of(x));
    std::vector<int> coset_of(h, -1);
    std::vector<std::vector<int>> cosets;
    for (int a = 0; a < h; ++a) {
      if (coset_of[a] >= 0) continue;
      int id = static_cast<int>(cosets.size());
      cosets.emplace_back();
      for (int t : klocal) {
        int b = ring.group.gmul(t, a);
        coset_of[b] = id;
        cosets[id].push_back(b);
      }
    }
    PartialMSet space(ring.gm, static_cast<int>(cosets.size()));
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      for (int t = 0; t < h; ++t) {
        space.set(static_cast<int>(c), t, coset_of[ring.group.gmul(cosets[c][0], t)]);
      }
    }
    ring.coset_spaces.push_back(std::move(space));
  }

  int s = static_cast<int>(ring.subgroup_reps.size());
  ring.cube.assign(s, std::vector<std::vector<long long>>(s));
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      PartialMSet p = product(ring.coset_spaces[i], ring.coset_spaces[j]);
      ring.cube[i][j] = group_burnside_decompose(p, ring);
      if (j != i) ring.cube[j][i] = ring.cube[i][j];
    }
  }
  return ring;
}

std::vector<std::vector<long long>> group_marks_classical(const GroupBurnsideRing& ring) {
  int s = static_cast<int>(ring.subgroup_reps.size());
  std::vector<std::vector<long long>> out(s, std::vector<long long>(s, 0));
  for (int i = 0; i < s; ++i) {
    std::vector<int> klocal;
    for (int x : ring.subgroup_reps[i]) klocal.push_back(ring.group.index_of(x));
    for (int j = 0; j < s; ++j) {
      const PartialMSet& space = ring.coset_spaces[j];
      long long fixed = 0;
      for (int p = 0; p < space.points(); ++p) {
        bool all = true;
        for (int t : klocal) {
          if (space.act(p, t) != p) {
            all = false;
            break;
          }
        }
        if (all) ++fixed;
      }
      out[i][j] = fixed;
    }
  }
  return out;
}

StructureAnalysis analyze_structure(const BasisPtr& basis) {
  StructureAnalysis a;
  a.monoid = basis->monoid;
  a.basis = basis;
  const GreenData& g = basis->green;
  a.report = distinguishability(*a.monoid, g);
  a.cube = multiplication_table(basis);

  // Designated idempotents, J-descending; ties by least idempotent index.
  std::vector<int> regs;
  for (std::size_t j = 0; j < g.j_classes.size(); ++j) {
    if (g.designated_idem[j] >= 0) regs.push_back(static_cast<int>(j));
  }
  std::vector<char> placed(regs.size(), 0);
  for (std::size_t step = 0; step < regs.size(); ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < regs.size(); ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (std::size_t k = 0; k < regs.size(); ++k) {
        if (!placed[k] && k != i && g.j_class_above(regs[k], regs[i])) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      if (pick < 0 || g.designated_idem[regs[i]] < g.designated_idem[regs[pick]]) {
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0) throw InternalError("the J-order on regular classes has a cycle");
    placed[pick] = 1;
    a.designated.push_back(g.designated_idem[regs[pick]]);
  }
  for (int e : a.designated) a.rings.push_back(group_burnside_ring(a.monoid, g, e));

  int b = basis->size();
  for (std::size_t r = 0; r < a.rings.size(); ++r) {
    for (std::size_t k = 0; k < a.rings[r].subgroup_reps.size(); ++k) {
      a.row_of.emplace_back(static_cast<int>(r), static_cast<int>(k));
    }
  }
  int t = static_cast<int>(a.row_of.size());
  a.phi_matrix.assign(t, std::vector<long long>(b, 0));
  for (int c = 0; c < b; ++c) {
    int row = 0;
    for (const auto& ring : a.rings) {
      PartialMSet y = restrict_to_group(basis->classes[c].rep, ring.group, ring.gm);
      for (long long v : group_burnside_decompose(y, ring)) a.phi_matrix[row++][c] = v;
    }
  }
  a.rank_burnside = b;
  a.rank_product = t;

  // The one class must map to the identity tuple: coefficient 1 exactly on
  // each ring's full-subgroup class.
  for (int row = 0; row < t; ++row) {
    const auto& [r, k] = a.row_of[row];
    bool full = static_cast<int>(a.rings[r].subgroup_reps[k].size()) ==
                a.rings[r].group.order();
    long long expect = full ? 1 : 0;
    if (a.phi_matrix[row][basis->one_index] != expect) {
      throw InternalError("the one-point class does not map to the identity tuple");
    }
  }

  // Multiplicativity on basis pairs, coordinatewise per ring.
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      std::vector<long long> lhs(t, 0);
      for (int row = 0; row < t; ++row) {
        for (int c = 0; c < b; ++c) lhs[row] += a.phi_matrix[row][c] * a.cube[i][j][c];
      }
      int base = 0;
      for (const auto& ring : a.rings) {
        int s = static_cast<int>(ring.subgroup_reps.size());
        std::vector<long long> rhs(s, 0);
        for (int k = 0; k < s; ++k) {
          if (a.phi_matrix[base + k][i] == 0) continue;
          for (int l = 0; l < s; ++l) {
            if (a.phi_matrix[base + l][j] == 0) continue;
            long long w = a.phi_matrix[base + k][i] * a.phi_matrix[base + l][j];
            for (int c = 0; c < s; ++c) rhs[c] += w * ring.cube[k][l][c];
          }
        }
        for (int c = 0; c < s; ++c) {
          if (lhs[base + c] != rhs[c]) {
            throw InternalError("the coordinatewise map fails to be multiplicative");
          }
        }
        base += s;
      }
    }
  }

  // Subgroup-determined classes: each (e, K) is the class of R_e/K; the
  // assignment must be injective.
  a.subgroup_determined.assign(b, 0);
  for (int row = 0; row < t; ++row) {
    const auto& [r, k] = a.row_of[row];
    PartialMSet q = coset_quotient(a.monoid, g, a.designated[r], a.rings[r].subgroup_reps[k]);
    int idx = match_class(q, *basis);
    if (a.subgroup_determined[idx]) {
      throw InternalError("two subgroup classes land on the same orbit class");
    }
    a.subgroup_determined[idx] = 1;
    a.g_basis.push_back(idx);
  }

  a.structure_mat.assign(t, std::vector<long long>(t, 0));
  for (int row = 0; row < t; ++row) {
    for (int col = 0; col < t; ++col) {
      a.structure_mat[row][col] = a.phi_matrix[row][a.g_basis[col]];
      if (row == col && a.structure_mat[row][col] != 1) {
        throw InternalError("structure matrix diagonal entry is not 1");
      }
      if (row > col && a.structure_mat[row][col] != 0) {
        throw InternalError("structure matrix is not upper triangular");
      }
    }
  }

  a.distinguishable = a.report.monoid_distinguishable;
  if (a.distinguishable != (a.rank_burnside == a.rank_product)) {
    throw InternalError("distinguishability verdict disagrees with the rank comparison");
  }
  return a;
}

std::vector<std::vector<long long>> phi(const StructureAnalysis& a,
                                        const BurnsideElement& x) {
  if (x.basis != a.basis) {
    throw InputError("ring element does not belong to the analyzed basis");
  }
  std::vector<std::vector<long long>> out;
  int row = 0;
  for (const auto& ring : a.rings) {
    int s = static_cast<int>(ring.subgroup_reps.size());
    std::vector<long long> block(s, 0);
    for (int k = 0; k < s; ++k, ++row) {
      for (std::size_t c = 0; c < x.coeffs.size(); ++c) {
        block[k] += a.phi_matrix[row][c] * x.coeffs[c];
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

TnReport tn_report(int n, int congruence_cap) {
  if (n < 1 || n > 3) {
    throw CapError("transformation monoid reports are capped at degree 3");
  }
  TnReport rep;
  rep.n = n;
  MonoidPtr m = full_transformation(n);
  BasisPtr basis = compute_basis(m, congruence_cap);
  rep.analysis = analyze_structure(basis);
  rep.rank = basis->size();
  rep.formula_rank = 1 + rep.analysis.rank_product;
  rep.rank_matches = rep.rank == rep.formula_rank;

  int one = basis->one_index;
  bool only = !rep.analysis.subgroup_determined[one];
  for (int i = 0; i < basis->size(); ++i) {
    if (i != one && !rep.analysis.subgroup_determined[i]) only = false;
  }
  rep.one_only_non_subgroup_determined = only;

  rep.ideal_closed = true;
  for (int i = 0; i < basis->size(); ++i) {
    if (i == one) continue;
    for (int j = 0; j < basis->size(); ++j) {
      if (rep.analysis.cube[i][j][one] != 0) rep.ideal_closed = false;
    }
  }

  // Compare the whole multiplication table with the direct product of the
  // integers and the groups' coset-class rings, through the map
  // x -> (coefficient of the one class, coordinatewise image).
  int t = rep.analysis.rank_product;
  int rows = 1 + t, cols = basis->size();
  std::vector<std::vector<long long>> f(rows, std::vector<long long>(cols, 0));
  for (int c = 0; c < cols; ++c) {
    f[0][c] = c == one ? 1 : 0;
    for (int row = 0; row < t; ++row) f[row + 1][c] = rep.analysis.phi_matrix[row][c];
  }
  bool mult_ok = true;
  for (int i = 0; i < cols && mult_ok; ++i) {
    for (int j = 0; j < cols && mult_ok; ++j) {
      std::vector<long long> lhs(rows, 0);
      for (int row = 0; row < rows; ++row) {
        for (int c = 0; c < cols; ++c) lhs[row] += f[row][c] * rep.analysis.cube[i][j][c];
      }
      if (lhs[0] != f[0][i] * f[0][j]) mult_ok = false;
      int base = 1;
      for (const auto& ring : rep.analysis.rings) {
        int s = static_cast<int>(ring.subgroup_reps.size());
        std::vector<long long> rhs(s, 0);
        for (int k = 0; k < s; ++k) {
          for (int l = 0; l < s; ++l) {
            long long w = f[base + k][i] * f[base + l][j];
            if (w == 0) continue;
            for (int c = 0; c < s; ++c) rhs[c] += w * ring.cube[k][l][c];
          }
        }
        for (int c = 0; c < s; ++c) {
          if (lhs[base + c] != rhs[c]) mult_ok = false;
        }
        base += s;
      }
    }
  }
  bool square = rows == cols;
  rep.embedding_det = square ? bareiss_det(f) : 0;
  rep.product_ring_match =
      square && mult_ok && (rep.embedding_det == 1 || rep.embedding_det == -1);

  if (n >= 2 && !(rep.rank_matches && rep.one_only_non_subgroup_determined &&
                  rep.ideal_closed && rep.product_ring_match)) {
    throw InternalError("transformation monoid report failed a structural identity");
  }
  return rep;
}

}  // namespace burnside
