#include "burnside/green.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

// Reachability closure: reach[x][y] == 1 iff y is reachable from x along the
// given successor map (every x reaches itself).
std::vector<std::vector<char>> reach_all(
    int n, const std::vector<std::vector<int>>& succ) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    auto& row = reach[s];
    row[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : succ[x])
        if (!row[y]) {
          row[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return reach;
}

std::vector<std::vector<int>> classes_of_preorder(
    const std::vector<std::vector<char>>& geq, std::vector<int>& class_of) {
  const int n = static_cast<int>(geq.size());
  class_of.assign(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> cls;
    for (int y = x; y < n; ++y)
      if (class_of[y] < 0 && geq[x][y] && geq[y][x]) {
        class_of[y] = id;
        cls.push_back(y);
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

bool GreenData::j_class_above(int a, int b) const {
  if (a == b) return false;
  return geq_j[j_classes[a][0]][j_classes[b][0]];
}

GreenData compute_green(const FiniteMonoid& m) {
  const int n = m.size();
  GreenData g;

  std::vector<std::vector<int>> succ_r(n), succ_l(n), succ_j(n);
  for (int x = 0; x < n; ++x) {
    std::set<int> right, left;
    for (int t = 0; t < n; ++t) {
      right.insert(m.mul(x, t));
      left.insert(m.mul(t, x));
    }
    succ_r[x].assign(right.begin(), right.end());
    succ_l[x].assign(left.begin(), left.end());
    std::set<int> both = right;
    both.insert(left.begin(), left.end());
    succ_j[x].assign(both.begin(), both.end());
  }

  g.geq_r = reach_all(n, succ_r);
  g.geq_l = reach_all(n, succ_l);
  g.geq_j = reach_all(n, succ_j);

  g.r_classes = classes_of_preorder(g.geq_r, g.r_class);
  g.l_classes = classes_of_preorder(g.geq_l, g.l_class);
  g.j_classes = classes_of_preorder(g.geq_j, g.j_class);

  // H-classes are the nonempty intersections R ∩ L, numbered by least element.
  g.h_class.assign(n, -1);
  std::map<std::pair<int, int>, int> h_ids;
  for (int x = 0; x < n; ++x) {
    const auto key = std::make_pair(g.r_class[x], g.l_class[x]);
    auto it = h_ids.find(key);
    if (it == h_ids.end()) {
      const int id = static_cast<int>(g.h_classes.size());
      h_ids.emplace(key, id);
      g.h_classes.push_back({x});
      g.h_class[x] = id;
    } else {
      g.h_class[x] = it->second;
      g.h_classes[it->second].push_back(x);
    }
  }

  for (int x = 0; x < n; ++x)
    if (m.is_idempotent(x)) g.idempotents.push_back(x);

  g.regular_j.assign(g.j_classes.size(), 0);
  g.designated_idem.assign(g.j_classes.size(), -1);
  for (int e : g.idempotents) {
    const int j = g.j_class[e];
    g.regular_j[j] = 1;
    if (g.designated_idem[j] < 0) g.designated_idem[j] = e;
  }
  return g;
}

bool check_stability(const FiniteMonoid& m, const GreenData& g) {
  const int n = m.size();
  for (int x = 0; x < n; ++x)
    for (int t = 0; t < n; ++t) {
      const int xt = m.mul(x, t);
      if (g.j_equiv(x, xt) && !g.r_equiv(x, xt)) return false;
      const int tx = m.mul(t, x);
      if (g.j_equiv(x, tx) && !g.l_equiv(x, tx)) return false;
    }
  return true;
}

int MaximalSubgroup::index_of(int monoid_elem) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), monoid_elem);
  if (it == elements.end() || *it != monoid_elem) return -1;
  return static_cast<int>(it - elements.begin());
}

MaximalSubgroup maximal_subgroup(const FiniteMonoid& m, const GreenData& g, int e) {
  if (e < 0 || e >= m.size())
    throw InputError("element " + std::to_string(e) + " out of range");
  if (!m.is_idempotent(e))
    throw InputError("element " + std::to_string(e) + " is not idempotent");

  MaximalSubgroup h;
  h.e = e;
  h.elements = g.h_classes[g.h_class[e]];  // already sorted ascending

  const int k = h.order();
  h.table.assign(k * k, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int prod = h.index_of(m.mul(h.elements[a], h.elements[b]));
      if (prod < 0)
        throw InternalError("H-class of idempotent " + std::to_string(e) +
                            " is not closed under multiplication");
      h.table[a * k + b] = prod;
    }

  h.local_identity = h.index_of(e);
  h.inverse.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b)
      if (h.gmul(a, b) == h.local_identity && h.gmul(b, a) == h.local_identity) {
        h.inverse[a] = b;
        break;
      }
    if (h.inverse[a] < 0)
      throw InternalError("H-class of idempotent " + std::to_string(e) +
                          " has an element without inverse");
  }
  return h;
}

namespace {

// Closure of a set of local ids under the group multiplication (finiteness
// makes inverses automatic).
std::vector<int> close_local(const MaximalSubgroup& h, std::vector<int> seed) {
  std::set<int> in(seed.begin(), seed.end());
  in.insert(h.local_identity);
  std::vector<int> queue(in.begin(), in.end());
  for (size_t i = 0; i < queue.size(); ++i)
    for (size_t j = 0; j < queue.size(); ++j) {
      for (int p : {h.gmul(queue[i], queue[j]), h.gmul(queue[j], queue[i])})
        if (in.insert(p).second) queue.push_back(p);
    }
  std::vector<int> out(in.begin(), in.end());
  return out;
}

std::vector<int> to_monoid_ids(const MaximalSubgroup& h, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int a : local) out.push_back(h.elements[a]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> to_local_ids(const MaximalSubgroup& h, const std::vector<int>& monoid_ids) {
  std::vector<int> out;
  out.reserve(monoid_ids.size());
  for (int x : monoid_ids) {
    const int a = h.index_of(x);
    if (a < 0)
      throw InputError("element " + std::to_string(x) +
                       " does not lie in the maximal subgroup at " +
                       std::to_string(h.e));
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_subgroups(const MaximalSubgroup& h) {
  std::set<std::vector<int>> seen;       // local-id sets, sorted
  std::vector<std::vector<int>> queue;
  const std::vector<int> trivial = {h.local_identity};
  seen.insert(trivial);
  queue.push_back(trivial);

  for (size_t i = 0; i < queue.size(); ++i) {
    const auto current = queue[i];
    for (int g = 0; g < h.order(); ++g) {
      if (std::binary_search(current.begin(), current.end(), g)) continue;
      auto extended = current;
      extended.push_back(g);
      auto closed = close_local(h, extended);
      if (seen.insert(closed).second) queue.push_back(closed);
    }
  }

  std::vector<std::vector<int>> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(to_monoid_ids(h, s));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> conjugate_subgroup(const MaximalSubgroup& h,
                                    const std::vector<int>& k, int conj) {
  const int c = h.index_of(conj);
  if (c < 0)
    throw InputError("conjugating element " + std::to_string(conj) +
                     " does not lie in the maximal subgroup");
  const int cinv = h.ginv(c);
  std::vector<int> out;
  out.reserve(k.size());
  for (int x : to_local_ids(h, k))
    out.push_back(h.elements[h.gmul(h.gmul(cinv, x), c)]);
  std::sort(out.begin(), out.end());
  return out;
}

bool subgroups_conjugate(const MaximalSubgroup& h, const std::vector<int>& k,
                         const std::vector<int>& l) {
  if (k.size() != l.size()) return false;
  for (int c : h.elements)
    if (conjugate_subgroup(h, k, c) == l) return true;
  return false;
}

std::vector<std::vector<int>> subgroups_up_to_conjugacy(const MaximalSubgroup& h) {
  std::vector<std::vector<int>> reps;
  for (const auto& s : all_subgroups(h)) {
    std::vector<int> least = s;
    for (int c : h.elements) least = std::min(least, conjugate_subgroup(h, s, c));
    if (std::find(reps.begin(), reps.end(), least) == reps.end())
      reps.push_back(std::move(least));
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return reps;
}

std::vector<int> normalizer(const MaximalSubgroup& h, const std::vector<int>& k) {
  std::vector<int> sorted_k = k;
  std::sort(sorted_k.begin(), sorted_k.end());
  std::vector<int> out;
  for (int c : h.elements)
    if (conjugate_subgroup(h, sorted_k, c) == sorted_k) out.push_back(c);
  return out;
}

bool is_subgroup_of(const MaximalSubgroup& h, const std::vector<int>& k) {
  if (k.empty()) return false;
  std::vector<int> local;
  for (int x : k) {
    const int a = h.index_of(x);
    if (a < 0) return false;
    local.push_back(a);
  }
  std::sort(local.begin(), local.end());
  if (!std::binary_search(local.begin(), local.end(), h.local_identity)) return false;
  for (int a : local)
    for (int b : local)
      if (!std::binary_search(local.begin(), local.end(), h.gmul(a, b)))
        return false;
  return true;
}

}  // namespace burnside
