#include "burnside/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "burnside/errors.hpp"

namespace burnside {

int RightCongruence::local_of(int monoid_elem) const {
  auto it = std::lower_bound(r_class.begin(), r_class.end(), monoid_elem);
  if (it == r_class.end() || *it != monoid_elem) return -1;
  return static_cast<int>(it - r_class.begin());
}

std::vector<int> RightCongruence::class_of_map() const {
  std::vector<int> out(r_class.size(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int p : classes[c]) out[p] = static_cast<int>(c);
  return out;
}

std::vector<int> r_class_elements(const GreenData& g, int e) {
  return g.r_classes[g.r_class[e]];
}

PartialMSet r_class_action(const MonoidPtr& m, const GreenData& g, int e) {
  return restrict_to(right_regular(m), r_class_elements(g, e));
}

namespace {

// Congruence test on a class-id labelling of the points of an M-set:
// class-mates must agree on definedness and land in a common class, for every
// monoid element.  Returns a witness (rep, point, m) on failure.
struct CongruenceCheck {
  bool ok = true;
  int x = -1, y = -1, m = -1;
};

CongruenceCheck check_congruence(const PartialMSet& a,
                                 const std::vector<int>& class_of) {
  std::vector<int> rep_of_class;
  for (int p = 0; p < a.points(); ++p) {
    const int c = class_of[p];
    if (c >= static_cast<int>(rep_of_class.size()))
      rep_of_class.resize(c + 1, -1);
    if (rep_of_class[c] < 0) {
      rep_of_class[c] = p;
      continue;
    }
    const int r = rep_of_class[c];
    for (int m = 0; m < a.msize(); ++m) {
      const int rm = a.act(r, m);
      const int pm = a.act(p, m);
      if ((rm < 0) != (pm < 0)) return {false, r, p, m};
      if (rm >= 0 && class_of[rm] != class_of[pm]) return {false, r, p, m};
    }
  }
  return {};
}

// Restricted-growth normal form of a class labelling: classes renumbered in
// order of first appearance.
std::vector<int> rgs_form(const std::vector<int>& class_of) {
  std::vector<int> out(class_of.size());
  std::map<int, int> seen;
  for (size_t i = 0; i < class_of.size(); ++i) {
    auto it = seen.find(class_of[i]);
    if (it == seen.end())
      it = seen.emplace(class_of[i], static_cast<int>(seen.size())).first;
    out[i] = it->second;
  }
  return out;
}

std::vector<std::vector<int>> classes_from_map(const std::vector<int>& class_of) {
  const int k = class_of.empty()
                    ? 0
                    : *std::max_element(class_of.begin(), class_of.end()) + 1;
  std::vector<std::vector<int>> classes(k);
  for (size_t p = 0; p < class_of.size(); ++p)
    classes[class_of[p]].push_back(static_cast<int>(p));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return classes;
}

RightCongruence wrap_congruence(const GreenData& g, int e,
                                const std::vector<int>& class_of) {
  RightCongruence c;
  c.e = e;
  c.r_class = r_class_elements(g, e);
  c.classes = classes_from_map(rgs_form(class_of));
  return c;
}

// Least congruence relating a and b, as a class map, or nothing when no
// congruence relates them (their definedness profiles clash somewhere along
// the closure).
std::optional<std::vector<int>> principal_congruence(const PartialMSet& act,
                                                     int a, int b) {
  std::vector<int> parent(act.points());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::pair<int, int>> todo = {{a, b}};
  while (!todo.empty()) {
    auto [u, v] = todo.back();
    todo.pop_back();
    u = find(u);
    v = find(v);
    if (u == v) continue;
    parent[u] = v;
    for (int m = 0; m < act.msize(); ++m) {
      const int um = act.act(u, m);
      const int vm = act.act(v, m);
      if ((um < 0) != (vm < 0)) return std::nullopt;
      if (um >= 0) todo.push_back({um, vm});
    }
  }
  std::vector<int> class_of(act.points());
  for (int p = 0; p < act.points(); ++p) class_of[p] = find(p);
  return rgs_form(class_of);
}

std::vector<int> join_congruences(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[x] = y;
  };
  std::map<int, int> first_a, first_b;
  for (int p = 0; p < n; ++p) {
    auto ia = first_a.emplace(a[p], p);
    if (!ia.second) unite(ia.first->second, p);
    auto ib = first_b.emplace(b[p], p);
    if (!ib.second) unite(ib.first->second, p);
  }
  std::vector<int> out(n);
  for (int p = 0; p < n; ++p) out[p] = find(p);
  return rgs_form(out);
}

std::vector<RightCongruence> wrap_sorted(const GreenData& g, int e,
                                         std::set<std::vector<int>> maps) {
  std::vector<RightCongruence> out;
  out.reserve(maps.size());
  for (const auto& cm : maps) out.push_back(wrap_congruence(g, e, cm));
  return out;
}

}  // namespace

RightCongruence make_right_congruence(
    const MonoidPtr& m, const GreenData& g, int e,
    const std::vector<std::vector<int>>& classes_of_elements) {
  const auto elems = r_class_elements(g, e);
  RightCongruence c;
  c.e = e;
  c.r_class = elems;

  std::vector<std::vector<int>> local_classes;
  for (const auto& cls : classes_of_elements) {
    std::vector<int> local;
    for (int x : cls) {
      const int i = c.local_of(x);
      if (i < 0)
        throw InputError("element " + std::to_string(x) +
                         " is not in the R-class of " + std::to_string(e));
      local.push_back(i);
    }
    local_classes.push_back(std::move(local));
  }
  const auto part =
      normalize_partition(static_cast<int>(elems.size()), local_classes);
  c.classes = part;

  std::vector<int> class_of(elems.size());
  for (size_t i = 0; i < part.size(); ++i)
    for (int p : part[i]) class_of[p] = static_cast<int>(i);
  const auto chk = check_congruence(r_class_action(m, g, e), class_of);
  if (!chk.ok) throw NotCongruenceError(chk.x, chk.y, chk.m);
  return c;
}

PartialMSet congruence_quotient(const MonoidPtr& m, const GreenData& g,
                                const RightCongruence& c) {
  return quotient(r_class_action(m, g, c.e), c.classes);
}

std::vector<RightCongruence> enumerate_congruences_by_filter(
    const MonoidPtr& m, const GreenData& g, int e) {
  const auto act = r_class_action(m, g, e);
  const int n = act.points();

  std::set<std::vector<int>> found;
  std::vector<int> rgs(n, 0);
  // enumerate restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1])
  while (true) {
    if (check_congruence(act, rgs).ok) found.insert(rgs);
    int i = n - 1;
    for (; i > 0; --i) {
      const int top = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= top) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return wrap_sorted(g, e, std::move(found));
}

std::vector<RightCongruence> enumerate_congruences_by_joins(
    const MonoidPtr& m, const GreenData& g, int e) {
  const auto act = r_class_action(m, g, e);
  const int n = act.points();

  std::set<std::vector<int>> found;
  std::vector<int> equality(n);
  std::iota(equality.begin(), equality.end(), 0);
  found.insert(rgs_form(equality));

  std::vector<std::vector<int>> worklist;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (auto p = principal_congruence(act, a, b))
        if (found.insert(*p).second) worklist.push_back(*p);

  for (size_t i = 0; i < worklist.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      auto joined = join_congruences(worklist[i], worklist[j]);
      if (found.insert(joined).second) worklist.push_back(std::move(joined));
    }
  return wrap_sorted(g, e, std::move(found));
}

std::vector<RightCongruence> enumerate_right_congruences(const MonoidPtr& m,
                                                         const GreenData& g,
                                                         int e, int cap) {
  const int n = static_cast<int>(r_class_elements(g, e).size());
  if (n > cap)
    throw CapError("R-class of " + std::to_string(e) + " has " +
                   std::to_string(n) + " elements, over the congruence cap " +
                   std::to_string(cap));
  if (n <= 8) return enumerate_congruences_by_filter(m, g, e);
  return enumerate_congruences_by_joins(m, g, e);
}

RightCongruence congruence_from_subgroup(const MonoidPtr& m, const GreenData& g,
                                         int e, const std::vector<int>& k) {
  const auto h = maximal_subgroup(*m, g, e);
  if (!is_subgroup_of(h, k))
    throw InputError("given set is not a subgroup of the maximal subgroup at " +
                     std::to_string(e));

  const auto elems = r_class_elements(g, e);
  const int n = static_cast<int>(elems.size());
  auto local_of = [&](int x) {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    return (it != elems.end() && *it == x)
               ? static_cast<int>(it - elems.begin())
               : -1;
  };

  std::vector<int> class_of(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    for (int kk : k) {
      const int kr = local_of(m->mul(kk, elems[i]));
      if (kr < 0)
        throw InternalError("left translate by subgroup left the R-class");
      class_of[kr] = next;
    }
    ++next;
  }

  const auto chk = check_congruence(r_class_action(m, g, e), class_of);
  if (!chk.ok)
    throw InternalError("coset partition failed the congruence check");
  return wrap_congruence(g, e, class_of);
}

PartialMSet coset_quotient(const MonoidPtr& m, const GreenData& g, int e,
                           const std::vector<int>& k) {
  return congruence_quotient(m, g, congruence_from_subgroup(m, g, e, k));
}

bool congruence_contained_in_h(const GreenData& g, const RightCongruence& c) {
  for (const auto& cls : c.classes)
    for (int p : cls)
      if (g.h_class[c.r_class[p]] != g.h_class[c.r_class[cls[0]]]) return false;
  return true;
}

std::vector<int> identity_class_subgroup(const MonoidPtr& m, const GreenData& g,
                                         const RightCongruence& c) {
  if (!congruence_contained_in_h(g, c))
    throw InputError("congruence is not contained in the H relation");
  const int e_local = c.local_of(c.e);
  std::vector<int> k;
  for (const auto& cls : c.classes)
    if (std::find(cls.begin(), cls.end(), e_local) != cls.end()) {
      for (int p : cls) k.push_back(c.r_class[p]);
      break;
    }
  std::sort(k.begin(), k.end());

  const auto h = maximal_subgroup(*m, g, c.e);
  if (!is_subgroup_of(h, k))
    throw InternalError("class of the idempotent is not a subgroup");
  const auto regenerated = congruence_from_subgroup(m, g, c.e, k);
  if (regenerated.classes != c.classes)
    throw InternalError("congruence is not the coset congruence of its identity class");
  return k;
}

RightCongruence max_congruence(const MonoidPtr& m, const GreenData& g, int e) {
  const auto elems = r_class_elements(g, e);
  const int n = static_cast<int>(elems.size());
  const int je = g.j_class[e];

  std::map<std::vector<char>, int> sig_ids;
  std::vector<int> class_of(n);
  for (int i = 0; i < n; ++i) {
    std::vector<char> sig(m->size());
    for (int t = 0; t < m->size(); ++t)
      sig[t] = g.j_class[m->mul(elems[i], t)] == je;
    auto it = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first;
    class_of[i] = it->second;
  }

  const auto chk = check_congruence(r_class_action(m, g, e), class_of);
  if (!chk.ok)
    throw InternalError("coarsest candidate partition is not a congruence");
  return wrap_congruence(g, e, class_of);
}

CosetMorphisms coset_quotient_morphisms(const MonoidPtr& m, const GreenData& g,
                                        int e, const std::vector<int>& k,
                                        const std::vector<int>& l) {
  const auto h = maximal_subgroup(*m, g, e);
  if (!is_subgroup_of(h, k) || !is_subgroup_of(h, l))
    throw InputError("coset morphism test needs subgroups of the maximal subgroup");

  std::vector<int> l_sorted = l;
  std::sort(l_sorted.begin(), l_sorted.end());

  int witness = -1;
  for (int cand : h.elements) {
    const int c = h.index_of(cand);
    bool inside = true;
    for (int kk : k) {
      const int conj = m->mul(m->mul(cand, kk), h.elements[h.ginv(c)]);
      if (!std::binary_search(l_sorted.begin(), l_sorted.end(), conj)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      witness = cand;
      break;
    }
  }
  if (witness < 0) return {};

  const auto ck = congruence_from_subgroup(m, g, e, k);
  const auto cl = congruence_from_subgroup(m, g, e, l);
  const auto qk = congruence_quotient(m, g, ck);
  const auto ql = congruence_quotient(m, g, cl);
  const auto l_map = cl.class_of_map();

  std::vector<int> images;
  images.reserve(ck.classes.size());
  for (const auto& cls : ck.classes) {
    const int r = ck.r_class[cls[0]];
    const int hr = cl.local_of(m->mul(witness, r));
    if (hr < 0) throw InternalError("translate left the R-class");
    images.push_back(l_map[hr]);
  }
  PointMap f{qk, ql, std::move(images)};
  if (!is_morphism(f))
    throw InternalError("coset morphism witness is not a morphism");
  return {true, witness, std::move(f)};
}

bool coset_quotient_isomorphic(const MonoidPtr& m, const GreenData& g, int e,
                               const std::vector<int>& k,
                               const std::vector<int>& l) {
  const auto h = maximal_subgroup(*m, g, e);
  if (!is_subgroup_of(h, k) || !is_subgroup_of(h, l))
    throw InputError("coset isomorphism test needs subgroups of the maximal subgroup");
  std::vector<int> ks = k, ls = l;
  std::sort(ks.begin(), ks.end());
  std::sort(ls.begin(), ls.end());
  return subgroups_conjugate(h, ks, ls);
}

}  // namespace burnside
