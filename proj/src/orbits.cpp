#include "burnside/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

std::vector<std::vector<int>> successor_lists(const PartialMSet& x) {
  std::vector<std::vector<int>> succ(x.points());
  for (int p = 0; p < x.points(); ++p) {
    std::set<int> s;
    for (int m = 0; m < x.msize(); ++m) {
      const int v = x.act(p, m);
      if (v >= 0) s.insert(v);
    }
    succ[p].assign(s.begin(), s.end());
  }
  return succ;
}

}  // namespace

std::vector<std::vector<int>> weak_orbits(const PartialMSet& x) {
  const int n = x.points();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  for (int p = 0; p < n; ++p)
    for (int m = 0; m < x.msize(); ++m) {
      const int v = x.act(p, m);
      if (v >= 0) parent[find(p)] = find(v);
    }
  std::map<int, std::vector<int>> comps;
  for (int p = 0; p < n; ++p) comps[find(p)].push_back(p);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

namespace {

// Iterative Tarjan; components come out in reverse topological order but are
// re-sorted by least point afterwards.
std::vector<std::vector<int>> tarjan_sccs(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int next_index = 0;

  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      auto& frame = call.back();
      const int v = frame.v;
      if (frame.child < succ[v].size()) {
        const int w = succ[v][frame.child++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> scc;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = static_cast<int>(sccs.size());
            scc.push_back(w);
          } while (w != v);
          std::sort(scc.begin(), scc.end());
          sccs.push_back(std::move(scc));
        }
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return sccs;
}

}  // namespace

int compute_apex(const PartialMSet& orbit_action, const FiniteMonoid& m,
                 const GreenData& g) {
  if (orbit_action.points() == 0)
    throw InternalError("apex of an empty orbit requested");

  std::vector<char> acts(m.size(), 0);
  for (int t = 0; t < m.size(); ++t)
    for (int p = 0; p < orbit_action.points(); ++p)
      if (orbit_action.defined(p, t)) {
        acts[t] = 1;
        break;
      }

  int apex = -1;
  for (int t = 0; t < m.size(); ++t) {
    if (!acts[t]) continue;
    bool minimal = true;
    for (int u = 0; u < m.size() && minimal; ++u)
      if (acts[u] && g.geq_j[t][u] && !g.geq_j[u][t]) minimal = false;
    if (!minimal) continue;
    if (apex < 0) apex = g.j_class[t];
    if (g.j_class[t] != apex)
      throw InternalError("minimal acting elements span several J-classes");
  }
  if (apex < 0) throw InternalError("orbit has no acting elements");

  const int rep = g.j_classes[apex][0];
  for (int t = 0; t < m.size(); ++t)
    if (acts[t] != g.geq_j[t][rep])
      throw InternalError("acting elements are not the J-upset of the apex");
  return apex;
}

std::vector<StrongOrbit> strong_orbits(const PartialMSet& x, const GreenData& g) {
  const auto parent = std::make_shared<const PartialMSet>(x);
  std::vector<StrongOrbit> out;
  for (auto& scc : tarjan_sccs(successor_lists(x))) {
    PartialMSet action = restrict_to(x, scc);
    const int apex = compute_apex(action, *x.monoid(), g);
    out.push_back(StrongOrbit{parent, std::move(scc), std::move(action), apex});
  }
  return out;
}

CanonicalOrbit canonical_form(const StrongOrbit& orbit, const MonoidPtr& m,
                              const GreenData& g) {
  const int e = g.designated_idem[orbit.apex_j];
  if (e < 0) throw InternalError("apex J-class has no idempotent");

  const auto& act = orbit.action;
  int alpha = -1;
  for (int p = 0; p < act.points() && alpha < 0; ++p)
    if (act.act(p, e) == p) alpha = p;
  if (alpha < 0)
    throw InternalError("no orbit point is fixed by the apex idempotent");

  const auto r_elems = r_class_elements(g, e);
  const int n = static_cast<int>(r_elems.size());
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) {
    image[i] = act.act(alpha, r_elems[i]);
    if (image[i] < 0)
      throw InternalError("base point does not act by the whole R-class");
  }

  std::map<int, std::vector<int>> fibres;
  for (int i = 0; i < n; ++i) fibres[image[i]].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& [pt, members] : fibres) classes.push_back(members);

  std::vector<std::vector<int>> classes_of_elements;
  for (const auto& cls : classes) {
    std::vector<int> elems;
    for (int i : cls) elems.push_back(r_elems[i]);
    classes_of_elements.push_back(std::move(elems));
  }
  RightCongruence cong;
  try {
    cong = make_right_congruence(m, g, e, classes_of_elements);
  } catch (const InputError& err) {
    throw InternalError(std::string("canonical congruence rejected: ") +
                        err.what());
  }
  PartialMSet quotient = congruence_quotient(m, g, cong);
  CanonicalOrbit can{std::move(cong), std::move(quotient), alpha, {}};

  can.class_to_point.reserve(can.cong.classes.size());
  for (const auto& cls : can.cong.classes)
    can.class_to_point.push_back(image[cls[0]]);

  if (static_cast<int>(can.class_to_point.size()) != act.points())
    throw InternalError("canonical quotient has the wrong number of points");
  PointMap witness{can.quotient_rep, act, can.class_to_point};
  if (!is_morphism(witness))
    throw InternalError("canonical quotient is not isomorphic to the orbit");
  std::set<int> distinct(can.class_to_point.begin(), can.class_to_point.end());
  if (static_cast<int>(distinct.size()) != act.points())
    throw InternalError("canonical quotient map is not injective");
  return can;
}

OrbitAutomorphisms aut_group(const MonoidPtr& m, const GreenData& g,
                             const RightCongruence& cong) {
  const int e = cong.e;
  const auto h = maximal_subgroup(*m, g, e);
  const auto class_of = cong.class_of_map();
  const int num_classes = static_cast<int>(cong.classes.size());

  OrbitAutomorphisms out;
  std::set<std::vector<int>> seen_perms;

  const int e_class = class_of[cong.local_of(e)];
  for (int cand : h.elements) {
    // the permutation induced on classes by left translation, if well defined
    std::vector<int> perm(num_classes, -1);
    bool preserves = true;
    for (int c = 0; c < num_classes && preserves; ++c)
      for (int i : cong.classes[c]) {
        const int hr = cong.local_of(m->mul(cand, cong.r_class[i]));
        if (hr < 0) throw InternalError("left translate left the R-class");
        if (perm[c] < 0)
          perm[c] = class_of[hr];
        else if (perm[c] != class_of[hr]) {
          preserves = false;
          break;
        }
      }
    if (!preserves) continue;

    out.stab_l.push_back(cand);
    if (class_of[cong.local_of(cand)] == e_class) out.kern.push_back(cand);

    std::vector<char> hit(num_classes, 0);
    for (int c = 0; c < num_classes; ++c) hit[perm[c]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw InternalError("congruence-preserving translate is not a bijection");
    if (seen_perms.insert(perm).second) out.automorphisms.push_back(perm);
  }

  if (!is_subgroup_of(h, out.stab_l) || !is_subgroup_of(h, out.kern))
    throw InternalError("stabilizer sets are not subgroups");
  for (int x : out.kern)
    if (std::find(out.stab_l.begin(), out.stab_l.end(), x) == out.stab_l.end())
      throw InternalError("kernel is not inside the stabilizer");
  for (int cand : out.stab_l)
    if (conjugate_subgroup(h, out.kern, cand) != out.kern)
      throw InternalError("kernel is not normal in the stabilizer");

  out.order = static_cast<long long>(out.stab_l.size()) /
              static_cast<long long>(out.kern.size());
  if (out.order != static_cast<long long>(out.automorphisms.size()))
    throw InternalError("automorphism count does not match the index");
  return out;
}

}  // namespace burnside
