#include "burnside/mset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

PartialMSet::PartialMSet(MonoidPtr monoid, int points)
    : monoid_(std::move(monoid)), points_(points) {
  if (!monoid_) throw InputError("M-set needs a monoid");
  if (points < 0) throw InputError("M-set needs a nonnegative point count");
  table_.assign(static_cast<size_t>(points_) * msize(), -1);
  for (int x = 0; x < points_; ++x) set(x, monoid_->identity(), x);
}

std::string PartialMSet::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels_.size())) return labels_[x];
  return std::to_string(x);
}

void PartialMSet::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != points_)
    throw InputError("label list length does not match point count");
  labels_ = std::move(labels);
}

std::string ValidationReport::message() const {
  switch (kind) {
    case Kind::ok:
      return "ok";
    case Kind::identity:
      return "identity axiom fails at point " + std::to_string(x);
    case Kind::associativity:
      return "associativity axiom fails at (x=" + std::to_string(x) +
             ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
  }
  return "";
}

ValidationReport validate(const PartialMSet& xs) {
  const auto& mon = *xs.monoid();
  const int one = mon.identity();
  for (int x = 0; x < xs.points(); ++x)
    for (int m = 0; m < mon.size(); ++m) {
      const int v = xs.act(x, m);
      if (v < -1 || v >= xs.points())
        return {ValidationReport::Kind::associativity, x, m, -1};
    }
  for (int x = 0; x < xs.points(); ++x)
    if (xs.act(x, one) != x) return {ValidationReport::Kind::identity, x, one, -1};
  for (int x = 0; x < xs.points(); ++x)
    for (int m = 0; m < mon.size(); ++m) {
      const int xm = xs.act(x, m);
      for (int n = 0; n < mon.size(); ++n) {
        const int direct = xs.act(x, mon.mul(m, n));
        const int stepped = xm < 0 ? -1 : xs.act(xm, n);
        if (direct != stepped)
          return {ValidationReport::Kind::associativity, x, m, n};
      }
    }
  return {};
}

bool same_monoid(const PartialMSet& x, const PartialMSet& y) {
  return x.monoid() == y.monoid() || *x.monoid() == *y.monoid();
}

PartialMSet right_regular(MonoidPtr monoid) {
  PartialMSet out(monoid, monoid->size());
  for (int x = 0; x < monoid->size(); ++x)
    for (int m = 0; m < monoid->size(); ++m) out.set(x, m, monoid->mul(x, m));
  if (monoid->has_labels()) out.set_labels(monoid->labels());
  return out;
}

PartialMSet restrict_to(const PartialMSet& x, std::vector<int> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw InputError("restriction subset has repeated points");
  for (int p : points)
    if (p < 0 || p >= x.points())
      throw InputError("restriction point " + std::to_string(p) + " out of range");

  std::vector<int> local(x.points(), -1);
  for (size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i);

  const auto& mon = *x.monoid();
  // s*(mn) inside the subset must force s*m inside it, or the restriction
  // would break associativity.
  for (int s : points)
    for (int m = 0; m < mon.size(); ++m) {
      const int sm = x.act(s, m);
      if (sm >= 0 && local[sm] >= 0) continue;
      for (int n = 0; n < mon.size(); ++n) {
        const int smn = x.act(s, mon.mul(m, n));
        if (smn >= 0 && local[smn] >= 0) throw NotSubquotientError(s, m, n);
      }
    }

  PartialMSet out(x.monoid(), static_cast<int>(points.size()));
  for (size_t i = 0; i < points.size(); ++i)
    for (int m = 0; m < mon.size(); ++m) {
      const int v = x.act(points[i], m);
      out.set(static_cast<int>(i), m, v >= 0 ? local[v] : -1);
    }
  if (x.has_labels()) {
    std::vector<std::string> labels;
    for (int p : points) labels.push_back(x.label(p));
    out.set_labels(std::move(labels));
  }
  return out;
}

PartialMSet sum(const PartialMSet& x, const PartialMSet& y) {
  if (!same_monoid(x, y)) throw InputError("monoid mismatch in sum");
  PartialMSet out(x.monoid(), x.points() + y.points());
  for (int p = 0; p < x.points(); ++p)
    for (int m = 0; m < x.msize(); ++m) out.set(p, m, x.act(p, m));
  const int shift = x.points();
  for (int p = 0; p < y.points(); ++p)
    for (int m = 0; m < y.msize(); ++m) {
      const int v = y.act(p, m);
      out.set(shift + p, m, v >= 0 ? shift + v : -1);
    }
  if (x.has_labels() || y.has_labels()) {
    std::vector<std::string> labels;
    for (int p = 0; p < x.points(); ++p) labels.push_back(x.label(p));
    for (int p = 0; p < y.points(); ++p) labels.push_back(y.label(p));
    out.set_labels(std::move(labels));
  }
  return out;
}

PartialMSet product(const PartialMSet& x, const PartialMSet& y) {
  if (!same_monoid(x, y)) throw InputError("monoid mismatch in product");
  const int ky = y.points();
  PartialMSet out(x.monoid(), x.points() * ky);
  for (int p = 0; p < x.points(); ++p)
    for (int q = 0; q < ky; ++q)
      for (int m = 0; m < x.msize(); ++m) {
        const int pm = x.act(p, m);
        const int qm = y.act(q, m);
        out.set(p * ky + q, m, (pm >= 0 && qm >= 0) ? pm * ky + qm : -1);
      }
  if (x.has_labels() || y.has_labels()) {
    std::vector<std::string> labels;
    for (int p = 0; p < x.points(); ++p)
      for (int q = 0; q < ky; ++q)
        labels.push_back("(" + x.label(p) + "," + y.label(q) + ")");
    out.set_labels(std::move(labels));
  }
  return out;
}

std::vector<std::vector<int>> normalize_partition(
    int n, const std::vector<std::vector<int>>& classes) {
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (const auto& cls : classes) {
    if (cls.empty()) throw InputError("partition has an empty class");
    auto sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    for (int p : sorted) {
      if (p < 0 || p >= n)
        throw InputError("partition member " + std::to_string(p) + " out of range");
      if (seen[p]++)
        throw InputError("partition member " + std::to_string(p) + " repeated");
    }
    out.push_back(std::move(sorted));
  }
  for (int p = 0; p < n; ++p)
    if (!seen[p])
      throw InputError("partition misses point " + std::to_string(p));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

PartialMSet quotient(const PartialMSet& x,
                     const std::vector<std::vector<int>>& classes) {
  const auto part = normalize_partition(x.points(), classes);
  std::vector<int> class_of(x.points(), -1);
  for (size_t c = 0; c < part.size(); ++c)
    for (int p : part[c]) class_of[p] = static_cast<int>(c);

  const auto& mon = *x.monoid();
  for (const auto& cls : part) {
    const int rep = cls[0];
    for (int p : cls)
      for (int m = 0; m < mon.size(); ++m) {
        const int rm = x.act(rep, m);
        const int pm = x.act(p, m);
        if ((rm < 0) != (pm < 0)) throw NotCongruenceError(rep, p, m);
        if (rm >= 0 && class_of[rm] != class_of[pm])
          throw NotCongruenceError(rep, p, m);
      }
  }

  PartialMSet out(x.monoid(), static_cast<int>(part.size()));
  for (size_t c = 0; c < part.size(); ++c)
    for (int m = 0; m < mon.size(); ++m) {
      const int v = x.act(part[c][0], m);
      out.set(static_cast<int>(c), m, v >= 0 ? class_of[v] : -1);
    }
  if (x.has_labels()) {
    std::vector<std::string> labels;
    for (const auto& cls : part) {
      if (cls.size() == 1) {
        labels.push_back(x.label(cls[0]));
      } else {
        std::ostringstream os;
        os << '{';
        for (size_t i = 0; i < cls.size(); ++i) {
          if (i) os << ',';
          os << x.label(cls[i]);
        }
        os << '}';
        labels.push_back(os.str());
      }
    }
    out.set_labels(std::move(labels));
  }
  return out;
}

namespace {

void check_map_shape(const PointMap& f) {
  if (!same_monoid(f.source, f.target))
    throw InputError("monoid mismatch in point map");
  if (static_cast<int>(f.images.size()) != f.source.points())
    throw InputError("point map image list has wrong length");
  for (int v : f.images)
    if (v < 0 || v >= f.target.points())
      throw InputError("point map image out of range");
}

}  // namespace

bool is_morphism(const PointMap& f) {
  check_map_shape(f);
  for (int x = 0; x < f.source.points(); ++x)
    for (int m = 0; m < f.source.msize(); ++m) {
      const int xm = f.source.act(x, m);
      const int fxm = f.target.act(f.images[x], m);
      if ((xm < 0) != (fxm < 0)) return false;
      if (xm >= 0 && f.images[xm] != fxm) return false;
    }
  return true;
}

bool is_lax_morphism(const PointMap& f) {
  check_map_shape(f);
  for (int x = 0; x < f.source.points(); ++x)
    for (int m = 0; m < f.source.msize(); ++m) {
      const int xm = f.source.act(x, m);
      if (xm < 0) continue;
      const int fxm = f.target.act(f.images[x], m);
      if (fxm < 0 || f.images[xm] != fxm) return false;
    }
  return true;
}

namespace {

// Joint color refinement over the points of both M-sets: the initial color is
// the definedness signature, then colors absorb the colors of all images
// until stable.  Isomorphic points always share a color.
struct Refinement {
  std::vector<int> color_x, color_y;
  int colors = 0;
};

Refinement refine_colors(const PartialMSet& x, const PartialMSet& y) {
  const int ms = x.msize();
  Refinement r;
  r.color_x.assign(x.points(), 0);
  r.color_y.assign(y.points(), 0);

  auto signature = [&](const PartialMSet& s, const std::vector<int>& col, int p) {
    std::vector<int> sig;
    sig.reserve(ms + 1);
    sig.push_back(col[p]);
    for (int m = 0; m < ms; ++m) {
      const int v = s.act(p, m);
      // -2 marks a fixed point; colors cannot see self-loops otherwise.
      sig.push_back(v < 0 ? -1 : (v == p ? -2 : col[v]));
    }
    return sig;
  };

  // Round zero: definedness profile only (colors all start equal, so the
  // signature already is exactly that).
  for (int round = 0; round <= x.points() + y.points(); ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> nx(x.points()), ny(y.points());
    for (int p = 0; p < x.points(); ++p) {
      auto sig = signature(x, r.color_x, p);
      auto it = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first;
      nx[p] = it->second;
    }
    for (int p = 0; p < y.points(); ++p) {
      auto sig = signature(y, r.color_y, p);
      auto it = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first;
      ny[p] = it->second;
    }
    const int count = static_cast<int>(ids.size());
    const bool stable = count == r.colors;
    r.color_x = std::move(nx);
    r.color_y = std::move(ny);
    r.colors = count;
    if (stable) break;
  }
  return r;
}

struct IsoSearch {
  const PartialMSet& x;
  const PartialMSet& y;
  const Refinement& ref;
  std::vector<int> assign;   // x point -> y point or -1
  std::vector<char> used;    // y point taken
  std::vector<int> order;    // x points in search order

  bool consistent(int xp, int yp) const {
    if (ref.color_x[xp] != ref.color_y[yp]) return false;
    const int ms = x.msize();
    for (int m = 0; m < ms; ++m) {
      const int xm = x.act(xp, m);
      const int ym = y.act(yp, m);
      if ((xm < 0) != (ym < 0)) return false;
      if (xm < 0) continue;
      // Treat the candidate pair xp -> yp as if already assigned.
      if (xm == xp ? ym != yp : (assign[xm] >= 0 && assign[xm] != ym))
        return false;
      if (ym == yp && xm != xp) return false;
    }
    // constraints from already-placed points whose images hit xp
    for (int u = 0; u < x.points(); ++u) {
      if (assign[u] < 0) continue;
      for (int m = 0; m < ms; ++m) {
        if (x.act(u, m) == xp && y.act(assign[u], m) != yp) return false;
        if (y.act(assign[u], m) == yp && x.act(u, m) != xp) return false;
      }
    }
    return true;
  }

  bool search(size_t k) {
    if (k == order.size())
      return is_morphism(PointMap{x, y, assign});  // reject and keep searching
    const int xp = order[k];
    for (int yp = 0; yp < y.points(); ++yp) {
      if (used[yp] || !consistent(xp, yp)) continue;
      assign[xp] = yp;
      used[yp] = 1;
      if (search(k + 1)) return true;
      assign[xp] = -1;
      used[yp] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<PointMap> isomorphic(const PartialMSet& x, const PartialMSet& y) {
  if (!same_monoid(x, y)) throw InputError("monoid mismatch in isomorphism test");
  if (x.points() != y.points()) return std::nullopt;
  if (x.points() == 0) return PointMap{x, y, {}};

  const Refinement ref = refine_colors(x, y);
  std::vector<int> hist_x(ref.colors, 0), hist_y(ref.colors, 0);
  for (int c : ref.color_x) ++hist_x[c];
  for (int c : ref.color_y) ++hist_y[c];
  if (hist_x != hist_y) return std::nullopt;

  IsoSearch s{x, y, ref, std::vector<int>(x.points(), -1),
              std::vector<char>(y.points(), 0), {}};
  s.order.resize(x.points());
  for (int p = 0; p < x.points(); ++p) s.order[p] = p;
  // rarest colors first keeps the branching factor down
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    if (hist_x[ref.color_x[a]] != hist_x[ref.color_x[b]])
      return hist_x[ref.color_x[a]] < hist_x[ref.color_x[b]];
    return a < b;
  });

  if (!s.search(0)) return std::nullopt;
  return PointMap{x, y, s.assign};
}

}  // namespace burnside
