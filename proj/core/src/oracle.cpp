#include "setopt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "setopt/scalarize.hpp"

namespace setopt::oracle {

namespace {

const Rational kLimit = Rational(Integer(1) << 60);

// All weight vectors (w_1..w_n) of nonnegative integers summing to d.
void compositions(std::size_t n, int d, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
  if (cur.size() + 1 == n) {
    cur.push_back(d);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int w = d; w >= 0; --w) {
    cur.push_back(w);
    compositions(n, d - w, cur, fn);
    cur.pop_back();
  }
}

void barycentric_grid(const std::vector<Vector>& verts, int density, std::set<Vector>& out) {
  std::vector<int> cur;
  const Rational inv = Rational(1) / density;
  compositions(verts.size(), density, cur, [&](const std::vector<int>& w) {
    Vector p(verts.front().dim());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (w[i] != 0) p += verts[i] * (inv * w[i]);
    }
    out.insert(std::move(p));
  });
}

bool in_planar_hull(const std::vector<Vector>& hull, const Vector& y) {
  if (hull.size() == 1) return hull.front() == y;
  if (hull.size() == 2) {
    Vector d = hull[1] - hull[0];
    Vector w = y - hull[0];
    if (d[0] * w[1] - d[1] * w[0] != 0) return false;
    Rational s = dot(d, w);
    return s >= 0 && s <= dot(d, d);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vector& a = hull[i];
    const Vector& b = hull[(i + 1) % hull.size()];
    if ((b[0] - a[0]) * (y[1] - a[1]) - (b[1] - a[1]) * (y[0] - a[0]) < 0) return false;
  }
  return true;
}

}  // namespace

bool BisectionResult::brackets(const ExtReal& v) const {
  switch (kind) {
    case Kind::PosInf:
      return v.is_pos_inf();
    case Kind::NegInf:
      return v.is_neg_inf();
    case Kind::Interval:
      return v.is_finite() && lo <= v.value() && v.value() <= hi;
  }
  return false;
}

BisectionResult z_bisection(const PolyhedralCone& k, const Vector& e, const Vector& y, Rational lo, Rational hi,
                            int iters) {
  Direction dir(e, k);
  auto pred = [&](const Rational& t) { return contains(k, e * t - y); };
  BisectionResult out;
  if (hi <= lo) hi = lo + 1;
  Rational width = hi - lo;
  while (pred(lo)) {
    lo -= width;
    width *= 2;
    if (lo < -kLimit) {
      out.kind = BisectionResult::Kind::NegInf;
      return out;
    }
  }
  width = hi - lo;
  while (!pred(hi)) {
    hi += width;
    width *= 2;
    if (hi > kLimit) {
      out.kind = BisectionResult::Kind::PosInf;
      return out;
    }
  }
  for (int i = 0; i < iters; ++i) {
    Rational mid = (lo + hi) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  out.lo = lo;
  out.hi = hi;
  return out;
}

SampleCloud sample_set(const VSet& p, int density, const Rational& ray_truncation) {
  if (density < 1) throw PreconditionError("InvalidDensity", "density must be positive");
  if (ray_truncation <= 0) throw PreconditionError("InvalidTruncation", "ray truncation must be positive");
  SampleCloud cloud{p, {}, density, ray_truncation};
  if (p.is_points()) {
    cloud.points = p.vertices();
    return cloud;
  }
  std::set<Vector> pts;
  std::vector<Vector> hull;
  if (p.dim() == 2) {
    hull = convex_hull_2d(p.vertices());
    if (hull.size() <= 3) {
      barycentric_grid(hull, density, pts);
    } else {
      for (std::size_t i = 1; i + 1 < hull.size(); ++i) barycentric_grid({hull[0], hull[i], hull[i + 1]}, density, pts);
    }
  } else {
    std::vector<Vector> verts = p.vertices();
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() <= 8) {
      barycentric_grid(verts, density, pts);
    } else {
      for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) barycentric_grid({verts[i], verts[j]}, density, pts);
      }
    }
  }
  for (const auto& v : p.vertices()) {
    for (const auto& r : p.rays()) {
      pts.insert(v + r * (ray_truncation / 2));
      pts.insert(v + r * ray_truncation);
    }
  }
  cloud.points.assign(pts.begin(), pts.end());
  for (const auto& y : cloud.points) {
    bool ok = (p.dim() == 2 && p.is_bounded()) ? in_planar_hull(hull, y) : set_contains(p, y);
    if (!ok) throw InternalError("SampleOutsideSet", to_string(y) + " is not in the sampled set");
  }
  return cloud;
}

SampledPair zpair_sampled(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q, int density,
                          PairKind kind) {
  Direction dir(e, k);
  const VSet& outer = kind == PairKind::Z1 ? q : p;
  const VSet& inner = kind == PairKind::Z1 ? p : q;
  const auto outer_pts = sample_set(outer, density).points;
  const auto inner_pts = sample_set(inner, density).points;
  const int sign = kind == PairKind::Z1 ? 1 : -1;

  SampledPair out{ExtReal::neg_inf(), ExtReal::neg_inf()};
  for (const auto& o : outer_pts) {
    ExtReal best = ExtReal::pos_inf();
    for (const auto& s : inner_pts) {
      ExtReal v = z_value_any(k, e, (s - o) * Rational(sign));
      if (v < best) best = v;
    }
    if (best > out.both_sampled) out.both_sampled = best;

    ExtReal exact_inner = kind == PairKind::Z1
                              ? inner_inf(k, e, p, o).value
                              : z2_pair(k, e, VSet::points({o}), q).value;
    if (exact_inner > out.outer_sampled) out.outer_sampled = exact_inner;
  }
  return out;
}

}  // namespace setopt::oracle
