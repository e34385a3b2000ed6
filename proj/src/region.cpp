#include "cogdof/region.hpp"

#include "cogdof/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace cogdof {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    using boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(cpp_int(text));
    cpp_int den(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(cpp_int(text.substr(0, slash))) / Rational(den);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("malformed rational '" + text + "'");
  }
}

namespace {

Rational cross(const DofPoint& o, const DofPoint& a, const DofPoint& b) {
  return (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
}

bool lex_less(const DofPoint& a, const DofPoint& b) {
  return a.d1 < b.d1 || (a.d1 == b.d1 && a.d2 < b.d2);
}

std::optional<DofPoint> boundary_intersection(const Halfspace& p, const Halfspace& q) {
  const std::int64_t det = p.a1 * q.a2 - p.a2 * q.a1;
  if (det == 0) return std::nullopt;
  const Rational d1 = Rational(p.b * q.a2 - p.a2 * q.b) / det;
  const Rational d2 = Rational(p.a1 * q.b - p.b * q.a1) / det;
  return DofPoint{d1, d2};
}

Halfspace normalized(Halfspace h) {
  std::int64_t g = std::gcd(std::gcd(std::abs(h.a1), std::abs(h.a2)), std::abs(h.b));
  if (g > 1) {
    h.a1 /= g;
    h.a2 /= g;
    h.b /= g;
  }
  return h;
}

void add_unique(std::vector<Halfspace>& out, const Halfspace& h) {
  if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
}

constexpr Halfspace kNonnegD1{-1, 0, 0};
constexpr Halfspace kNonnegD2{0, -1, 0};

}  // namespace

std::vector<DofPoint> convex_hull(std::vector<DofPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<DofPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

Region2D Region2D::from_halfspaces(std::vector<Halfspace> halfspaces) {
  Region2D r;
  add_unique(r.halfspaces_, kNonnegD1);
  add_unique(r.halfspaces_, kNonnegD2);
  for (const auto& h : halfspaces) {
    if (h.a1 == 0 && h.a2 == 0) {
      // 0 <= b: either vacuous or infeasible.
      if (h.b < 0) r.halfspaces_.push_back(h);
      continue;
    }
    add_unique(r.halfspaces_, h);
  }

  std::vector<DofPoint> feasible;
  const auto& hs = r.halfspaces_;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      auto p = boundary_intersection(hs[i], hs[j]);
      if (p && r.contains(*p)) feasible.push_back(*p);
    }
  }
  r.vertices_ = convex_hull(std::move(feasible));
  return r;
}

Region2D Region2D::from_points(const std::vector<IntPoint>& points) {
  if (points.empty()) throw InvalidArgument("convex hull of an empty point set");
  std::vector<DofPoint> pts;
  pts.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (x < 0 || y < 0) throw InvalidArgument("DOF points must be nonnegative");
    pts.push_back({Rational(x), Rational(y)});
  }
  Region2D r;
  r.vertices_ = convex_hull(std::move(pts));
  add_unique(r.halfspaces_, kNonnegD1);
  add_unique(r.halfspaces_, kNonnegD2);

  const auto& v = r.vertices_;
  auto as_int = [](const Rational& q) { return static_cast<std::int64_t>(numerator(q)); };
  if (v.size() == 1) {
    add_unique(r.halfspaces_, normalized({1, 0, as_int(v[0].d1)}));
    add_unique(r.halfspaces_, normalized({0, 1, as_int(v[0].d2)}));
    add_unique(r.halfspaces_, normalized({-1, 0, -as_int(v[0].d1)}));
    add_unique(r.halfspaces_, normalized({0, -1, -as_int(v[0].d2)}));
  } else if (v.size() == 2) {
    const std::int64_t x0 = as_int(v[0].d1), y0 = as_int(v[0].d2);
    const std::int64_t x1 = as_int(v[1].d1), y1 = as_int(v[1].d2);
    const std::int64_t dx = x1 - x0, dy = y1 - y0;
    // The supporting line in both orientations, then caps at each end.
    add_unique(r.halfspaces_, normalized({dy, -dx, dy * x0 - dx * y0}));
    add_unique(r.halfspaces_, normalized({-dy, dx, -(dy * x0 - dx * y0)}));
    add_unique(r.halfspaces_, normalized({dx, dy, dx * x1 + dy * y1}));
    add_unique(r.halfspaces_, normalized({-dx, -dy, -(dx * x0 + dy * y0)}));
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& p = v[i];
      const auto& q = v[(i + 1) % v.size()];
      const std::int64_t x0 = as_int(p.d1), y0 = as_int(p.d2);
      const std::int64_t dx = as_int(q.d1) - x0, dy = as_int(q.d2) - y0;
      // Outward normal of a counterclockwise edge.
      add_unique(r.halfspaces_, normalized({dy, -dx, dy * x0 - dx * y0}));
    }
  }
  return r;
}

bool Region2D::contains(const DofPoint& p) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return h.satisfied_by(p); });
}

bool Region2D::contains(const Region2D& other) const {
  return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                     [&](const DofPoint& p) { return contains(p); });
}

bool Region2D::bounded() const {
  // The recession cone lies in the nonnegative quadrant; in 2-D it is nonzero
  // iff one of its extreme rays is an axis or runs along some boundary line.
  std::vector<std::pair<std::int64_t, std::int64_t>> rays = {{1, 0}, {0, 1}};
  for (const auto& h : halfspaces_) {
    if (h.a1 * h.a2 < 0) rays.push_back({std::abs(h.a2), std::abs(h.a1)});
  }
  for (const auto& [x, y] : rays) {
    const bool recedes = std::all_of(halfspaces_.begin(), halfspaces_.end(),
                                     [&](const Halfspace& h) { return h.a1 * x + h.a2 * y <= 0; });
    if (recedes) return false;
  }
  return true;
}

bool regions_equal(const Region2D& a, const Region2D& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  if (va.size() != vb.size()) return false;
  std::sort(va.begin(), va.end(), lex_less);
  std::sort(vb.begin(), vb.end(), lex_less);
  return va == vb;
}

Rational sum_dof_lp(const Region2D& region) {
  if (region.empty()) throw InvalidArgument("sum DOF of an empty region");
  if (!region.bounded()) throw InvalidArgument("sum DOF of an unbounded region");
  Rational best = region.vertices().front().d1 + region.vertices().front().d2;
  for (const auto& v : region.vertices()) best = std::max(best, Rational(v.d1 + v.d2));
  return best;
}

}  // namespace cogdof
