#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cogdof {

using Rational = boost::multiprecision::cpp_rational;

// Always "p/q", including integers ("2/1").
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);

struct DofPoint {
  Rational d1;
  Rational d2;

  friend bool operator==(const DofPoint&, const DofPoint&) = default;
};

// a1*d1 + a2*d2 <= b
struct Halfspace {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t b = 0;

  bool satisfied_by(const DofPoint& p) const { return a1 * p.d1 + a2 * p.d2 <= Rational(b); }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

using IntPoint = std::pair<std::int64_t, std::int64_t>;

// A convex polygon in the nonnegative quadrant, held both as halfspaces and
// as its vertex list. Vertices are canonical: deduplicated, collinear
// interior points dropped, counterclockwise starting from the
// lexicographically smallest vertex.
class Region2D {
 public:
  // Intersection of the given halfspaces with d1 >= 0, d2 >= 0. The result may
  // be empty or unbounded when built from arbitrary input; check before use.
  static Region2D from_halfspaces(std::vector<Halfspace> halfspaces);

  // Convex hull of nonnegative integer points. Halfspaces come from the hull
  // edges, so they are all supporting.
  static Region2D from_points(const std::vector<IntPoint>& points);

  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::vector<DofPoint>& vertices() const { return vertices_; }

  bool empty() const { return vertices_.empty(); }
  bool bounded() const;

  bool contains(const DofPoint& p) const;
  // Every vertex of `other` lies in this region.
  bool contains(const Region2D& other) const;

 private:
  std::vector<Halfspace> halfspaces_;
  std::vector<DofPoint> vertices_;
};

// Canonical counterclockwise hull (monotone chain). Exposed for reuse and
// testing.
std::vector<DofPoint> convex_hull(std::vector<DofPoint> points);

bool regions_equal(const Region2D& a, const Region2D& b);

// max d1 + d2 over the region, evaluated at the vertices. Throws
// InvalidArgument for an empty or unbounded region.
Rational sum_dof_lp(const Region2D& region);

}  // namespace cogdof
