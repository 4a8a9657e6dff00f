#include "inflect/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace inflect {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

}  // namespace

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(const LatticePoint& p, const Segment& s) {
  if (cross(s.a, s.b, p) != 0) return false;
  return std::min(s.a.first, s.b.first) <= p.first && p.first <= std::max(s.a.first, s.b.first) &&
         std::min(s.a.second, s.b.second) <= p.second &&
         p.second <= std::max(s.a.second, s.b.second);
}

std::vector<LatticePoint> lattice_points_on_segment(const Segment& s) {
  const long dx = s.b.first - s.a.first;
  const long dy = s.b.second - s.a.second;
  const long g = std::gcd(dx, dy);
  if (g == 0) return {s.a};
  std::vector<LatticePoint> out;
  for (long t = 0; t <= g; ++t) out.emplace_back(s.a.first + t * dx / g, s.a.second + t * dy / g);
  return out;
}

std::set<LatticePoint> lattice_points_in_hull(const std::vector<LatticePoint>& vertices) {
  if (vertices.empty()) return {};
  const std::vector<LatticePoint> hull = convex_hull(vertices);
  if (hull.size() == 1) return {hull[0]};
  if (hull.size() == 2) {
    const auto pts = lattice_points_on_segment({hull[0], hull[1]});
    return {pts.begin(), pts.end()};
  }
  long x0 = hull[0].first, x1 = x0, y0 = hull[0].second, y1 = y0;
  for (const auto& [x, y] : hull) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  std::set<LatticePoint> out;
  for (long x = x0; x <= x1; ++x) {
    for (long y = y0; y <= y1; ++y) {
      bool inside = true;
      for (std::size_t i = 0; i < hull.size() && inside; ++i) {
        inside = cross(hull[i], hull[(i + 1) % hull.size()], {x, y}) >= 0;
      }
      if (inside) out.emplace(x, y);
    }
  }
  return out;
}

NewtonData newton_data(const SparsePoly& p) {
  if (p.arity() != 2) throw VariableError("Newton polygon needs a bivariate polynomial");
  NewtonData nd;
  for (const auto& [e, c] : p.terms()) nd.support.emplace(e[0], e[1]);
  nd.hull_vertices = convex_hull({nd.support.begin(), nd.support.end()});
  const auto& h = nd.hull_vertices;
  if (h.size() >= 2) {
    const std::size_t edges = h.size() == 2 ? 1 : h.size();
    for (std::size_t i = 0; i < edges; ++i) {
      const LatticePoint& a = h[i];
      const LatticePoint& b = h[(i + 1) % h.size()];
      // counterclockwise: outward normal of a->b is (dy, -dx)
      if (b.first - a.first > 0 && b.second - a.second < 0) nd.lower_faces.push_back({a, b});
    }
  }
  return nd;
}

bool is_lower_face(const NewtonData& nd, const Segment& s) {
  return std::any_of(nd.lower_faces.begin(), nd.lower_faces.end(), [&](const Segment& f) {
    return f == s || (f.a == s.b && f.b == s.a);
  });
}

SparsePoly face_restriction(const SparsePoly& p, const Segment& face) {
  if (p.arity() != 2) throw VariableError("face restriction needs a bivariate polynomial");
  SparsePoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (on_segment({e[0], e[1]}, face)) out.add_term(e, c);
  }
  return out;
}

}  // namespace inflect
