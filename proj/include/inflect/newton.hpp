// Newton polygons of bivariate polynomials: support, convex hull and the
// faces that face the origin.
#pragma once

#include "inflect/poly.hpp"

#include <set>
#include <utility>
#include <vector>

namespace inflect {

/// (exponent of the first variable, exponent of the second).
using LatticePoint = std::pair<long, long>;

struct Segment {
  LatticePoint a;
  LatticePoint b;
  bool operator==(const Segment&) const = default;
};

struct NewtonData {
  std::set<LatticePoint> support;
  /// Counterclockwise, starting from the lowest of the leftmost points;
  /// collinear points are dropped.
  std::vector<LatticePoint> hull_vertices;
  /// Hull edges whose outward normal points strictly into the negative
  /// quadrant, ordered from the top-left end.
  std::vector<Segment> lower_faces;
};

/// Monotone-chain hull. One or two vertices for degenerate inputs.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

/// All integer points inside or on the convex hull of `vertices` (any order,
/// repeats allowed, points and segments included).
std::set<LatticePoint> lattice_points_in_hull(const std::vector<LatticePoint>& vertices);

std::vector<LatticePoint> lattice_points_on_segment(const Segment& s);
bool on_segment(const LatticePoint& p, const Segment& s);

NewtonData newton_data(const SparsePoly& p);

/// True when s (in either orientation) is one of the lower faces.
bool is_lower_face(const NewtonData& nd, const Segment& s);

/// Terms of p whose exponents lie on the segment.
SparsePoly face_restriction(const SparsePoly& p, const Segment& face);

}  // namespace inflect
