// SVG rendering of the real locus of a polynomial in (x, lambda) over a
// rectangular window, with the f > 0 region shaded.
#pragma once

#include "inflect/poly.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace inflect {

/// Rectangle [x_min, x_max] x [l_min, l_max] sampled on an (nx+1) x (nl+1)
/// node lattice.
struct Window {
  Rational x_min{-1}, x_max{3};
  Rational l_min{-1}, l_max{3};
  int nx = 512;
  int nl = 512;

  /// Throws std::invalid_argument unless x_min < x_max, l_min < l_max,
  /// nx >= 2 and nl >= 2.
  void validate() const;

  Rational x_at(int i) const;
  Rational l_at(int j) const;

  bool operator==(const Window&) const = default;
};

/// [-1, 3] x [-1, 3] at 512 x 512.
Window default_window();

/// Exact signs at the nodes, row-major by lambda:
/// values[j * (nx+1) + i] is the sign at (x_at(i), l_at(j)).
struct SignGrid {
  Window window;
  std::vector<int> values;

  int at(int i, int j) const { return values[static_cast<std::size_t>(j) * (window.nx + 1) + i]; }
};

/// p must be over (x, lambda) (either order) or a constant.
SignGrid sample_sign_grid(const SparsePoly& p, const Window& w);

struct PlanePoint {
  Rational x;
  Rational lambda;
  bool operator==(const PlanePoint&) const = default;
};

struct ContourSegment {
  PlanePoint a;
  PlanePoint b;
  bool operator==(const ContourSegment&) const = default;
};

/// Marching squares over every cell, scanned row by row.
///
/// Tie rule: a node with value 0 is classified with the positive nodes. An
/// edge between differently classified nodes is crossed at its zero node
/// when it has one, otherwise at its midpoint. Segments that collapse to a
/// point are dropped. In the two saddle configurations the positive corners
/// are kept apart, i.e. the segments cut off each positive corner.
std::vector<ContourSegment> contour_segments(const SignGrid& g);

/// Number of adjacent node pairs in row j that are classified differently
/// under the tie rule.
int row_sign_changes(const SignGrid& g, int j);

/// 64-bit FNV-1a of the canonical JSON of p, as 16 hex digits.
std::string polynomial_hash(const SparsePoly& p);

struct SvgMetadata {
  std::string title;
  std::string polynomial_hash;
};

/// Writes one SVG 1.1 document: shaded runs of cells whose four corners are
/// all +1 in `shade`, the contour segments as a single path, axes, and
/// marks at (0,0) and (1,1). `shade` must share the window. Throws
/// std::runtime_error if the stream fails.
void write_svg(const std::vector<ContourSegment>& segments, const SignGrid* shade, const Window& w,
               std::ostream& out, const SvgMetadata& meta = {});

/// Full pipeline for an inflection polynomial: contour of p, shading by the
/// Legendre cubic, metadata from p.
void render_curve(const SparsePoly& p, const Window& w, std::ostream& out, const std::string& title);

}  // namespace inflect
