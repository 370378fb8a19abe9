#pragma once

// Exact convex hulls and lower hulls of small rational point sets.

#include <vector>

#include "polydag/linalg.hpp"

namespace polydag {

using Point = Vec;

/// Dimension of the affine span; -1 for no points.
int affine_dimension(const std::vector<Point>& points);

/// Coordinates of the points in an injective affine chart of their span
/// (a subset of the original coordinates, translated so points[0] is the origin).
std::vector<Point> affine_chart(const std::vector<Point>& points);

struct Facet {
  /// Outward normal and offset in chart coordinates: normal . x <= offset on the hull.
  Vec normal;
  Rational offset;
  /// Every input point on the facet, sorted.
  std::vector<int> points;
};

/// Facets of conv(points) inside its affine span. A single point has no facets.
std::vector<Facet> hull_facets(const std::vector<Point>& points);

/// Point sets of the lower facets of the lifted points (p, h(p)); a single
/// cell holding everything when the heights are affine on the span.
std::vector<std::vector<int>> lower_cells(const std::vector<Point>& points, const std::vector<Rational>& heights);

/// Every nonempty face of conv(points) as a sorted point-index set, the
/// polytope itself included.
std::vector<std::vector<int>> all_faces(const std::vector<Point>& points);

}  // namespace polydag
