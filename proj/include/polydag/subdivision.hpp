#pragma once

// Fundamental and root polytopes and their regular subdivisions.

#include <optional>
#include <string>
#include <vector>

#include "polydag/dag.hpp"
#include "polydag/hull.hpp"
#include "polydag/trop.hpp"

namespace polydag {

struct PointLabel {
  enum class Kind { Origin, Edge, Entry };
  Kind kind = Kind::Origin;
  /// Edge j->i of a DAG, or entry (row i, column j) of a configuration matrix.
  int from = -1;
  int to = -1;
};

std::string to_string(const PointLabel& label);

struct PointList {
  std::vector<Point> points;
  std::vector<PointLabel> labels;

  int size() const { return static_cast<int>(points.size()); }
  /// Index of the origin label, or -1.
  int origin_index() const;
};

/// Origin first, then e_i - e_j for every edge j->i in edge order.
PointList fundamental_polytope(const Dag& g);
/// Heights (0, w) matching fundamental_polytope.
std::vector<Rational> fundamental_heights(const WeightedDag& g);

/// (e_j, e_i) in Z^n x Z^d for each finite entry v_ij of the d x n matrix V,
/// ordered by column j, then row i.
PointList root_polytope(const TropMatrix& v);
/// Heights v_ij matching root_polytope.
std::vector<Rational> root_heights(const TropMatrix& v);

struct Subdivision {
  /// Maximal cells as sorted point-index sets, kept in sorted order.
  std::vector<std::vector<int>> cells;

  Subdivision() = default;
  explicit Subdivision(std::vector<std::vector<int>> cells);
};

bool subdivision_equal(const Subdivision& a, const Subdivision& b);

/// Projections of the lower facets of the lifted points; non-simplicial cells stay whole.
Subdivision regular_subdivision(const PointList& a, const std::vector<Rational>& heights);

/// Every cell contains the origin as a vertex.
bool is_central(const Subdivision& s, const PointList& a);
/// Every cell has dim + 1 points.
bool is_triangulation(const Subdivision& s, const PointList& a);

/// Throws ValidationError unless the cells are full-dimensional, meet in
/// common faces and cover conv(A).
void validate_subdivision(const PointList& a, const Subdivision& s);

/// Heights h with regular_subdivision(a, h) == s, or nullopt. The origin,
/// when present, is pinned to height 0.
std::optional<std::vector<Rational>> is_regular(const PointList& a, const Subdivision& s, bool validate = true);

/// Normalized volume (dim! times the Euclidean volume in the affine chart of a).
Rational normalized_volume(const PointList& a, const std::vector<int>& cell);

/// Whether conv(cell_a) and conv(cell_b) meet in the common face spanned by
/// their shared points.
bool cells_intersect_properly(const PointList& a, const std::vector<int>& cell_a, const std::vector<int>& cell_b);

}  // namespace polydag
