#pragma once

// Isomorphism classes of DAGs and the regular central triangulations of their
// fundamental polytopes.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "polydag/dag.hpp"
#include "polydag/subdivision.hpp"

namespace polydag {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// One canonical representative per isomorphism class, sorted by pair mask. n <= 6.
std::vector<Dag> enumerate_dags(int n);
/// Classes with E = E*. n <= 6.
std::vector<Dag> enumerate_transitive_dags(int n);

struct RegularTriangulation {
  Subdivision cells;
  /// Heights (0, w) on the fundamental polytope reproducing the cells.
  std::vector<Rational> witness;
};

struct CentralTriangulations {
  /// Every central triangulation, regular or not, in lexicographic order.
  std::vector<Subdivision> all;
  std::vector<RegularTriangulation> regular;
  /// Regular ones counted up to the linear symmetries of F_G.
  int regular_orbits = 0;
  /// Regular ones counted up to graph automorphisms only.
  int automorphism_orbits = 0;
};

/// Backtracking over simplices that contain the origin, then an exact
/// regularity filter. n <= 5. Throws BudgetExceeded past the deadline.
CentralTriangulations enumerate_central_triangulations(const Dag& g, Deadline deadline = std::nullopt);

/// Maps a triangulation of F_G through a node permutation that preserves G.
Subdivision apply_automorphism(const Dag& g, const Subdivision& s, const std::vector<int>& perm);

/// Point permutations induced by linear maps that send the configuration to
/// itself. Every graph automorphism induces one; reversal of the graph
/// combined with negation may induce more.
std::vector<std::vector<int>> linear_symmetries(const PointList& a);

/// Image of a subdivision under a point permutation.
Subdivision permute_points(const Subdivision& s, const std::vector<int>& perm);

struct GraphCount {
  Dag graph;
  std::string canonical;
  int regular = 0;
  int regular_orbits = 0;
  int automorphism_orbits = 0;
  int non_regular = 0;
};

struct TableRow {
  int n = 0;
  /// Regular central triangulations summed over classes, each class counted
  /// up to the linear symmetries of its fundamental polytope.
  long triangulations = 0;
  /// The same, counted as labeled objects on each representative.
  long triangulations_raw = 0;
  /// The same, counted up to graph automorphisms only.
  long triangulations_automorphism = 0;
  long dags = 0;
  long transitive = 0;
  std::vector<GraphCount> per_graph;
  double seconds = 0;
};

struct EnumerationOptions {
  int workers = 1;
  Deadline deadline;
};

/// A row of counts for DAGs on n nodes. n <= 5. Classes are processed by a
/// pool of workers; results are merged in class order.
TableRow count_generic_types(int n, const EnumerationOptions& options = {});

}  // namespace polydag
