#pragma once

// Directed acyclic graphs on nodes 0..n-1 (printed 1..n), always labeled in a
// topological order: every edge runs from a smaller to a larger label.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydag/rational.hpp"
#include "polydag/trop.hpp"

namespace polydag {

struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Dag {
 public:
  Dag() = default;
  /// Sorts the edges. Throws ValidationError on out-of-range nodes, duplicate
  /// edges or an edge with from >= to.
  Dag(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int from, int to) const { return edge_index(from, to) >= 0; }
  /// Position in edges(), or -1.
  int edge_index(int from, int to) const;

  /// Bit k set iff the k-th pair (j,i), j<i, in lexicographic order is an edge.
  std::uint64_t pair_mask() const;
  static Dag from_pair_mask(int n, std::uint64_t mask);

  /// reach[j][i]: a directed path j -> ... -> i exists (reach[j][j] is true).
  std::vector<std::vector<bool>> reachability() const;

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct WeightedEdge {
  int from = 0;
  int to = 0;
  Rational w;
};

class WeightedDag {
 public:
  WeightedDag() = default;
  WeightedDag(int n, std::vector<WeightedEdge> edges);
  WeightedDag(Dag graph, std::vector<Rational> weights);

  int n() const { return graph_.n(); }
  const Dag& graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  /// Parallel to edges().
  const std::vector<Rational>& weights() const { return weights_; }
  std::optional<Rational> weight(int from, int to) const;
  std::vector<WeightedEdge> weighted_edges() const;

  WeightedDag with_weight(int from, int to, const Rational& w) const;
  /// Drops the edge if present.
  WeightedDag without_edge(int from, int to) const;

  friend bool operator==(const WeightedDag&, const WeightedDag&) = default;

 private:
  Dag graph_;
  std::vector<Rational> weights_;
};

/// The triangle 1->2 (a), 2->3 (b), 1->3 (c).
WeightedDag kappa3(const Rational& a, const Rational& b, const Rational& c);
/// Complete DAG; weights listed for the pairs (j,i), j<i, in lexicographic order.
WeightedDag complete_dag(int n, const std::vector<Rational>& weights);
/// Path 1->2->...->n.
WeightedDag chain(const std::vector<Rational>& weights);

/// Entry (i,j) = w(j->i), 0 on the diagonal, INF elsewhere.
TropMatrix to_matrix(const WeightedDag& g);
/// Inverse of to_matrix. Throws ValidationError unless the diagonal is zero
/// and all finite off-diagonal entries lie strictly below it.
WeightedDag from_matrix(const TropMatrix& c);

/// Edges j->i for every path j~>i, weighted with the shortest path length.
WeightedDag transitive_closure(const WeightedDag& g);
/// Covering relations of the reachability order.
Dag transitive_reduction(const Dag& g);

/// Keeps edge j->i iff it is the unique shortest path from j to i, i.e. its
/// weight is strictly below every other j~>i path. Ties drop the edge.
WeightedDag weighted_transitive_reduction(const WeightedDag& g);

/// Same edge set as the weighted transitive reduction.
bool in_open_region(const WeightedDag& g);

struct SPTree {
  int source = 0;
  /// Incoming tree edge's tail per node; -1 for the source and unreached nodes.
  std::vector<int> parent;
  /// Distance from the source; INF when unreached.
  std::vector<TropValue> dist;

  std::vector<Edge> edges() const;
  friend bool operator==(const SPTree&, const SPTree&) = default;
};

/// All shortest-path trees rooted at s spanning the nodes reachable from s.
/// Throws SizeLimitExceeded beyond `limit` trees.
std::vector<SPTree> shortest_path_trees(const WeightedDag& g, int s, std::size_t limit = 1u << 20);

struct ModificationCone {
  /// Transitive closure with shortest-path weights.
  WeightedDag apex;
  /// Edges of the closure that are absent from the weighted transitive reduction.
  std::vector<Edge> ray_edges;
};

ModificationCone modification_cone(const WeightedDag& g);

/// Canonical labels for isomorphism classes, n <= 8. Minimization runs over
/// the topological relabelings, so canonical_dag is itself topologically labeled.
std::string canonical_form(const Dag& g);
std::string canonical_form(const WeightedDag& g);
Dag canonical_dag(const Dag& g);

/// perm[v] is the new label of v.
Dag relabel(const Dag& g, const std::vector<int>& perm);
/// All automorphisms as permutations. n <= 8.
std::vector<std::vector<int>> automorphisms(const Dag& g);

std::string to_dot(const WeightedDag& g);

}  // namespace polydag
