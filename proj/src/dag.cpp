#include "polydag/dag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polydag {

namespace {

constexpr int kCanonicalLimit = 8;

int pair_index(int n, int j, int i) {
  // Pairs (j,i), j<i, enumerated row by row.
  return j * n - j * (j + 1) / 2 + (i - j - 1);
}

/// Shortest path lengths from s in topological order, optionally skipping one edge.
std::vector<TropValue> distances_from(const WeightedDag& g, int s, int skip = -1) {
  std::vector<TropValue> dist(g.n(), TropValue::inf());
  dist[s] = TropValue::zero();
  const auto& edges = g.edges();
  // Edges are sorted by tail, and tails precede heads, so one sweep settles every node.
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (static_cast<int>(k) == skip) continue;
    const auto& e = edges[k];
    if (dist[e.from].is_inf()) continue;
    TropValue candidate = dist[e.from] * TropValue(g.weights()[k]);
    if (candidate < dist[e.to]) dist[e.to] = candidate;
  }
  return dist;
}

void check_canonical_size(int n) {
  if (n > kCanonicalLimit) {
    throw SizeLimitExceeded("canonical forms are limited to " + std::to_string(kCanonicalLimit) + " nodes");
  }
}

bool is_topological(const Dag& g, const std::vector<int>& perm) {
  for (const auto& e : g.edges()) {
    if (perm[e.from] > perm[e.to]) return false;
  }
  return true;
}

template <typename Visit>
void for_each_topological_relabeling(const Dag& g, Visit visit) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_topological(g, perm)) visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Dag::Dag(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ValidationError("negative node count");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n) {
      throw ValidationError("edge " + std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1) +
                            " is out of range");
    }
    if (e.from >= e.to) {
      throw ValidationError("edge " + std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1) +
                            " violates the topological labeling");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("duplicate edge");
  }
}

int Dag::edge_index(int from, int to) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{from, to});
  if (it == edges_.end() || it->from != from || it->to != to) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::uint64_t Dag::pair_mask() const {
  std::uint64_t mask = 0;
  for (const auto& e : edges_) mask |= std::uint64_t{1} << pair_index(n_, e.from, e.to);
  return mask;
}

Dag Dag::from_pair_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      if (mask >> pair_index(n, j, i) & 1) edges.push_back({j, i});
    }
  }
  return Dag(n, std::move(edges));
}

std::vector<std::vector<bool>> Dag::reachability() const {
  std::vector<std::vector<bool>> reach(n_, std::vector<bool>(n_, false));
  for (int v = n_ - 1; v >= 0; --v) {
    reach[v][v] = true;
    for (const auto& e : edges_) {
      if (e.from != v) continue;
      for (int w = 0; w < n_; ++w) {
        if (reach[e.to][w]) reach[v][w] = true;
      }
    }
  }
  return reach;
}

WeightedDag::WeightedDag(int n, std::vector<WeightedEdge> edges) {
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) {
    plain.push_back({e.from, e.to});
    weights_.push_back(e.w);
    weights_.back().canonicalize();
  }
  graph_ = Dag(n, std::move(plain));
}

WeightedDag::WeightedDag(Dag graph, std::vector<Rational> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (weights_.size() != graph_.edge_count()) throw ValidationError("one weight per edge is required");
  for (auto& w : weights_) w.canonicalize();
}

std::optional<Rational> WeightedDag::weight(int from, int to) const {
  int k = graph_.edge_index(from, to);
  if (k < 0) return std::nullopt;
  return weights_[k];
}

std::vector<WeightedEdge> WeightedDag::weighted_edges() const {
  std::vector<WeightedEdge> out;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    out.push_back({edges()[k].from, edges()[k].to, weights_[k]});
  }
  return out;
}

WeightedDag WeightedDag::with_weight(int from, int to, const Rational& w) const {
  auto edges = weighted_edges();
  for (auto& e : edges) {
    if (e.from == from && e.to == to) {
      e.w = w;
      return WeightedDag(n(), std::move(edges));
    }
  }
  edges.push_back({from, to, w});
  return WeightedDag(n(), std::move(edges));
}

WeightedDag WeightedDag::without_edge(int from, int to) const {
  auto edges = weighted_edges();
  std::erase_if(edges, [&](const WeightedEdge& e) { return e.from == from && e.to == to; });
  return WeightedDag(n(), std::move(edges));
}

WeightedDag kappa3(const Rational& a, const Rational& b, const Rational& c) {
  return WeightedDag(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

WeightedDag complete_dag(int n, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != n * (n - 1) / 2) {
    throw ValidationError("complete DAG needs n(n-1)/2 weights");
  }
  std::vector<WeightedEdge> edges;
  std::size_t k = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) edges.push_back({j, i, weights[k++]});
  }
  return WeightedDag(n, std::move(edges));
}

WeightedDag chain(const std::vector<Rational>& weights) {
  std::vector<WeightedEdge> edges;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    edges.push_back({static_cast<int>(k), static_cast<int>(k) + 1, weights[k]});
  }
  return WeightedDag(static_cast<int>(weights.size()) + 1, std::move(edges));
}

TropMatrix to_matrix(const WeightedDag& g) {
  TropMatrix m = TropMatrix::identity(g.n());
  std::vector<TropValue> entries;
  entries.reserve(static_cast<std::size_t>(g.n()) * g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) entries.push_back(m(i, j));
  }
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    entries[static_cast<std::size_t>(e.to) * g.n() + e.from] = TropValue(g.weights()[k]);
  }
  return TropMatrix(g.n(), g.n(), std::move(entries));
}

WeightedDag from_matrix(const TropMatrix& c) {
  if (!c.is_square()) throw DimensionMismatch("DAG matrices must be square");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) {
      if (i == j) {
        if (c(i, i) != TropValue::zero()) throw ValidationError("DAG matrices need a zero diagonal");
        continue;
      }
      if (c(i, j).is_inf()) continue;
      if (j > i) {
        throw ValidationError("finite entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") above the diagonal; nodes must be topologically labeled");
      }
      edges.push_back({j, i, c(i, j).value()});
    }
  }
  return WeightedDag(c.rows(), std::move(edges));
}

WeightedDag transitive_closure(const WeightedDag& g) {
  std::vector<WeightedEdge> edges;
  for (int s = 0; s < g.n(); ++s) {
    auto dist = distances_from(g, s);
    for (int v = s + 1; v < g.n(); ++v) {
      if (dist[v].is_finite()) edges.push_back({s, v, dist[v].value()});
    }
  }
  return WeightedDag(g.n(), std::move(edges));
}

Dag transitive_reduction(const Dag& g) {
  auto reach = g.reachability();
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    bool covered = true;
    for (int k = e.from + 1; k < e.to && covered; ++k) {
      if (k != e.from && reach[e.from][k] && reach[k][e.to]) covered = false;
    }
    if (covered) kept.push_back(e);
  }
  return Dag(g.n(), std::move(kept));
}

WeightedDag weighted_transitive_reduction(const WeightedDag& g) {
  std::vector<WeightedEdge> kept;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    auto alternative = distances_from(g, e.from, static_cast<int>(k))[e.to];
    if (TropValue(g.weights()[k]) < alternative) kept.push_back({e.from, e.to, g.weights()[k]});
  }
  return WeightedDag(g.n(), std::move(kept));
}

bool in_open_region(const WeightedDag& g) {
  return weighted_transitive_reduction(g).edges() == g.edges();
}

std::vector<Edge> SPTree::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] >= 0) out.push_back({parent[v], v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SPTree> shortest_path_trees(const WeightedDag& g, int s, std::size_t limit) {
  if (s < 0 || s >= g.n()) throw ValidationError("source node out of range");
  auto dist = distances_from(g, s);
  std::vector<std::vector<int>> tight(g.n());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (dist[e.from].is_inf()) continue;
    if (dist[e.from] * TropValue(g.weights()[k]) == dist[e.to]) tight[e.to].push_back(e.from);
  }

  std::vector<int> spanned;
  for (int v = 0; v < g.n(); ++v) {
    if (v != s && dist[v].is_finite()) spanned.push_back(v);
  }

  std::vector<SPTree> trees;
  SPTree current{s, std::vector<int>(g.n(), -1), dist};
  auto extend = [&](auto&& self, std::size_t at) -> void {
    if (at == spanned.size()) {
      if (trees.size() >= limit) throw SizeLimitExceeded("too many shortest-path trees");
      trees.push_back(current);
      return;
    }
    int v = spanned[at];
    for (int u : tight[v]) {
      current.parent[v] = u;
      self(self, at + 1);
    }
    current.parent[v] = -1;
  };
  extend(extend, 0);
  return trees;
}

ModificationCone modification_cone(const WeightedDag& g) {
  ModificationCone cone{transitive_closure(g), {}};
  Dag flat = weighted_transitive_reduction(g).graph();
  for (const auto& e : cone.apex.edges()) {
    if (!flat.has_edge(e.from, e.to)) cone.ray_edges.push_back(e);
  }
  return cone;
}

Dag relabel(const Dag& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw DimensionMismatch("permutation length differs from n");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({perm[e.from], perm[e.to]});
  return Dag(g.n(), std::move(edges));
}

std::string canonical_form(const Dag& g) {
  return std::to_string(g.n()) + ":" + std::to_string(canonical_dag(g).pair_mask());
}

Dag canonical_dag(const Dag& g) {
  check_canonical_size(g.n());
  std::uint64_t best = 0;
  bool found = false;
  for_each_topological_relabeling(g, [&](const std::vector<int>& perm) {
    std::uint64_t mask = 0;
    for (const auto& e : g.edges()) mask |= std::uint64_t{1} << pair_index(g.n(), perm[e.from], perm[e.to]);
    if (!found || mask < best) best = mask;
    found = true;
  });
  return Dag::from_pair_mask(g.n(), best);
}

std::string canonical_form(const WeightedDag& g) {
  check_canonical_size(g.n());
  const int n = g.n();
  const int pairs = n * (n - 1) / 2;
  // Absent pairs sort before present ones; present ones compare by weight.
  using Code = std::vector<std::optional<Rational>>;
  auto less = [](const Code& a, const Code& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].has_value() != b[k].has_value()) return !a[k].has_value();
      if (a[k] && *a[k] != *b[k]) return *a[k] < *b[k];
    }
    return false;
  };
  std::optional<Code> best;
  for_each_topological_relabeling(g.graph(), [&](const std::vector<int>& perm) {
    Code code(pairs);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const auto& e = g.edges()[k];
      code[pair_index(n, perm[e.from], perm[e.to])] = g.weights()[k];
    }
    if (!best || less(code, *best)) best = std::move(code);
  });
  std::string out = std::to_string(n) + ":";
  for (int k = 0; k < pairs; ++k) {
    if (k) out += ",";
    out += (*best)[k] ? to_string(*(*best)[k]) : "-";
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(const Dag& g) {
  check_canonical_size(g.n());
  std::vector<std::vector<int>> out;
  for_each_topological_relabeling(g, [&](const std::vector<int>& perm) {
    for (const auto& e : g.edges()) {
      if (!g.has_edge(perm[e.from], perm[e.to])) return;
    }
    out.push_back(perm);
  });
  return out;
}

std::string to_dot(const WeightedDag& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v + 1 << ";\n";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    out << "  " << e.from + 1 << " -> " << e.to + 1 << " [label=\"" << to_string(g.weights()[k]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace polydag
