#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "polydag/dag.hpp"
#include "support.hpp"

using namespace polydag;
using testing_support::brute_shortest_path;
using testing_support::random_dag_matrix;

namespace {

const TropValue INF = TropValue::inf();

std::vector<Edge> edges_of(std::initializer_list<std::pair<int, int>> one_based) {
  std::vector<Edge> out;
  for (auto [j, i] : one_based) out.push_back({j - 1, i - 1});
  std::sort(out.begin(), out.end());
  return out;
}

/// Isomorphism by trying every permutation, ignoring the labeling convention.
bool brute_isomorphic(const Dag& a, const Dag& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::set<std::pair<int, int>> target;
  for (const auto& e : b.edges()) target.insert({e.from, e.to});
  std::vector<int> p(a.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      if (!target.count({p[e.from], p[e.to]})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Shortest-path trees from the definition: every reachable non-source node picks
/// any incoming edge from a reachable node; keep the choices whose tree paths are
/// shortest paths.
std::set<std::vector<Edge>> brute_sp_trees(const WeightedDag& g, int s) {
  TropMatrix c = to_matrix(g);
  std::vector<int> reach;
  for (int v = 0; v < g.n(); ++v) {
    if (v != s && brute_shortest_path(c, s, v).is_finite()) reach.push_back(v);
  }
  std::vector<std::vector<int>> options(reach.size());
  for (std::size_t k = 0; k < reach.size(); ++k) {
    for (const auto& e : g.edges()) {
      if (e.to == reach[k] && (e.from == s || std::count(reach.begin(), reach.end(), e.from))) {
        options[k].push_back(e.from);
      }
    }
  }
  std::set<std::vector<Edge>> out;
  std::vector<int> choice(reach.size(), 0);
  while (true) {
    std::map<int, int> parent;
    for (std::size_t k = 0; k < reach.size(); ++k) parent[reach[k]] = options[k][choice[k]];
    bool ok = true;
    for (int v : reach) {
      Rational len = 0;
      int at = v;
      int steps = 0;
      while (at != s && steps <= g.n()) {
        int u = parent[at];
        len += *g.weight(u, at);
        at = u;
        ++steps;
      }
      if (at != s || TropValue(len) != brute_shortest_path(c, s, v)) ok = false;
    }
    if (ok) {
      std::vector<Edge> es;
      for (auto [v, u] : parent) es.push_back({u, v});
      std::sort(es.begin(), es.end());
      out.insert(es);
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == static_cast<int>(options[k].size())) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

WeightedDag random_weighted_dag(std::mt19937_64& rng, int n, double p, int lo = -3, int hi = 6) {
  return from_matrix(random_dag_matrix(rng, n, p, lo, hi));
}

}  // namespace

TEST_CASE("to_matrix") {
  CHECK(to_matrix(kappa3(1, 1, 3)) == TropMatrix{{0, INF, INF}, {1, 0, INF}, {3, 1, 0}});
  CHECK(to_matrix(WeightedDag(2, {})) == TropMatrix{{0, INF}, {INF, 0}});
  CHECK(to_matrix(WeightedDag(2, {{0, 1, 5}})) == TropMatrix{{0, INF}, {5, 0}});
  CHECK(from_matrix(to_matrix(kappa3(1, 2, 3))) == kappa3(1, 2, 3));
  CHECK_THROWS_AS(from_matrix(TropMatrix{{0, 1}, {INF, 0}}), ValidationError);
  CHECK_THROWS_AS(Dag(2, {{1, 0}}), ValidationError);
  CHECK_THROWS_AS(Dag(3, {{0, 1}, {0, 1}}), ValidationError);
}

TEST_CASE("transitive closure") {
  auto closed = transitive_closure(chain({1, 1}));
  CHECK(closed.edges() == edges_of({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(closed.weight(0, 2) == Rational(2));

  CHECK(transitive_closure(kappa3(1, 1, 3)) == kappa3(1, 1, 2));
  WeightedDag empty(4, {});
  CHECK(transitive_closure(empty) == empty);
}

TEST_CASE("transitive reduction") {
  CHECK(transitive_reduction(kappa3(1, 1, 1).graph()).edges() == edges_of({{1, 2}, {2, 3}}));
  CHECK(transitive_reduction(chain({1, 2, 3}).graph()) == chain({1, 2, 3}).graph());
  Dag k4 = complete_dag(4, {1, 1, 1, 1, 1, 1}).graph();
  CHECK(transitive_reduction(k4).edges() == edges_of({{1, 2}, {2, 3}, {3, 4}}));
}

TEST_CASE("weighted transitive reduction regimes") {
  auto r = weighted_transitive_reduction(kappa3(1, 1, 3));
  CHECK(r == chain({1, 1}));
  CHECK(weighted_transitive_reduction(kappa3(1, 1, 1)) == kappa3(1, 1, 1));
  CHECK(weighted_transitive_reduction(kappa3(1, 1, 2)) == chain({1, 1}));

  CHECK(in_open_region(kappa3(1, 1, 1)));
  CHECK_FALSE(in_open_region(kappa3(1, 1, 2)));
  CHECK(in_open_region(chain({5, -3, Rational(1, 2)})));
}

TEST_CASE("shortest-path trees") {
  auto tie = shortest_path_trees(kappa3(1, 1, 2), 0);
  REQUIRE(tie.size() == 2);
  std::set<std::vector<Edge>> got;
  for (const auto& t : tie) got.insert(t.edges());
  CHECK(got == std::set<std::vector<Edge>>{edges_of({{1, 2}, {1, 3}}), edges_of({{1, 2}, {2, 3}})});

  auto strict = shortest_path_trees(kappa3(1, 1, 1), 0);
  REQUIRE(strict.size() == 1);
  CHECK(strict[0].edges() == edges_of({{1, 2}, {1, 3}}));
  CHECK(strict[0].dist[2] == TropValue(1));

  auto single = shortest_path_trees(WeightedDag(1, {}), 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].edges().empty());
}

TEST_CASE("shortest-path trees match the definition oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    // Small integer weights make ties common.
    auto g = random_weighted_dag(rng, n, 0.7, 0, 2);
    for (int s = 0; s < n; ++s) {
      std::set<std::vector<Edge>> got;
      for (const auto& t : shortest_path_trees(g, s)) {
        for (const auto& e : t.edges()) {
          CHECK(TropValue(*g.weight(e.from, e.to)) * t.dist[e.from] == t.dist[e.to]);
        }
        got.insert(t.edges());
      }
      CHECK(got == brute_sp_trees(g, s));
    }
  }
}

TEST_CASE("modification cone") {
  auto cone = modification_cone(kappa3(1, 1, 3));
  CHECK(cone.apex == kappa3(1, 1, 2));
  CHECK(cone.ray_edges == edges_of({{1, 3}}));

  auto open = modification_cone(kappa3(1, 1, 1));
  CHECK(open.apex == kappa3(1, 1, 1));
  CHECK(open.ray_edges.empty());

  auto single = modification_cone(WeightedDag(2, {{0, 1, 7}}));
  CHECK(single.apex == WeightedDag(2, {{0, 1, 7}}));
  CHECK(single.ray_edges.empty());
}

TEST_CASE("canonical forms") {
  Dag a(4, {{0, 1}, {2, 3}});
  Dag b(4, {{0, 2}, {1, 3}});
  CHECK(canonical_form(a) == canonical_form(b));

  Dag chain3(3, {{0, 1}, {1, 2}});
  Dag collider(3, {{0, 2}, {1, 2}});
  Dag fork(3, {{0, 1}, {0, 2}});
  CHECK(canonical_form(chain3) != canonical_form(collider));
  CHECK(canonical_form(fork) != canonical_form(collider));

  Dag k3 = kappa3(1, 1, 1).graph();
  CHECK(automorphisms(k3).size() == 1);
  CHECK(automorphisms(collider).size() == 2);
  CHECK(automorphisms(Dag(3, {})).size() == 6);

  CHECK(canonical_form(kappa3(1, 2, 3)) != canonical_form(kappa3(2, 1, 3)));
  CHECK(canonical_form(WeightedDag(4, {{0, 1, 1}, {2, 3, 2}})) ==
        canonical_form(WeightedDag(4, {{0, 2, 2}, {1, 3, 1}})));
  CHECK(canonical_form(WeightedDag(4, {{0, 1, 1}, {2, 3, 2}})) !=
        canonical_form(WeightedDag(4, {{0, 1, 1}, {2, 3, 1}})));

  CHECK_THROWS_AS(canonical_form(Dag(9, {})), SizeLimitExceeded);
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Dag x = random_weighted_dag(rng, n, 0.5).graph();
    Dag y = random_weighted_dag(rng, n, 0.5).graph();
    CHECK((canonical_form(x) == canonical_form(y)) == brute_isomorphic(x, y));
    Dag cx = canonical_dag(x);
    CHECK(brute_isomorphic(cx, x));
    CHECK(canonical_dag(cx) == cx);
  }
}

TEST_CASE("weighted reduction properties") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto g = random_weighted_dag(rng, n, 0.7, -2, 3);
    auto flat = weighted_transitive_reduction(g);

    Dag reduced = transitive_reduction(g.graph());
    for (const auto& e : reduced.edges()) CHECK(flat.graph().has_edge(e.from, e.to));
    CHECK(weighted_transitive_reduction(flat) == flat);
    for (std::size_t k = 0; k < flat.edges().size(); ++k) {
      CHECK(flat.weights()[k] == *g.weight(flat.edges()[k].from, flat.edges()[k].to));
    }

    // Union over sources of the intersection of all shortest-path trees.
    std::set<Edge> union_of_cores;
    for (int s = 0; s < n; ++s) {
      auto trees = shortest_path_trees(g, s);
      auto first = trees[0].edges();
      std::set<Edge> core(first.begin(), first.end());
      for (const auto& t : trees) {
        auto tree_edges = t.edges();
        std::set<Edge> te(tree_edges.begin(), tree_edges.end());
        std::set<Edge> both;
        std::set_intersection(core.begin(), core.end(), te.begin(), te.end(), std::inserter(both, both.end()));
        core = both;
      }
      union_of_cores.insert(core.begin(), core.end());
    }
    CHECK(std::vector<Edge>(union_of_cores.begin(), union_of_cores.end()) == flat.edges());

    // An edge is redundant exactly when raising it keeps the Kleene star.
    TropMatrix star = kleene_star(to_matrix(g));
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const auto& e = g.edges()[k];
      auto raised = g.with_weight(e.from, e.to, g.weights()[k] + 1);
      bool same = kleene_star(to_matrix(raised)) == star;
      CHECK(same != flat.graph().has_edge(e.from, e.to));
    }
  }
}
