#include <random>

#include "doctest.h"
#include "polydag/polytrope.hpp"
#include "support.hpp"

using namespace polydag;
using testing_support::random_dag_matrix;
using testing_support::random_point;
using testing_support::random_rational;

namespace {

const TropValue INF = TropValue::inf();

TropMatrix example_c() { return {{1, 4, 0}, {-1, 0, -3}, {5, INF, INF}}; }

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

/// A point of tconv(C*) built as C* (.) z.
std::vector<Rational> hull_point(std::mt19937_64& rng, const TropMatrix& star) {
  std::vector<TropValue> z;
  for (int j = 0; j < star.cols(); ++j) z.push_back(TropValue(random_rational(rng, -4, 4)));
  std::vector<Rational> x;
  for (const auto& t : mat_vec(star, z)) x.push_back(t.value());
  return x;
}

}  // namespace

TEST_CASE("q_membership") {
  // x2 - x3 = -1 exceeds the bound c23 = -3.
  CHECK_FALSE(q_membership(ints({0, -1, 0}), example_c()));
  CHECK(q_membership(ints({0, -1, 5}), example_c()));
  CHECK_FALSE(q_membership(ints({5, 0, 0}), example_c()));
  auto star = kleene_star(example_c());
  for (int j = 0; j < 3; ++j) {
    std::vector<Rational> col;
    for (const auto& t : star.column(j)) col.push_back(t.value());
    CHECK(q_membership(col, example_c()));
    CHECK(tconv_membership(col, star));
  }
  CHECK_THROWS_AS(q_membership(ints({0, 0}), example_c()), DimensionMismatch);
}

TEST_CASE("tconv membership") {
  auto star = kleene_star(example_c());
  CHECK_FALSE(tconv_membership(ints({5, 0, 0}), star));
  CHECK(tconv_membership(ints({1, 0, 6}), star));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto c = random_dag_matrix(rng, n, 0.6);
    auto s = kleene_star(c);
    auto inside = hull_point(rng, s);
    CHECK(q_membership(inside, c));
    CHECK(tconv_membership(inside, s));
    auto x = random_point(rng, n, -3, 3);
    CHECK(q_membership(x, c) == tconv_membership(x, s));
  }
}

TEST_CASE("Q(C) equals Q(C*)") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto c = random_dag_matrix(rng, n, 0.6);
    auto s = kleene_star(c);
    auto x = trial % 2 ? random_point(rng, n, -3, 3) : hull_point(rng, s);
    CHECK(q_membership(x, c) == q_membership(x, s));
  }
}

TEST_CASE("polytrope equality") {
  CHECK(polytrope_equal(example_c(), kleene_star(example_c())));
  TropMatrix chain3{{0, INF, INF}, {1, 0, INF}, {INF, 1, 0}};
  CHECK(polytrope_equal(to_matrix(kappa3(1, 1, 3)), chain3));
  CHECK_FALSE(polytrope_equal(to_matrix(kappa3(1, 1, 1)), to_matrix(kappa3(1, 1, 2))));
  CHECK_THROWS_AS(polytrope_equal(TropMatrix::identity(2), TropMatrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(polytrope_equal(TropMatrix{{0, -1}, {-1, 0}}, TropMatrix::identity(2)), NegativeCycle);
}

TEST_CASE("facet descriptions") {
  auto f = facet_description(kappa3(1, 1, 3));
  REQUIRE(f.size() == 2);
  CHECK(f[0].edge == Edge{0, 1});
  CHECK(f[0].bound == 1);
  CHECK(f[1].edge == Edge{1, 2});
  CHECK(f[1].bound == 1);
  CHECK(facet_description(kappa3(1, 1, 1)).size() == 3);
  CHECK(facet_description(chain({2, 3, 4})).size() == 3);
}

TEST_CASE("facet descriptions are minimal") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto g = from_matrix(random_dag_matrix(rng, n, 0.7, -2, 4));
    auto star = kleene_star(to_matrix(g));
    auto facets = facet_description(g);
    auto closure = transitive_closure(g);
    // Kept bounds: tightening or loosening a single one moves the Kleene star.
    for (const auto& f : facets) {
      CHECK(kleene_star(to_matrix(g.with_weight(f.edge.from, f.edge.to, f.bound + Rational(1, 3)))) != star);
      CHECK(kleene_star(to_matrix(g.with_weight(f.edge.from, f.edge.to, f.bound - Rational(1, 3)))) != star);
    }
    // Omitted closure edges: raise each alone and all together, including to infinity.
    WeightedDag relaxed = closure;
    WeightedDag dropped = closure;
    for (const auto& e : closure.edges()) {
      bool kept = false;
      for (const auto& f : facets) kept = kept || f.edge == e;
      if (kept) continue;
      auto bound = *closure.weight(e.from, e.to);
      CHECK(kleene_star(to_matrix(closure.with_weight(e.from, e.to, bound + 5))) == star);
      CHECK(kleene_star(to_matrix(closure.without_edge(e.from, e.to))) == star);
      relaxed = relaxed.with_weight(e.from, e.to, bound + 1 + static_cast<long>(rng() % 7));
      dropped = dropped.without_edge(e.from, e.to);
    }
    CHECK(kleene_star(to_matrix(relaxed)) == star);
    CHECK(kleene_star(to_matrix(dropped)) == star);
  }
}
