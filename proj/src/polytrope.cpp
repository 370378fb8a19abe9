#include "polydag/polytrope.hpp"

#include "polydag/arrangement.hpp"

namespace polydag {

bool q_membership(const std::vector<Rational>& x, const TropMatrix& c) {
  if (!c.is_square() || static_cast<int>(x.size()) != c.rows()) {
    throw DimensionMismatch("q_membership: point and matrix sizes differ");
  }
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) {
      if (i == j || c(i, j).is_inf()) continue;
      if (x[i] - x[j] > c(i, j).value()) return false;
    }
  }
  return true;
}

bool tconv_membership(const std::vector<Rational>& x, const TropMatrix& v) {
  require_doubly_r_astic(v);
  if (static_cast<int>(x.size()) != v.rows()) throw DimensionMismatch("tconv_membership: point has wrong length");
  // Largest lambda with V (.) lambda >= x, then test whether it reaches x.
  std::vector<TropValue> lambda(v.cols());
  for (int j = 0; j < v.cols(); ++j) {
    std::optional<Rational> best;
    for (int i = 0; i < v.rows(); ++i) {
      if (v(i, j).is_inf()) continue;
      Rational val = x[i] - v(i, j).value();
      if (!best || val > *best) best = val;
    }
    lambda[j] = TropValue(*best);
  }
  auto y = mat_vec(v, lambda);
  for (int i = 0; i < v.rows(); ++i) {
    if (y[i].is_inf() || y[i].value() != x[i]) return false;
  }
  return true;
}

bool polytrope_equal(const TropMatrix& c1, const TropMatrix& c2) {
  if (!c1.is_square() || !c2.is_square() || c1.rows() != c2.rows()) {
    throw DimensionMismatch("polytrope_equal: matrices differ in size");
  }
  return kleene_star(c1) == kleene_star(c2);
}

std::vector<FacetBound> facet_description(const WeightedDag& g) {
  auto flat = weighted_transitive_reduction(g);
  std::vector<FacetBound> out;
  for (std::size_t k = 0; k < flat.edges().size(); ++k) out.push_back({flat.edges()[k], flat.weights()[k]});
  return out;
}

}  // namespace polydag
