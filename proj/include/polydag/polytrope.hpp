#pragma once

// Weighted digraph polyhedra Q(C) = {x : x_i - x_j <= c_ij}.

#include <vector>

#include "polydag/dag.hpp"
#include "polydag/trop.hpp"

namespace polydag {

/// x_i - x_j <= c_ij for every finite off-diagonal entry.
bool q_membership(const std::vector<Rational>& x, const TropMatrix& c);

/// x lies in the min-plus span of the columns of V (up to adding a constant).
bool tconv_membership(const std::vector<Rational>& x, const TropMatrix& v);

/// Q(C1) = Q(C2), decided by comparing Kleene stars. Propagates NegativeCycle.
bool polytrope_equal(const TropMatrix& c1, const TropMatrix& c2);

struct FacetBound {
  Edge edge;
  Rational bound;
};

/// The irredundant inequalities x_i - x_j <= c_ij of Q(C) for a weighted DAG:
/// the edges and weights of its weighted transitive reduction.
std::vector<FacetBound> facet_description(const WeightedDag& g);

}  // namespace polydag
