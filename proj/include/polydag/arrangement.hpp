#pragma once

// Max-tropical hyperplane arrangements of point configurations and their
// covector decompositions.
//
// A configuration is a d x n TropMatrix V whose columns v^(1..n) are points.
// The apex of column j is a tropical hyperplane with sectors S_i; a point x
// lies in the closed sector S_i(v^(j)) iff -v_ij + x_i is maximal over the
// finite entries of column j.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydag/trop.hpp"

namespace polydag {

/// Subgraph of the bipartite support graph: edge (j,i) joins point j to coordinate i.
class Covector {
 public:
  Covector() = default;
  /// Throws SizeLimitExceeded when n*d > 64.
  Covector(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  bool has(int j, int i) const { return (bits_ >> bit(j, i)) & 1; }
  Covector with(int j, int i) const;
  std::uint64_t bits() const { return bits_; }
  std::size_t edge_count() const;

  /// Edges (j,i), sorted.
  std::vector<std::pair<int, int>> edges() const;
  /// L_i: the points j joined to coordinate i.
  std::vector<int> predecessors(int i) const;
  /// Coordinates joined to point j.
  std::vector<int> sectors(int j) const;

  bool contains(const Covector& other) const { return (bits_ & other.bits_) == other.bits_; }
  Covector unite(const Covector& other) const;

  /// Compact form such as "(1,12,123)"; empty sets print as "-".
  std::string compact() const;

  friend auto operator<=>(const Covector&, const Covector&) = default;

 private:
  int bit(int j, int i) const { return j * d_ + i; }

  int d_ = 0;
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// a_i = #L_i.
std::vector<int> coarse_type(const Covector& c);

/// Ordered by cell containment: an element lies below another when its
/// covector contains the other's.
struct CovectorPoset {
  int d = 0;
  int n = 0;
  /// Sorted.
  std::vector<Covector> elements;
  /// Cover relations (lower, upper) as indices into elements.
  std::vector<std::pair<int, int>> hasse;

  /// Covectors of the full-dimensional cells (the maximal elements).
  std::vector<Covector> chambers() const;
  int index_of(const Covector& c) const;
};

CovectorPoset make_poset(int d, int n, std::vector<Covector> elements);

/// Throws ValidationError unless every row and column of V has a finite entry.
void require_doubly_r_astic(const TropMatrix& v);

/// Edges (j,i) where -v_ij + x_i attains the maximum over the finite entries of column j.
Covector affine_covector(const std::vector<Rational>& x, const TropMatrix& v);

/// All covectors of nonempty cells, read off the regular subdivision of the
/// root polytope with heights v_ij.
CovectorPoset covector_decomposition(const TropMatrix& v);

/// Covectors with every L_i nonempty: the cells of the tropical convex hull.
CovectorPoset tconv_cells(const CovectorPoset& p);

/// The perfect matching {(j,j)}. Requires a square matrix with zero diagonal.
Covector polytrope_cell(const TropMatrix& c);

/// A point whose covector is exactly L, or nullopt when no cell carries L.
/// Solved directly from the sector inequalities by exact LP.
std::optional<std::vector<Rational>> covector_interior_point(const TropMatrix& v, const Covector& l);

/// (tau on points, sigma on coordinates) mapping the covectors of V onto those
/// of W, or nullopt. n, d <= 5.
std::optional<std::pair<std::vector<int>, std::vector<int>>> tropically_equivalent(const TropMatrix& v,
                                                                                    const TropMatrix& w);

/// Relabels edge (j,i) to (tau[j], sigma[i]).
Covector relabel(const Covector& c, const std::vector<int>& tau, const std::vector<int>& sigma);

}  // namespace polydag
