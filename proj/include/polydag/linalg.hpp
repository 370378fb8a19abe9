#pragma once

// Small exact dense linear algebra over the rationals.

#include <optional>
#include <vector>

#include "polydag/rational.hpp"

namespace polydag {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// Row-reduces in place; returns pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<Vec> nullspace(Mat m, int cols);

/// Some solution of m x = rhs, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& rhs);

Rational dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

/// Scales v so its first nonzero entry is +-1; keeps the sign.
Vec normalize_direction(Vec v);

}  // namespace polydag
