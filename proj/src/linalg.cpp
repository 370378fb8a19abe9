#include "polydag/linalg.hpp"

#include <stdexcept>

namespace polydag {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(m[i][c]) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (int k = c; k < cols; ++k) {
        if (sgn(m[r][k]) != 0) m[i][k] -= f * m[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(Mat m, int cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& rhs) {
  if (m.size() != rhs.size()) throw std::invalid_argument("solve: row count differs from rhs length");
  if (m.empty()) return Vec{};
  const int cols = static_cast<int>(m[0].size());
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec normalize_direction(Vec v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      Rational s = abs(x);
      for (auto& y : v) y /= s;
      break;
    }
  }
  return v;
}

}  // namespace polydag
