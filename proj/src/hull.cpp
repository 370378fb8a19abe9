#include "polydag/hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polydag {

namespace {

struct SimplexFacet {
  std::vector<int> verts;
  Vec normal;
  Rational offset;
};

std::vector<int> chart_pivots(const std::vector<Point>& points) {
  Mat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return {};
  return rref(diffs);
}

std::vector<int> initial_simplex(const std::vector<Point>& chart, int dim) {
  std::vector<int> chosen{0};
  Mat rows;
  for (int i = 1; i < static_cast<int>(chart.size()) && static_cast<int>(chosen.size()) <= dim; ++i) {
    rows.push_back(sub(chart[i], chart[0]));
    if (rank(rows) == static_cast<int>(rows.size())) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  return static_cast<int>(chart_pivots(points).size());
}

std::vector<Point> affine_chart(const std::vector<Point>& points) {
  auto pivots = chart_pivots(points);
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Point q;
    q.reserve(pivots.size());
    for (int c : pivots) q.push_back(p[c] - points[0][c]);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Facet> hull_facets(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  const auto chart = affine_chart(points);
  const int dim = static_cast<int>(chart[0].size());
  const int count = static_cast<int>(chart.size());
  if (dim == 0) return {};

  if (dim == 1) {
    Rational lo = chart[0][0], hi = chart[0][0];
    for (const auto& p : chart) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    Facet low{{Rational(-1)}, -lo, {}}, high{{Rational(1)}, hi, {}};
    for (int i = 0; i < count; ++i) {
      if (chart[i][0] == lo) low.points.push_back(i);
      if (chart[i][0] == hi) high.points.push_back(i);
    }
    return {low, high};
  }

  auto simplex = initial_simplex(chart, dim);
  Vec center(dim, Rational(0));
  for (int v : simplex) {
    for (int k = 0; k < dim; ++k) center[k] += chart[v][k];
  }
  for (auto& x : center) x /= static_cast<long>(simplex.size());

  auto make_facet = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Mat rows;
    for (std::size_t k = 1; k < verts.size(); ++k) rows.push_back(sub(chart[verts[k]], chart[verts[0]]));
    auto ns = nullspace(rows, dim);
    if (ns.size() != 1) throw std::logic_error("hull: degenerate facet");
    SimplexFacet f{std::move(verts), std::move(ns[0]), 0};
    f.offset = dot(f.normal, chart[f.verts[0]]);
    if (dot(f.normal, center) > f.offset) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    return f;
  };

  std::vector<SimplexFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<int> verts;
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k != skip) verts.push_back(simplex[k]);
    }
    facets.push_back(make_facet(std::move(verts)));
  }

  std::vector<bool> in_simplex(count, false);
  for (int v : simplex) in_simplex[v] = true;
  for (int q = 0; q < count; ++q) {
    if (in_simplex[q]) continue;
    std::vector<SimplexFacet> kept;
    std::map<std::vector<int>, int> ridges;
    for (auto& f : facets) {
      if (dot(f.normal, chart[q]) > f.offset) {
        for (std::size_t skip = 0; skip < f.verts.size(); ++skip) {
          std::vector<int> ridge;
          for (std::size_t k = 0; k < f.verts.size(); ++k) {
            if (k != skip) ridge.push_back(f.verts[k]);
          }
          ++ridges[ridge];
        }
      } else {
        kept.push_back(std::move(f));
      }
    }
    if (ridges.empty()) {
      facets = std::move(kept);
      continue;
    }
    for (const auto& [ridge, seen] : ridges) {
      if (seen != 1) continue;
      auto verts = ridge;
      verts.push_back(q);
      kept.push_back(make_facet(std::move(verts)));
    }
    facets = std::move(kept);
  }

  std::map<Vec, Facet> grouped;
  for (const auto& f : facets) {
    Rational scale;
    for (const auto& x : f.normal) {
      if (sgn(x) != 0) {
        scale = abs(x);
        break;
      }
    }
    Vec key;
    for (const auto& x : f.normal) key.push_back(x / scale);
    key.push_back(f.offset / scale);
    if (grouped.count(key)) continue;
    Facet out{Vec(key.begin(), key.end() - 1), key.back(), {}};
    for (int i = 0; i < count; ++i) {
      if (dot(out.normal, chart[i]) == out.offset) out.points.push_back(i);
    }
    grouped.emplace(std::move(key), std::move(out));
  }
  std::vector<Facet> result;
  for (auto& [key, f] : grouped) result.push_back(std::move(f));
  return result;
}

std::vector<std::vector<int>> lower_cells(const std::vector<Point>& points, const std::vector<Rational>& heights) {
  if (points.empty()) throw std::invalid_argument("lower hull of an empty point set");
  if (heights.size() != points.size()) throw std::invalid_argument("one height per point is required");
  auto chart = affine_chart(points);
  const int dim = static_cast<int>(chart[0].size());
  std::vector<int> everything(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) everything[i] = static_cast<int>(i);

  std::vector<Point> lifted = chart;
  for (std::size_t i = 0; i < lifted.size(); ++i) lifted[i].push_back(heights[i]);
  if (affine_dimension(lifted) == dim) return {everything};

  std::vector<std::vector<int>> cells;
  for (const auto& f : hull_facets(lifted)) {
    if (sgn(f.normal.back()) < 0) cells.push_back(f.points);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<std::vector<int>> all_faces(const std::vector<Point>& points) {
  std::set<std::vector<int>> faces;
  std::vector<int> everything(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) everything[i] = static_cast<int>(i);
  faces.insert(everything);
  std::vector<std::vector<int>> frontier;
  auto facets = hull_facets(points);
  for (const auto& f : facets) {
    if (faces.insert(f.points).second) frontier.push_back(f.points);
  }
  while (!frontier.empty()) {
    auto face = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& f : facets) {
      std::vector<int> meet;
      std::set_intersection(face.begin(), face.end(), f.points.begin(), f.points.end(), std::back_inserter(meet));
      if (!meet.empty() && faces.insert(meet).second) frontier.push_back(meet);
    }
  }
  return {faces.begin(), faces.end()};
}

}  // namespace polydag
