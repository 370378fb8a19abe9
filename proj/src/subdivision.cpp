#include "polydag/subdivision.hpp"

#include <algorithm>
#include <set>

#include "polydag/lp.hpp"

namespace polydag {

namespace {

std::vector<Point> gather(const std::vector<Point>& pts, const std::vector<int>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(pts[i]);
  return out;
}

/// Star triangulation from the first point, recursing into the facets that miss it.
void pulling(const std::vector<Point>& pts, const std::vector<int>& idx, std::vector<std::vector<int>>& out) {
  auto local = gather(pts, idx);
  int dim = affine_dimension(local);
  if (static_cast<int>(idx.size()) == dim + 1) {
    out.push_back(idx);
    return;
  }
  for (const auto& f : hull_facets(local)) {
    if (std::binary_search(f.points.begin(), f.points.end(), 0)) continue;
    std::vector<int> sub_idx;
    for (int k : f.points) sub_idx.push_back(idx[k]);
    std::vector<std::vector<int>> pieces;
    pulling(pts, sub_idx, pieces);
    for (auto& piece : pieces) {
      piece.insert(piece.begin(), idx[0]);
      out.push_back(std::move(piece));
    }
  }
}

Rational simplex_volume(const std::vector<Point>& chart, const std::vector<int>& simplex) {
  Mat rows;
  for (std::size_t k = 1; k < simplex.size(); ++k) rows.push_back(sub(chart[simplex[k]], chart[simplex[0]]));
  // |det| via elimination.
  const int n = static_cast<int>(rows.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int r = c; r < n; ++r) {
      if (sgn(rows[r][c]) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) return 0;
    std::swap(rows[c], rows[sel]);
    det *= rows[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c] / rows[c][c];
      for (int k = c; k < n; ++k) rows[r][k] -= f * rows[c][k];
    }
  }
  return abs(det);
}

std::vector<int> affine_basis(const std::vector<Point>& chart, const std::vector<int>& cell, int dim) {
  std::vector<int> basis{cell[0]};
  Mat rows;
  for (std::size_t k = 1; k < cell.size() && static_cast<int>(basis.size()) <= dim; ++k) {
    rows.push_back(sub(chart[cell[k]], chart[cell[0]]));
    if (rank(rows) == static_cast<int>(rows.size())) {
      basis.push_back(cell[k]);
    } else {
      rows.pop_back();
    }
  }
  return basis;
}

void check_cells(const PointList& a, const Subdivision& s) {
  if (a.points.empty()) throw ValidationError("empty point list");
  const int dim = affine_dimension(a.points);
  for (const auto& cell : s.cells) {
    if (cell.empty()) throw ValidationError("empty cell");
    for (int i : cell) {
      if (i < 0 || i >= a.size()) throw ValidationError("cell index out of range");
    }
    if (affine_dimension(gather(a.points, cell)) != dim) throw ValidationError("cell is not full-dimensional");
  }
  if (s.cells.empty()) throw ValidationError("subdivision has no cells");
}

}  // namespace

std::string to_string(const PointLabel& label) {
  switch (label.kind) {
    case PointLabel::Kind::Origin:
      return "0";
    case PointLabel::Kind::Edge:
      return "e" + std::to_string(label.to + 1) + "-e" + std::to_string(label.from + 1);
    case PointLabel::Kind::Entry:
      return "(" + std::to_string(label.from + 1) + "," + std::to_string(label.to + 1) + ")";
  }
  return "?";
}

int PointList::origin_index() const {
  for (int i = 0; i < size(); ++i) {
    if (labels[i].kind == PointLabel::Kind::Origin) return i;
  }
  return -1;
}

PointList fundamental_polytope(const Dag& g) {
  PointList out;
  out.points.push_back(Point(g.n(), Rational(0)));
  out.labels.push_back({PointLabel::Kind::Origin, -1, -1});
  for (const auto& e : g.edges()) {
    Point p(g.n(), Rational(0));
    p[e.to] = 1;
    p[e.from] = -1;
    out.points.push_back(std::move(p));
    out.labels.push_back({PointLabel::Kind::Edge, e.from, e.to});
  }
  return out;
}

std::vector<Rational> fundamental_heights(const WeightedDag& g) {
  std::vector<Rational> h{Rational(0)};
  h.insert(h.end(), g.weights().begin(), g.weights().end());
  return h;
}

PointList root_polytope(const TropMatrix& v) {
  const int d = v.rows(), n = v.cols();
  PointList out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) {
      if (v(i, j).is_inf()) continue;
      Point p(n + d, Rational(0));
      p[j] = 1;
      p[n + i] = 1;
      out.points.push_back(std::move(p));
      out.labels.push_back({PointLabel::Kind::Entry, j, i});
    }
  }
  return out;
}

std::vector<Rational> root_heights(const TropMatrix& v) {
  std::vector<Rational> h;
  for (int j = 0; j < v.cols(); ++j) {
    for (int i = 0; i < v.rows(); ++i) {
      if (v(i, j).is_finite()) h.push_back(v(i, j).value());
    }
  }
  return h;
}

Subdivision::Subdivision(std::vector<std::vector<int>> c) : cells(std::move(c)) {
  for (auto& cell : cells) {
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

bool subdivision_equal(const Subdivision& a, const Subdivision& b) {
  return Subdivision(a.cells).cells == Subdivision(b.cells).cells;
}

Subdivision regular_subdivision(const PointList& a, const std::vector<Rational>& heights) {
  if (a.points.empty()) throw ValidationError("regular subdivision of an empty point list");
  if (heights.size() != a.points.size()) throw DimensionMismatch("one height per point is required");
  return Subdivision(lower_cells(a.points, heights));
}

bool is_central(const Subdivision& s, const PointList& a) {
  const int origin = a.origin_index();
  if (origin < 0) return false;
  for (const auto& cell : s.cells) {
    if (!std::binary_search(cell.begin(), cell.end(), origin)) return false;
    // The origin is a vertex unless it is a convex combination of the other points.
    LinearProgram lp;
    std::vector<int> lambda;
    for (int i : cell) {
      if (i != origin) lambda.push_back(lp.add_variable(true));
    }
    const int dim = static_cast<int>(a.points[origin].size());
    for (int c = 0; c < dim; ++c) {
      LinearProgram::Terms terms;
      std::size_t k = 0;
      for (int i : cell) {
        if (i == origin) continue;
        terms.push_back({lambda[k++], a.points[i][c]});
      }
      lp.add_constraint(std::move(terms), Relation::Equal, a.points[origin][c]);
    }
    LinearProgram::Terms sum;
    for (int var : lambda) sum.push_back({var, 1});
    lp.add_constraint(std::move(sum), Relation::Equal, 1);
    if (!lambda.empty() && lp.maximize().status == LpStatus::Optimal) return false;
  }
  return true;
}

bool is_triangulation(const Subdivision& s, const PointList& a) {
  const int dim = affine_dimension(a.points);
  for (const auto& cell : s.cells) {
    if (static_cast<int>(cell.size()) != dim + 1) return false;
    if (affine_dimension(gather(a.points, cell)) != dim) return false;
  }
  return true;
}

Rational normalized_volume(const PointList& a, const std::vector<int>& cell) {
  auto chart = affine_chart(a.points);
  std::vector<std::vector<int>> simplices;
  pulling(chart, cell, simplices);
  const int dim = static_cast<int>(chart[0].size());
  Rational total = 0;
  for (const auto& s : simplices) {
    if (static_cast<int>(s.size()) == dim + 1) total += simplex_volume(chart, s);
  }
  return total;
}

bool cells_intersect_properly(const PointList& a, const std::vector<int>& cell_a, const std::vector<int>& cell_b) {
  auto chart = affine_chart(a.points);
  const int dim = static_cast<int>(chart[0].size());
  LinearProgram lp;
  std::vector<int> coef(dim);
  for (auto& c : coef) c = lp.add_variable();
  int offset = lp.add_variable();
  int eps = lp.add_variable();
  auto affine = [&](int p) {
    LinearProgram::Terms t;
    for (int k = 0; k < dim; ++k) {
      if (sgn(chart[p][k]) != 0) t.push_back({coef[k], chart[p][k]});
    }
    t.push_back({offset, 1});
    return t;
  };
  std::set<int> in_b(cell_b.begin(), cell_b.end());
  std::set<int> in_a(cell_a.begin(), cell_a.end());
  for (int p : cell_a) {
    auto t = affine(p);
    if (in_b.count(p)) {
      lp.add_constraint(std::move(t), Relation::Equal, 0);
    } else {
      t.push_back({eps, 1});
      lp.add_constraint(std::move(t), Relation::LessEq, 0);
    }
  }
  for (int p : cell_b) {
    if (in_a.count(p)) continue;
    auto t = affine(p);
    t.push_back({eps, -1});
    lp.add_constraint(std::move(t), Relation::GreaterEq, 0);
  }
  lp.add_constraint({{eps, 1}}, Relation::LessEq, 1);
  lp.set_objective({{eps, 1}});
  auto r = lp.maximize();
  return r.status == LpStatus::Optimal && sgn(r.objective) > 0;
}

void validate_subdivision(const PointList& a, const Subdivision& s) {
  check_cells(a, s);
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
      if (!cells_intersect_properly(a, s.cells[i], s.cells[j])) {
        throw ValidationError("cells " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not meet in a common face");
      }
    }
  }
  std::vector<int> everything(a.size());
  for (int i = 0; i < a.size(); ++i) everything[i] = i;
  Rational covered = 0;
  for (const auto& cell : s.cells) covered += normalized_volume(a, cell);
  if (covered != normalized_volume(a, everything)) throw ValidationError("cells do not cover the polytope");
}

std::optional<std::vector<Rational>> is_regular(const PointList& a, const Subdivision& s, bool validate) {
  if (validate) {
    validate_subdivision(a, s);
  } else {
    check_cells(a, s);
  }
  auto chart = affine_chart(a.points);
  const int dim = static_cast<int>(chart[0].size());
  const int count = a.size();

  LinearProgram lp;
  std::vector<int> h(count);
  for (auto& v : h) v = lp.add_variable();
  int eps = lp.add_variable();
  if (int origin = a.origin_index(); origin >= 0) lp.add_constraint({{h[origin], 1}}, Relation::Equal, 0);

  for (const auto& cell : s.cells) {
    auto basis = affine_basis(chart, cell, dim);
    Mat m(dim + 1, Vec(dim + 1));
    for (int k = 0; k <= dim; ++k) {
      for (int c = 0; c < dim; ++c) m[c][k] = chart[basis[k]][c];
      m[dim][k] = 1;
    }
    std::vector<bool> in_cell(count, false);
    for (int p : cell) in_cell[p] = true;
    for (int p = 0; p < count; ++p) {
      if (std::find(basis.begin(), basis.end(), p) != basis.end()) continue;
      Vec target(chart[p]);
      target.push_back(1);
      auto lambda = solve(m, target);
      LinearProgram::Terms terms{{h[p], 1}};
      for (int k = 0; k <= dim; ++k) {
        if (sgn((*lambda)[k]) != 0) terms.push_back({h[basis[k]], -(*lambda)[k]});
      }
      if (in_cell[p]) {
        lp.add_constraint(std::move(terms), Relation::Equal, 0);
      } else {
        terms.push_back({eps, -1});
        lp.add_constraint(std::move(terms), Relation::GreaterEq, 0);
      }
    }
  }
  lp.add_constraint({{eps, 1}}, Relation::LessEq, 1);
  lp.set_objective({{eps, 1}});
  auto r = lp.maximize();
  if (r.status != LpStatus::Optimal || sgn(r.objective) <= 0) return std::nullopt;
  return std::vector<Rational>(r.x.begin(), r.x.begin() + count);
}

}  // namespace polydag
