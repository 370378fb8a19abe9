#pragma once

// Shared helpers for the unit tests: seeded random instances and
// brute-force oracles that do not go through the library algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <vector>

#include "polydag/arrangement.hpp"
#include "polydag/lp.hpp"
#include "polydag/subdivision.hpp"
#include "polydag/trop.hpp"

namespace testing_support {

using polydag::Rational;
using polydag::TropMatrix;
using polydag::TropValue;

/// Random rational p/q with p in [lo*q, hi*q], q in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 4) {
  std::uniform_int_distribution<int> den(1, max_den);
  int q = den(rng);
  std::uniform_int_distribution<int> num(lo * q, hi * q);
  Rational r(num(rng), q);
  r.canonicalize();
  return r;
}

/// Lower-triangular DAG matrix: entry (i,j), j<i, finite with probability p.
inline TropMatrix random_dag_matrix(std::mt19937_64& rng, int n, double p, int lo = -3, int hi = 6) {
  std::bernoulli_distribution coin(p);
  std::vector<TropValue> e(static_cast<std::size_t>(n) * n, TropValue::inf());
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i) * n + i] = TropValue::zero();
    for (int j = 0; j < i; ++j) {
      if (coin(rng)) e[static_cast<std::size_t>(i) * n + j] = TropValue(random_rational(rng, lo, hi));
    }
  }
  return TropMatrix(n, n, std::move(e));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int n, int lo = -8, int hi = 8) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(random_rational(rng, lo, hi));
  return x;
}

/// Finite d x n matrix with random rational entries.
inline TropMatrix random_finite_matrix(std::mt19937_64& rng, int d, int n, int lo = -5, int hi = 5, int den = 7) {
  std::vector<TropValue> e;
  for (int k = 0; k < d * n; ++k) e.push_back(TropValue(random_rational(rng, lo, hi, den)));
  return TropMatrix(d, n, std::move(e));
}

/// Shortest j -> i path length by exhaustive path enumeration, entry (i,j) convention.
inline TropValue brute_shortest_path(const TropMatrix& c, int from, int to) {
  TropValue best = from == to ? TropValue::zero() : TropValue::inf();
  std::vector<bool> on_path(c.rows(), false);
  std::function<void(int, const Rational&)> walk = [&](int at, const Rational& len) {
    if (at == to) {
      best = best + TropValue(len);
      return;
    }
    on_path[at] = true;
    for (int next = 0; next < c.rows(); ++next) {
      if (next == at || on_path[next] || c(next, at).is_inf()) continue;
      walk(next, Rational(len + c(next, at).value()));
    }
    on_path[at] = false;
  };
  walk(from, Rational(0));
  return best;
}

/// Covectors found by trying every choice of nonempty sector sets per point
/// and asking an LP for a point with exactly that covector.
inline std::vector<polydag::Covector> brute_covectors(const TropMatrix& v) {
  const int d = v.rows(), n = v.cols();
  std::vector<std::vector<std::uint32_t>> choices(n);
  for (int j = 0; j < n; ++j) {
    std::uint32_t finite = 0;
    for (int i = 0; i < d; ++i) {
      if (v(i, j).is_finite()) finite |= 1u << i;
    }
    for (std::uint32_t s = finite; s; s = (s - 1) & finite) choices[j].push_back(s);
  }
  std::vector<polydag::Covector> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    polydag::Covector c(d, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < d; ++i) {
        if (choices[j][pick[j]] >> i & 1) c = c.with(j, i);
      }
    }
    if (polydag::covector_interior_point(v, c)) out.push_back(c);
    int j = 0;
    while (j < n && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exponent vectors of the monomials of prod_j max_i (x_i - v_ij) that are
/// strictly dominant somewhere.
inline std::set<std::vector<int>> dominant_monomials(const TropMatrix& v) {
  const int d = v.rows(), n = v.cols();
  std::map<std::vector<int>, Rational> coef;
  std::vector<int> pick(n, 0);
  while (true) {
    bool ok = true;
    std::vector<int> a(d, 0);
    Rational c = 0;
    for (int j = 0; j < n && ok; ++j) {
      ok = v(pick[j], j).is_finite();
      if (ok) {
        ++a[pick[j]];
        c -= v(pick[j], j).value();
      }
    }
    if (ok) {
      auto it = coef.find(a);
      if (it == coef.end() || c > it->second) coef[a] = c;
    }
    int j = 0;
    while (j < n && ++pick[j] == d) pick[j++] = 0;
    if (j == n) break;
  }
  std::set<std::vector<int>> out;
  for (const auto& [a, ca] : coef) {
    polydag::LinearProgram lp;
    std::vector<int> x(d);
    for (auto& var : x) var = lp.add_variable();
    int eps = lp.add_variable();
    for (const auto& [b, cb] : coef) {
      if (b == a) continue;
      polydag::LinearProgram::Terms t{{eps, -1}};
      for (int i = 0; i < d; ++i) {
        if (a[i] != b[i]) t.push_back({x[i], Rational(a[i] - b[i])});
      }
      lp.add_constraint(std::move(t), polydag::Relation::GreaterEq, cb - ca);
    }
    lp.add_constraint({{eps, 1}}, polydag::Relation::LessEq, 1);
    lp.set_objective({{eps, 1}});
    auto r = lp.maximize();
    if (r.status == polydag::LpStatus::Optimal && sgn(r.objective) > 0) out.insert(a);
  }
  return out;
}

/// Central triangulations as maximal cliques of pairwise properly
/// intersecting origin simplices whose volumes add up to the whole polytope.
inline std::vector<polydag::Subdivision> brute_central_triangulations(const polydag::PointList& a) {
  using namespace polydag;
  std::vector<int> all(a.size());
  for (int k = 0; k < a.size(); ++k) all[k] = k;
  const int dim = affine_dimension(a.points);
  const Rational total = normalized_volume(a, all);
  std::vector<std::vector<int>> simplices;
  std::vector<Rational> volume;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pick.size()) == dim) {
      std::vector<int> cell{0};
      cell.insert(cell.end(), pick.begin(), pick.end());
      std::vector<Point> pts;
      for (int p : cell) pts.push_back(a.points[p]);
      if (affine_dimension(pts) == dim) {
        simplices.push_back(cell);
        volume.push_back(normalized_volume(a, cell));
      }
      return;
    }
    for (int k = start; k < a.size(); ++k) {
      pick.push_back(k);
      choose(k + 1);
      pick.pop_back();
    }
  };
  choose(1);
  const int count = static_cast<int>(simplices.size());
  std::vector<std::vector<bool>> ok(count, std::vector<bool>(count, false));
  for (int s = 0; s < count; ++s) {
    for (int t = s + 1; t < count; ++t) {
      ok[s][t] = ok[t][s] = cells_intersect_properly(a, simplices[s], simplices[t]);
    }
  }
  std::vector<Subdivision> out;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bron_kerbosch =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          Rational sum = 0;
          for (int s : r) sum += volume[s];
          if (sum == total) {
            std::vector<std::vector<int>> cells;
            for (int s : r) cells.push_back(simplices[s]);
            out.emplace_back(std::move(cells));
          }
          return;
        }
        int pivot = p.empty() ? x.front() : p.front();
        auto candidates = p;
        for (int v : candidates) {
          if (ok[pivot][v]) continue;
          std::vector<int> p2, x2;
          for (int u : p) {
            if (ok[v][u]) p2.push_back(u);
          }
          for (int u : x) {
            if (ok[v][u]) x2.push_back(u);
          }
          r.push_back(v);
          bron_kerbosch(r, p2, x2);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<int> r, p(count), x;
  for (int s = 0; s < count; ++s) p[s] = s;
  bron_kerbosch(r, p, x);
  std::sort(out.begin(), out.end(), [](const Subdivision& u, const Subdivision& v) { return u.cells < v.cells; });
  return out;
}

}  // namespace testing_support
