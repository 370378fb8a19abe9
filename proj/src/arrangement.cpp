#include "polydag/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "polydag/lp.hpp"
#include "polydag/subdivision.hpp"

namespace polydag {

namespace {

constexpr int kEquivalenceLimit = 5;

}  // namespace

Covector::Covector(int d, int n) : d_(d), n_(n) {
  if (d < 0 || n < 0) throw ValidationError("negative covector shape");
  if (d * n > 64) throw SizeLimitExceeded("covectors support at most 64 support-graph edges");
}

Covector Covector::with(int j, int i) const {
  Covector c = *this;
  c.bits_ |= std::uint64_t{1} << bit(j, i);
  return c;
}

std::size_t Covector::edge_count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::pair<int, int>> Covector::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < d_; ++i) {
      if (has(j, i)) out.push_back({j, i});
    }
  }
  return out;
}

std::vector<int> Covector::predecessors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (has(j, i)) out.push_back(j);
  }
  return out;
}

std::vector<int> Covector::sectors(int j) const {
  std::vector<int> out;
  for (int i = 0; i < d_; ++i) {
    if (has(j, i)) out.push_back(i);
  }
  return out;
}

Covector Covector::unite(const Covector& other) const {
  if (d_ != other.d_ || n_ != other.n_) throw DimensionMismatch("covector shapes differ");
  Covector c = *this;
  c.bits_ |= other.bits_;
  return c;
}

std::string Covector::compact() const {
  std::string out = "(";
  for (int i = 0; i < d_; ++i) {
    if (i) out += ",";
    auto l = predecessors(i);
    if (l.empty()) out += "-";
    for (int j : l) {
      // Point labels beyond 9 are bracketed to stay unambiguous.
      out += j < 9 ? std::to_string(j + 1) : "[" + std::to_string(j + 1) + "]";
    }
  }
  return out + ")";
}

std::vector<int> coarse_type(const Covector& c) {
  std::vector<int> a(c.d());
  for (int i = 0; i < c.d(); ++i) a[i] = static_cast<int>(c.predecessors(i).size());
  return a;
}

std::vector<Covector> CovectorPoset::chambers() const {
  std::vector<Covector> out;
  for (const auto& c : elements) {
    bool minimal = true;
    for (const auto& other : elements) {
      if (other != c && c.contains(other)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

int CovectorPoset::index_of(const Covector& c) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), c);
  if (it == elements.end() || *it != c) return -1;
  return static_cast<int>(it - elements.begin());
}

CovectorPoset make_poset(int d, int n, std::vector<Covector> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  CovectorPoset p{d, n, std::move(elements), {}};
  const int m = static_cast<int>(p.elements.size());
  for (int lo = 0; lo < m; ++lo) {
    for (int hi = 0; hi < m; ++hi) {
      if (lo == hi || !p.elements[lo].contains(p.elements[hi])) continue;
      bool cover = true;
      for (int mid = 0; mid < m && cover; ++mid) {
        if (mid == lo || mid == hi) continue;
        if (p.elements[lo].contains(p.elements[mid]) && p.elements[mid].contains(p.elements[hi])) cover = false;
      }
      if (cover) p.hasse.push_back({lo, hi});
    }
  }
  std::sort(p.hasse.begin(), p.hasse.end());
  return p;
}

void require_doubly_r_astic(const TropMatrix& v) {
  if (v.rows() == 0 || v.cols() == 0) throw ValidationError("empty point configuration");
  if (!v.is_doubly_r_astic()) {
    throw ValidationError("point configuration must have a finite entry in every row and column");
  }
}

Covector affine_covector(const std::vector<Rational>& x, const TropMatrix& v) {
  if (static_cast<int>(x.size()) != v.rows()) throw DimensionMismatch("point has the wrong number of coordinates");
  Covector c(v.rows(), v.cols());
  for (int j = 0; j < v.cols(); ++j) {
    std::optional<Rational> best;
    for (int i = 0; i < v.rows(); ++i) {
      if (v(i, j).is_inf()) continue;
      Rational val = x[i] - v(i, j).value();
      if (!best || val > *best) best = val;
    }
    for (int i = 0; i < v.rows(); ++i) {
      if (v(i, j).is_finite() && x[i] - v(i, j).value() == *best) c = c.with(j, i);
    }
  }
  return c;
}

CovectorPoset covector_decomposition(const TropMatrix& v) {
  require_doubly_r_astic(v);
  Covector empty(v.rows(), v.cols());
  auto a = root_polytope(v);
  auto s = regular_subdivision(a, root_heights(v));
  std::set<std::vector<int>> faces;
  for (const auto& cell : s.cells) {
    std::vector<Point> local;
    for (int p : cell) local.push_back(a.points[p]);
    for (const auto& f : all_faces(local)) {
      std::vector<int> global;
      for (int k : f) global.push_back(cell[k]);
      faces.insert(std::move(global));
    }
  }
  std::vector<Covector> covectors;
  for (const auto& f : faces) {
    Covector c = empty;
    for (int p : f) c = c.with(a.labels[p].from, a.labels[p].to);
    bool covers = true;
    for (int j = 0; j < v.cols() && covers; ++j) covers = !c.sectors(j).empty();
    if (covers) covectors.push_back(c);
  }
  return make_poset(v.rows(), v.cols(), std::move(covectors));
}

CovectorPoset tconv_cells(const CovectorPoset& p) {
  std::vector<Covector> kept;
  for (const auto& c : p.elements) {
    bool ok = true;
    for (int i = 0; i < c.d() && ok; ++i) ok = !c.predecessors(i).empty();
    if (ok) kept.push_back(c);
  }
  return make_poset(p.d, p.n, std::move(kept));
}

Covector polytrope_cell(const TropMatrix& c) {
  if (!c.is_square()) throw DimensionMismatch("polytrope cell needs a square matrix");
  Covector m(c.rows(), c.cols());
  for (int j = 0; j < c.cols(); ++j) {
    if (c(j, j) != TropValue::zero()) throw ValidationError("polytrope cell needs a zero diagonal");
    m = m.with(j, j);
  }
  return m;
}

std::optional<std::vector<Rational>> covector_interior_point(const TropMatrix& v, const Covector& l) {
  const int d = v.rows(), n = v.cols();
  LinearProgram lp;
  std::vector<int> x(d), t(n);
  for (auto& var : x) var = lp.add_variable();
  for (auto& var : t) var = lp.add_variable();
  int eps = lp.add_variable();
  lp.add_constraint({{x[0], 1}}, Relation::Equal, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) {
      if (v(i, j).is_inf()) {
        if (l.has(j, i)) return std::nullopt;
        continue;
      }
      // x_i - t_j = v_ij on edges of L, and at most v_ij - eps elsewhere.
      if (l.has(j, i)) {
        lp.add_constraint({{x[i], 1}, {t[j], -1}}, Relation::Equal, v(i, j).value());
      } else {
        lp.add_constraint({{x[i], 1}, {t[j], -1}, {eps, 1}}, Relation::LessEq, v(i, j).value());
      }
    }
  }
  lp.add_constraint({{eps, 1}}, Relation::LessEq, 1);
  lp.set_objective({{eps, 1}});
  auto r = lp.maximize();
  if (r.status != LpStatus::Optimal || sgn(r.objective) <= 0) return std::nullopt;
  return std::vector<Rational>(r.x.begin(), r.x.begin() + d);
}

Covector relabel(const Covector& c, const std::vector<int>& tau, const std::vector<int>& sigma) {
  Covector out(c.d(), c.n());
  for (auto [j, i] : c.edges()) out = out.with(tau[j], sigma[i]);
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> tropically_equivalent(const TropMatrix& v,
                                                                                    const TropMatrix& w) {
  if (v.rows() != w.rows() || v.cols() != w.cols()) throw DimensionMismatch("configurations differ in shape");
  if (v.rows() > kEquivalenceLimit || v.cols() > kEquivalenceLimit) {
    throw SizeLimitExceeded("equivalence search is limited to n, d <= 5");
  }
  const int d = v.rows(), n = v.cols();
  auto pv = covector_decomposition(v);
  auto pw = covector_decomposition(w);
  if (pv.elements.size() != pw.elements.size() || pv.hasse.size() != pw.hasse.size()) return std::nullopt;
  if (pv.chambers().size() != pw.chambers().size()) return std::nullopt;

  std::vector<int> tau(n), sigma(d);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool support = true;
      for (int j = 0; j < n && support; ++j) {
        for (int i = 0; i < d && support; ++i) {
          support = v(i, j).is_finite() == w(sigma[i], tau[j]).is_finite();
        }
      }
      if (!support) continue;
      bool same = true;
      for (const auto& c : pv.elements) {
        if (pw.index_of(relabel(c, tau, sigma)) < 0) {
          same = false;
          break;
        }
      }
      if (same) return std::make_pair(tau, sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return std::nullopt;
}

}  // namespace polydag
