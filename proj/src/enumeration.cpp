#include "polydag/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "polydag/errors.hpp"

namespace polydag {

namespace {

void check_enumeration_size(int n, int limit) {
  if (n < 1 || n > limit) {
    throw SizeLimitExceeded("enumeration supports 1 <= n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
}

void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded("time budget exhausted");
}

bool is_transitive(const Dag& g) {
  auto reach = g.reachability();
  for (int j = 0; j < g.n(); ++j) {
    for (int i = j + 1; i < g.n(); ++i) {
      if (reach[j][i] && !g.has_edge(j, i)) return false;
    }
  }
  return true;
}

/// Hyperplane a.x = b through the given chart points.
struct Hyperplane {
  Vec a;
  Rational b;
  int side(const Vec& p) const { return sgn(dot(a, p) - b); }
};

Hyperplane hyperplane_through(const std::vector<Vec>& pts) {
  const int dim = static_cast<int>(pts.front().size());
  Mat m;
  for (const auto& p : pts) {
    Vec row = p;
    row.push_back(-1);
    m.push_back(std::move(row));
  }
  auto ns = nullspace(m, dim + 1);
  Vec a(ns.front().begin(), ns.front().end() - 1);
  return {a, ns.front().back()};
}

std::optional<Vec> barycentric(const std::vector<Vec>& simplex, const Vec& x) {
  const int dim = static_cast<int>(x.size());
  Mat m(dim + 1, Vec(simplex.size()));
  for (std::size_t k = 0; k < simplex.size(); ++k) {
    for (int c = 0; c < dim; ++c) m[c][k] = simplex[k][c];
    m[dim][k] = 1;
  }
  Vec rhs = x;
  rhs.push_back(1);
  return solve(m, rhs);
}

/// Backtracking search for the central triangulations of one point configuration.
class CentralSearch {
 public:
  CentralSearch(const PointList& a, Deadline deadline) : a_(a), deadline_(deadline) {
    chart_ = affine_chart(a.points);
    dim_ = static_cast<int>(chart_.front().size());
    build_candidates();
  }

  std::vector<Subdivision> run() {
    auto start = first_simplices();
    for (int s : start) {
      chosen_.clear();
      ridge_use_.clear();
      push(s);
      search();
    }
    std::sort(found_.begin(), found_.end(),
              [](const Subdivision& x, const Subdivision& y) { return x.cells < y.cells; });
    return found_;
  }

 private:
  struct Ridge {
    std::vector<int> points;
    bool boundary = false;
    Hyperplane plane;
    std::vector<int> cofaces;
  };

  struct Candidate {
    std::vector<int> points;
    /// Ridge ids, and the side of the ridge hyperplane the opposite vertex is on.
    std::vector<std::pair<int, int>> ridges;
  };

  void build_candidates() {
    // Only simplices whose far facet lies in a facet of conv(A) missing the origin.
    const int origin = a_.origin_index();
    std::set<std::vector<int>> seen;
    for (const auto& f : hull_facets(a_.points)) {
      if (std::binary_search(f.points.begin(), f.points.end(), origin)) continue;
      std::vector<int> pick(dim_);
      choose(f.points, 0, 0, pick, [&](const std::vector<int>& sigma) {
        std::vector<int> cell = sigma;
        cell.push_back(origin);
        std::sort(cell.begin(), cell.end());
        if (seen.count(cell)) return;
        Mat m;
        for (int p : sigma) m.push_back(sub(chart_[p], chart_[origin]));
        if (rank(m) != dim_) return;
        seen.insert(cell);
      });
    }
    for (const auto& cell : seen) {
      Candidate c{cell, {}};
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<int> r;
        for (std::size_t k = 0; k < cell.size(); ++k) {
          if (k != drop) r.push_back(cell[k]);
        }
        int id = ridge_id(r);
        ridges_[id].cofaces.push_back(static_cast<int>(candidates_.size()));
        c.ridges.push_back({id, ridges_[id].plane.side(chart_[cell[drop]])});
      }
      candidates_.push_back(std::move(c));
    }
    compat_.assign(candidates_.size() * candidates_.size(), 0);
  }

  template <typename Visit>
  void choose(const std::vector<int>& from, std::size_t start, int depth, std::vector<int>& pick, Visit visit) {
    if (depth == dim_) {
      visit(pick);
      return;
    }
    for (std::size_t k = start; k < from.size(); ++k) {
      pick[depth] = from[k];
      choose(from, k + 1, depth + 1, pick, visit);
    }
  }

  int ridge_id(const std::vector<int>& r) {
    auto it = ridge_index_.find(r);
    if (it != ridge_index_.end()) return it->second;
    Ridge ridge{r, false, {}, {}};
    std::vector<Vec> pts;
    for (int p : r) pts.push_back(chart_[p]);
    ridge.plane = hyperplane_through(pts);
    bool pos = false, neg = false;
    for (const auto& p : chart_) {
      int s = ridge.plane.side(p);
      pos = pos || s > 0;
      neg = neg || s < 0;
    }
    ridge.boundary = !(pos && neg);
    int id = static_cast<int>(ridges_.size());
    ridges_.push_back(std::move(ridge));
    ridge_index_.emplace(r, id);
    return id;
  }

  /// Candidates containing a generic interior point; a triangulation has exactly one of them.
  std::vector<int> first_simplices() {
    Vec centroid(dim_, Rational(0));
    for (const auto& p : chart_) {
      for (int c = 0; c < dim_; ++c) centroid[c] += p[c];
    }
    for (auto& c : centroid) c /= static_cast<long>(chart_.size());
    for (long attempt = 1;; ++attempt) {
      Vec x = centroid;
      Rational delta(1, 97 + 13 * attempt);
      Rational step = delta;
      for (int c = 0; c < dim_; ++c) {
        x[c] += step;
        step *= delta;
      }
      bool generic = true;
      std::vector<int> inside;
      for (std::size_t k = 0; k < candidates_.size() && generic; ++k) {
        std::vector<Vec> simplex;
        for (int p : candidates_[k].points) simplex.push_back(chart_[p]);
        auto lambda = *barycentric(simplex, x);
        bool all_positive = true;
        for (const auto& l : lambda) {
          generic = generic && sgn(l) != 0;
          all_positive = all_positive && sgn(l) > 0;
        }
        if (all_positive) inside.push_back(static_cast<int>(k));
      }
      if (generic) return inside;
    }
  }

  bool compatible(int s, int t) {
    auto& slot = compat_[static_cast<std::size_t>(s) * candidates_.size() + t];
    if (slot == 0) {
      bool ok = cells_intersect_properly(a_, candidates_[s].points, candidates_[t].points);
      slot = ok ? 1 : 2;
      compat_[static_cast<std::size_t>(t) * candidates_.size() + s] = slot;
    }
    return slot == 1;
  }

  void push(int s) {
    chosen_.push_back(s);
    for (auto [r, side] : candidates_[s].ridges) ridge_use_[r].push_back({s, side});
  }

  void pop() {
    int s = chosen_.back();
    chosen_.pop_back();
    for (auto [r, side] : candidates_[s].ridges) {
      auto& use = ridge_use_[r];
      use.pop_back();
      if (use.empty()) ridge_use_.erase(r);
    }
  }

  void search() {
    check_deadline(deadline_);
    int open = -1, open_side = 0;
    for (const auto& [r, use] : ridge_use_) {
      if (use.size() == 1 && !ridges_[r].boundary) {
        open = r;
        open_side = use.front().second;
        break;
      }
    }
    if (open < 0) {
      std::vector<std::vector<int>> cells;
      for (int s : chosen_) cells.push_back(candidates_[s].points);
      found_.emplace_back(std::move(cells));
      return;
    }
    for (int t : ridges_[open].cofaces) {
      int side = 0;
      for (auto [r, sd] : candidates_[t].ridges) {
        if (r == open) side = sd;
      }
      if (side == open_side) continue;
      bool ok = true;
      for (int s : chosen_) {
        if (!compatible(s, t)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      push(t);
      search();
      pop();
    }
  }

  const PointList& a_;
  Deadline deadline_;
  std::vector<Point> chart_;
  int dim_ = 0;
  std::vector<Candidate> candidates_;
  std::vector<Ridge> ridges_;
  std::map<std::vector<int>, int> ridge_index_;
  std::vector<char> compat_;
  std::vector<int> chosen_;
  std::map<int, std::vector<std::pair<int, int>>> ridge_use_;
  std::vector<Subdivision> found_;
};

}  // namespace

std::vector<Dag> enumerate_dags(int n) {
  check_enumeration_size(n, 6);
  const int pairs = n * (n - 1) / 2;
  std::vector<Dag> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    auto g = Dag::from_pair_mask(n, mask);
    if (canonical_dag(g).pair_mask() == mask) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Dag> enumerate_transitive_dags(int n) {
  std::vector<Dag> out;
  for (auto& g : enumerate_dags(n)) {
    if (is_transitive(g)) out.push_back(std::move(g));
  }
  return out;
}

Subdivision permute_points(const Subdivision& s, const std::vector<int>& perm) {
  std::vector<std::vector<int>> cells;
  for (const auto& cell : s.cells) {
    std::vector<int> c;
    for (int p : cell) c.push_back(perm[p]);
    std::sort(c.begin(), c.end());
    cells.push_back(std::move(c));
  }
  return Subdivision(std::move(cells));
}

Subdivision apply_automorphism(const Dag& g, const Subdivision& s, const std::vector<int>& perm) {
  // Point 0 is the origin, point k+1 is edge k.
  std::vector<int> image(g.edge_count() + 1, 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    int idx = g.edge_index(perm[e.from], perm[e.to]);
    if (idx < 0) throw ValidationError("apply_automorphism: permutation does not preserve the graph");
    image[k + 1] = idx + 1;
  }
  return permute_points(s, image);
}

std::vector<std::vector<int>> linear_symmetries(const PointList& a) {
  const int count = a.size();
  std::map<Vec, int> index;
  for (int k = 0; k < count; ++k) index.emplace(a.points[k], k);
  // Greedy basis of the linear span, then coordinates of every point in it.
  std::vector<int> basis;
  Mat rows;
  for (int k = 0; k < count; ++k) {
    auto trial = rows;
    trial.push_back(a.points[k]);
    if (rank(trial) > static_cast<int>(rows.size())) {
      rows = std::move(trial);
      basis.push_back(k);
    }
  }
  const int dim = static_cast<int>(basis.size());
  const int ambient = a.points.empty() ? 0 : static_cast<int>(a.points.front().size());
  std::vector<Vec> coords(count);
  for (int k = 0; k < count; ++k) {
    Mat m(ambient, Vec(dim));
    for (int c = 0; c < ambient; ++c) {
      for (int b = 0; b < dim; ++b) m[c][b] = a.points[basis[b]][c];
    }
    coords[k] = *solve(m, a.points[k]);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> images(dim);
  std::vector<bool> used(count, false);
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == dim) {
      std::vector<int> perm(count);
      std::vector<bool> hit(count, false);
      for (int k = 0; k < count; ++k) {
        Vec img(ambient, Rational(0));
        for (int b = 0; b < dim; ++b) {
          if (sgn(coords[k][b]) == 0) continue;
          for (int c = 0; c < ambient; ++c) img[c] += coords[k][b] * a.points[images[b]][c];
        }
        auto it = index.find(img);
        if (it == index.end() || hit[it->second]) return;
        hit[it->second] = true;
        perm[k] = it->second;
      }
      out.push_back(std::move(perm));
      return;
    }
    for (int k = 0; k < count; ++k) {
      if (used[k] || sgn(dot(a.points[k], a.points[k])) == 0) continue;
      used[k] = true;
      images[depth] = k;
      self(self, depth + 1);
      used[k] = false;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename Map>
int count_orbits(const std::vector<RegularTriangulation>& ts, const std::vector<std::vector<int>>& group, Map apply) {
  std::set<std::vector<std::vector<int>>> orbits;
  for (const auto& t : ts) {
    auto best = t.cells.cells;
    for (const auto& g : group) best = std::min(best, apply(t.cells, g).cells);
    orbits.insert(best);
  }
  return static_cast<int>(orbits.size());
}

}  // namespace

CentralTriangulations enumerate_central_triangulations(const Dag& g, Deadline deadline) {
  check_enumeration_size(g.n(), 5);
  auto a = fundamental_polytope(g);
  CentralTriangulations out;
  if (g.edge_count() == 0) {
    Subdivision single(std::vector<std::vector<int>>{{0}});
    out.all.push_back(single);
    out.regular.push_back({single, {Rational(0)}});
    out.regular_orbits = 1;
    out.automorphism_orbits = 1;
    return out;
  }
  out.all = CentralSearch(a, deadline).run();
  for (const auto& t : out.all) {
    check_deadline(deadline);
    if (auto h = is_regular(a, t, false)) out.regular.push_back({t, *h});
  }
  out.regular_orbits = count_orbits(out.regular, linear_symmetries(a), permute_points);
  out.automorphism_orbits = count_orbits(out.regular, automorphisms(g), [&](const Subdivision& s, const auto& perm) {
    return apply_automorphism(g, s, perm);
  });
  return out;
}

TableRow count_generic_types(int n, const EnumerationOptions& options) {
  check_enumeration_size(n, 5);
  auto start = std::chrono::steady_clock::now();
  TableRow row;
  row.n = n;
  auto dags = enumerate_dags(n);
  row.dags = static_cast<long>(dags.size());
  for (const auto& g : dags) row.transitive += is_transitive(g);

  row.per_graph.resize(dags.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  const int workers = std::max(1, options.workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int id) {
    try {
      for (std::size_t k = next++; k < dags.size() && !failed; k = next++) {
        auto result = enumerate_central_triangulations(dags[k], options.deadline);
        auto& slot = row.per_graph[k];
        slot.graph = dags[k];
        slot.canonical = canonical_form(dags[k]);
        slot.regular = static_cast<int>(result.regular.size());
        slot.regular_orbits = result.regular_orbits;
        slot.automorphism_orbits = result.automorphism_orbits;
        slot.non_regular = static_cast<int>(result.all.size() - result.regular.size());
      }
    } catch (...) {
      errors[id] = std::current_exception();
      failed = true;
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& c : row.per_graph) {
    row.triangulations += c.regular_orbits;
    row.triangulations_raw += c.regular;
    row.triangulations_automorphism += c.automorphism_orbits;
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace polydag
