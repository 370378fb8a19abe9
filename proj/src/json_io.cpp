#include "polydag/json_io.hpp"

#include <fstream>

#include "polydag/errors.hpp"

namespace polydag {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw ValidationError(std::string("field '") + key + "' must be an array");
  return v;
}

/// 1-based label to 0-based index within [0, limit).
int label(const Json& v, int limit, const char* what) {
  if (!v.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer label");
  int k = v.get<int>();
  if (k < 1 || k > limit) {
    throw ValidationError(std::string(what) + " " + std::to_string(k) + " outside 1.." + std::to_string(limit));
  }
  return k - 1;
}

Json edge_json(const Edge& e) { return Json{{"from", e.from + 1}, {"to", e.to + 1}}; }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ValidationError("expected a rational as a string or integer, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

Json to_json(const TropValue& t) { return to_string(t); }

TropValue trop_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_trop(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  return TropValue(rational_from_json(j));
}

Json to_json(const TropMatrix& m) {
  Json out;
  if (!m.is_square()) out["d"] = m.rows();
  out["n"] = m.cols();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

TropMatrix matrix_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int d = j.contains("d") ? int_field(j, "d") : n;
  if (n < 1 || d < 1) throw ValidationError("matrix dimensions must be positive");
  const auto& rows = array_field(j, "entries");
  if (static_cast<int>(rows.size()) != d) {
    throw DimensionMismatch("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(d));
  }
  std::vector<TropValue> e;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw DimensionMismatch("every matrix row needs " + std::to_string(n) + " entries");
    }
    for (const auto& v : row) e.push_back(trop_from_json(v));
  }
  return TropMatrix(d, n, std::move(e));
}

Json to_json(const Dag& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Dag graph_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1) throw ValidationError("a graph needs at least one node");
  std::vector<Edge> edges;
  for (const auto& e : array_field(j, "edges")) edges.push_back({label(field(e, "from"), n, "from"), label(field(e, "to"), n, "to")});
  return Dag(n, std::move(edges));
}

Json to_json(const WeightedDag& g) {
  Json edges = Json::array();
  for (const auto& e : g.weighted_edges()) {
    auto item = edge_json({e.from, e.to});
    item["w"] = to_json(e.w);
    edges.push_back(std::move(item));
  }
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

WeightedDag dag_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1) throw ValidationError("a graph needs at least one node");
  std::vector<WeightedEdge> edges;
  for (const auto& e : array_field(j, "edges")) {
    edges.push_back({label(field(e, "from"), n, "from"), label(field(e, "to"), n, "to"), rational_from_json(field(e, "w"))});
  }
  return WeightedDag(n, std::move(edges));
}

Json to_json(const Covector& c) {
  Json edges = Json::array();
  for (auto [j, i] : c.edges()) edges.push_back(Json::array({j + 1, i + 1}));
  return Json{{"d", c.d()}, {"n", c.n()}, {"edges", std::move(edges)}, {"compact", c.compact()}};
}

Covector covector_from_json(const Json& j) {
  const int d = int_field(j, "d");
  const int n = int_field(j, "n");
  Covector c(d, n);
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("covector edges are [point, coordinate] pairs");
    c = c.with(label(e[0], n, "point"), label(e[1], d, "coordinate"));
  }
  return c;
}

Json to_json(const CovectorPoset& p) {
  Json elements = Json::array();
  for (const auto& c : p.elements) elements.push_back(to_json(c));
  Json hasse = Json::array();
  for (auto [lo, hi] : p.hasse) hasse.push_back(Json::array({lo, hi}));
  Json chambers = Json::array();
  for (const auto& c : p.chambers()) chambers.push_back(p.index_of(c));
  return Json{{"d", p.d}, {"n", p.n}, {"elements", std::move(elements)}, {"hasse", std::move(hasse)}, {"chambers", std::move(chambers)}};
}

Json to_json(const std::vector<FacetBound>& facets) {
  Json edges = Json::array();
  for (const auto& f : facets) {
    auto item = edge_json(f.edge);
    item["bound"] = to_json(f.bound);
    edges.push_back(std::move(item));
  }
  return Json{{"edges", std::move(edges)}};
}

Json subdivision_json(const PointList& a, const Subdivision& s, const std::vector<Rational>* heights) {
  Json points = Json::array();
  for (const auto& p : a.points) {
    Json coords = Json::array();
    for (const auto& x : p) coords.push_back(to_json(x));
    points.push_back(std::move(coords));
  }
  Json labels = Json::array();
  for (const auto& l : a.labels) labels.push_back(to_string(l));
  Json cells = Json::array();
  for (const auto& cell : s.cells) {
    Json c = Json::array();
    for (int p : cell) c.push_back(p + 1);
    cells.push_back(std::move(c));
  }
  Json out{{"points", std::move(points)}, {"labels", std::move(labels)}, {"cells", std::move(cells)}};
  if (heights) {
    Json h = Json::array();
    for (const auto& x : *heights) h.push_back(to_json(x));
    out["heights"] = std::move(h);
  }
  return out;
}

Json to_json(const std::vector<EdgeReport>& report) {
  Json edges = Json::array();
  for (const auto& r : report) {
    auto item = edge_json(r.edge);
    item["w"] = to_json(r.weight);
    item["w_star"] = to_json(r.star);
    item["estimate"] = to_json(r.estimate);
    item["estimate_decimal"] = to_double(r.estimate);
    item["identifiable"] = r.identifiable;
    edges.push_back(std::move(item));
  }
  return Json{{"edges", std::move(edges)}};
}

Json to_json(const TableRow& row, bool per_graph, bool timing) {
  Json out{{"n", row.n},
           {"triangulations", row.triangulations},
           {"dags", row.dags},
           {"transitive", row.transitive},
           {"triangulations_raw", row.triangulations_raw},
           {"triangulations_automorphism", row.triangulations_automorphism}};
  if (per_graph) {
    Json graphs = Json::array();
    for (const auto& c : row.per_graph) {
      graphs.push_back(Json{{"canonical", c.canonical},
                            {"graph", to_json(c.graph)},
                            {"triangulations", c.regular_orbits},
                            {"triangulations_raw", c.regular},
                            {"triangulations_automorphism", c.automorphism_orbits},
                            {"non_regular", c.non_regular}});
    }
    out["per_graph"] = std::move(graphs);
  }
  if (timing) out["seconds"] = row.seconds;
  return out;
}

}  // namespace polydag
