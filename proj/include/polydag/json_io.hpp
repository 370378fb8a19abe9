#pragma once

// JSON forms of the library types. Rationals travel as "p/q" strings, INF as
// "inf", and node, point and coordinate labels are 1-based.

#include <string>
#include <vector>

#include "json.hpp"
#include "polydag/arrangement.hpp"
#include "polydag/dag.hpp"
#include "polydag/enumeration.hpp"
#include "polydag/mlbn.hpp"
#include "polydag/polytrope.hpp"
#include "polydag/subdivision.hpp"
#include "polydag/trop.hpp"

namespace polydag {

using Json = nlohmann::ordered_json;

/// Parses a file; ValidationError on I/O or syntax errors.
Json read_json_file(const std::string& path);

Json to_json(const Rational& r);
/// Accepts "p/q", decimal strings and JSON integers.
Rational rational_from_json(const Json& j);

Json to_json(const TropValue& t);
TropValue trop_from_json(const Json& j);

/// {"n", "entries"} for square matrices; {"d", "n", "entries"} otherwise.
Json to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const Json& j);

/// {"n", "edges": [{"from", "to"}]}.
Json to_json(const Dag& g);
/// Reads the edge list and ignores weights.
Dag graph_from_json(const Json& j);

/// {"n", "edges": [{"from", "to", "w"}]}.
Json to_json(const WeightedDag& g);
WeightedDag dag_from_json(const Json& j);

/// {"d", "n", "edges": [[j, i]], "compact"}.
Json to_json(const Covector& c);
Covector covector_from_json(const Json& j);

/// {"d", "n", "elements", "hasse": [[lower, upper]], "chambers": [index]}.
Json to_json(const CovectorPoset& p);

/// {"edges": [{"from", "to", "bound"}]}.
Json to_json(const std::vector<FacetBound>& facets);

/// {"points", "labels", "cells"} plus "heights" when given.
Json subdivision_json(const PointList& a, const Subdivision& s, const std::vector<Rational>* heights = nullptr);

Json to_json(const std::vector<EdgeReport>& report);

/// Counts of one table row; per-graph entries and timing on request.
Json to_json(const TableRow& row, bool per_graph, bool timing);

}  // namespace polydag
