// Command-line front end: every subcommand reads JSON or CSV files and
// prints JSON (or SVG for render) to stdout.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "polydag/config.hpp"
#include "polydag/json_io.hpp"
#include "polydag/render.hpp"

using namespace polydag;

namespace {

constexpr int kValidationExit = 2;
constexpr int kBudgetExit = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(Json{{"from", e.from + 1}, {"to", e.to + 1}});
  return out;
}

Json permutation_json(const std::vector<int>& p) {
  Json out = Json::array();
  for (int x : p) out.push_back(x + 1);
  return out;
}

void cmd_kleene(const std::string& path) {
  auto c = matrix_from_json(read_json_file(path));
  auto star = kleene_star(c);
  emit(Json{{"input_is_kleene", star == c}, {"kleene_star", to_json(star)}});
}

void cmd_reduce(const std::string& path) {
  auto g = dag_from_json(read_json_file(path));
  auto flat = weighted_transitive_reduction(g);
  auto cone = modification_cone(g);
  std::vector<Edge> removed;
  for (const auto& e : g.edges()) {
    if (!flat.graph().has_edge(e.from, e.to)) removed.push_back(e);
  }
  emit(Json{{"reduction", to_json(flat)},
            {"removed", edges_json(removed)},
            {"in_open_region", in_open_region(g)},
            {"canonical_form", canonical_form(flat)},
            {"modification_cone", Json{{"apex", to_json(cone.apex)}, {"rays", edges_json(cone.ray_edges)}}}});
}

void cmd_facets(const std::string& path) { emit(to_json(facet_description(dag_from_json(read_json_file(path))))); }

void cmd_covectors(const std::string& path) {
  auto v = matrix_from_json(read_json_file(path));
  auto poset = covector_decomposition(v);
  Json cell = nullptr;
  if (v.is_square()) {
    bool zero_diagonal = true;
    for (int i = 0; i < v.rows(); ++i) zero_diagonal = zero_diagonal && v(i, i) == TropValue::zero();
    if (zero_diagonal) cell = to_json(polytrope_cell(v));
  }
  emit(Json{{"decomposition", to_json(poset)}, {"tconv", to_json(tconv_cells(poset))}, {"polytrope_cell", cell}});
}

void cmd_subdivide(const std::string& path) {
  auto g = dag_from_json(read_json_file(path));
  auto a = fundamental_polytope(g.graph());
  auto heights = fundamental_heights(g);
  auto s = regular_subdivision(a, heights);
  auto witness = is_regular(a, s);
  emit(Json{{"subdivision", subdivision_json(a, s, &heights)},
            {"central", is_central(s, a)},
            {"triangulation", is_triangulation(s, a)},
            {"regular", witness.has_value()},
            {"is_kleene", is_kleene(to_matrix(g))},
            {"in_open_region", in_open_region(g)}});
}

void cmd_enumerate(int n, bool per_graph, bool timing, const RunConfig& config) {
  EnumerationOptions options;
  options.workers = config.workers;
  if (config.budget_seconds) {
    options.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*config.budget_seconds));
  }
  emit(to_json(count_generic_types(n, options), per_graph, timing));
}

void cmd_triangulations(const std::string& path, const RunConfig& config) {
  auto g = graph_from_json(read_json_file(path));
  Deadline deadline;
  if (config.budget_seconds) {
    deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(*config.budget_seconds));
  }
  auto found = enumerate_central_triangulations(g, deadline);
  auto a = fundamental_polytope(g);
  Json list = Json::array();
  for (const auto& t : found.regular) list.push_back(subdivision_json(a, t.cells, &t.witness));
  emit(Json{{"graph", to_json(g)},
            {"central", found.all.size()},
            {"regular", found.regular.size()},
            {"regular_orbits", found.regular_orbits},
            {"automorphism_orbits", found.automorphism_orbits},
            {"triangulations", std::move(list)}});
}

void cmd_dot(const std::string& path) { std::cout << to_dot(dag_from_json(read_json_file(path))); }

void cmd_equal(const std::string& first, const std::string& second) {
  auto a = matrix_from_json(read_json_file(first));
  auto b = matrix_from_json(read_json_file(second));
  emit(Json{{"equal", polytrope_equal(a, b)}});
}

void cmd_equivalent(const std::string& first, const std::string& second) {
  auto a = matrix_from_json(read_json_file(first));
  auto b = matrix_from_json(read_json_file(second));
  auto witness = tropically_equivalent(a, b);
  Json out{{"equivalent", witness.has_value()},
           {"chambers", Json::array({covector_decomposition(a).chambers().size(),
                                     covector_decomposition(b).chambers().size()})}};
  if (witness) {
    out["point_permutation"] = permutation_json(witness->first);
    out["coordinate_permutation"] = permutation_json(witness->second);
  }
  emit(out);
}

void cmd_sample(const std::string& path, std::size_t count, std::uint64_t seed, const std::string& noise_text,
                const std::string& output, const RunConfig& config) {
  auto g = dag_from_json(read_json_file(path));
  auto noise = parse_noise(noise_text);
  auto batch = sample(g, noise, count, seed, config.workers);
  std::ofstream out(output);
  if (!out) throw ValidationError("cannot write '" + output + "'");
  write_csv(out, batch);
  emit(Json{{"n", batch.n}, {"count", count}, {"seed", seed}, {"noise", to_string(noise)}, {"output", output}});
}

void cmd_identify(const std::string& path, const std::string& csv, std::optional<std::uint64_t> seed,
                  std::size_t count, const std::string& noise_text, const RunConfig& config) {
  auto g = dag_from_json(read_json_file(path));
  SampleBatch batch;
  Json source;
  if (!csv.empty()) {
    std::ifstream in(csv);
    if (!in) throw ValidationError("cannot open '" + csv + "'");
    batch = read_csv(in);
    if (batch.n != g.n()) throw DimensionMismatch("CSV has " + std::to_string(batch.n) + " columns, graph has " + std::to_string(g.n()) + " nodes");
    source = Json{{"csv", csv}};
  } else {
    if (!seed) throw ValidationError("identify without a CSV file samples internally and needs --seed");
    auto noise = parse_noise(noise_text);
    batch = sample(g, noise, count, *seed, config.workers);
    source = Json{{"seed", *seed}, {"noise", to_string(noise)}};
  }
  auto estimate = estimate_kleene(batch);
  auto report = to_json(identifiability_report(g, estimate));
  emit(Json{{"n", g.n()},
            {"observations", batch.rows.size()},
            {"source", source},
            {"estimate", to_json(estimate)},
            {"edges", report["edges"]}});
}

void cmd_render(const std::string& path, const std::string& output) {
  auto svg = render_arrangement_svg(matrix_from_json(read_json_file(path)));
  if (output.empty()) {
    std::cout << svg;
    return;
  }
  std::ofstream out(output);
  if (!out) throw ValidationError("cannot write '" + output + "'");
  out << svg;
}

void fail(const char* kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polytropes of weighted DAGs: Kleene stars, reductions, covectors and subdivisions"};
  app.require_subcommand(1);
  std::string config_path;
  int workers = 0;
  app.add_option("--config", config_path, "Settings file (default: $POLYDAG_CONFIG)");
  auto* workers_opt = app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  std::string in1, in2, output, noise_text = "exponential", csv;
  int n = 0;
  bool per_graph = false, timing = false;
  double budget = 0;
  std::uint64_t seed = 0;
  std::size_t count = 10000;

  auto* kleene = app.add_subcommand("kleene", "Kleene star of a matrix");
  kleene->add_option("matrix", in1)->required();
  auto* reduce = app.add_subcommand("reduce", "Weighted transitive reduction and modification cone");
  reduce->add_option("dag", in1)->required();
  auto* facets = app.add_subcommand("facets", "Minimal facet description of Q(C)");
  facets->add_option("dag", in1)->required();
  auto* covectors = app.add_subcommand("covectors", "Covector decomposition of a point configuration");
  covectors->add_option("matrix", in1)->required();
  auto* subdivide = app.add_subcommand("subdivide", "Regular subdivision of the fundamental polytope");
  subdivide->add_option("dag", in1)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Count generic types for DAGs on n nodes");
  enumerate->add_option("--n", n, "Number of nodes")->required()->check(CLI::Range(1, 5));
  enumerate->add_flag("--per-graph", per_graph, "List every isomorphism class");
  enumerate->add_flag("--timing", timing, "Report wall-clock seconds");
  auto* budget_opt = enumerate->add_option("--budget", budget, "Time budget in seconds")->check(CLI::NonNegativeNumber);
  auto* dot = app.add_subcommand("dot", "Graphviz drawing of a weighted DAG");
  dot->add_option("dag", in1)->required();
  auto* triangulations = app.add_subcommand("triangulations", "List regular central triangulations of one DAG");
  triangulations->add_option("dag", in1)->required();
  auto* tri_budget = triangulations->add_option("--budget", budget, "Time budget in seconds")->check(CLI::NonNegativeNumber);
  auto* equal = app.add_subcommand("equal", "Whether two matrices define the same polytrope");
  equal->add_option("first", in1)->required();
  equal->add_option("second", in2)->required();
  auto* equivalent = app.add_subcommand("equivalent", "Tropical equivalence of two configurations");
  equivalent->add_option("first", in1)->required();
  equivalent->add_option("second", in2)->required();
  auto* sample_cmd = app.add_subcommand("sample", "Draw observations of a max-linear network");
  sample_cmd->add_option("dag", in1)->required();
  sample_cmd->add_option("--seed", seed)->required();
  sample_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
  sample_cmd->add_option("--noise", noise_text, "exponential[:rate] | uniform:lo:hi | constant:v | gumbel[:loc[:scale]]");
  sample_cmd->add_option("--output", output, "CSV destination")->required();
  auto* identify = app.add_subcommand("identify", "Estimate the Kleene star and flag identifiable edges");
  identify->add_option("dag", in1)->required();
  identify->add_option("csv", csv, "Observations; sampled internally when omitted");
  auto* identify_seed = identify->add_option("--seed", seed);
  identify->add_option("--count", count)->check(CLI::PositiveNumber);
  identify->add_option("--noise", noise_text);
  auto* render = app.add_subcommand("render", "SVG of a 3 x 3 arrangement");
  render->add_option("matrix", in1)->required();
  render->add_option("--output", output, "SVG destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("usage", e.what());
    return kValidationExit;
  }

  try {
    RunConfig config;
    if (config_path.empty()) {
      if (const char* env = std::getenv("POLYDAG_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) config = load_config(config_path, config);
    if (workers_opt->count()) config.workers = workers;
    if (budget_opt->count() || tri_budget->count()) config.budget_seconds = budget;

    if (kleene->parsed()) cmd_kleene(in1);
    if (reduce->parsed()) cmd_reduce(in1);
    if (facets->parsed()) cmd_facets(in1);
    if (covectors->parsed()) cmd_covectors(in1);
    if (subdivide->parsed()) cmd_subdivide(in1);
    if (enumerate->parsed()) cmd_enumerate(n, per_graph, timing, config);
    if (dot->parsed()) cmd_dot(in1);
    if (triangulations->parsed()) cmd_triangulations(in1, config);
    if (equal->parsed()) cmd_equal(in1, in2);
    if (equivalent->parsed()) cmd_equivalent(in1, in2);
    if (sample_cmd->parsed()) cmd_sample(in1, count, seed, noise_text, output, config);
    if (identify->parsed()) {
      cmd_identify(in1, csv, identify_seed->count() ? std::optional<std::uint64_t>(seed) : std::nullopt, count,
                   noise_text, config);
    }
    if (render->parsed()) cmd_render(in1, output);
  } catch (const BudgetExceeded& e) {
    fail("budget_exceeded", e.what());
    return kBudgetExit;
  } catch (const NegativeCycle& e) {
    fail("negative_cycle", e.what());
    return kValidationExit;
  } catch (const std::invalid_argument& e) {
    fail("validation", e.what());
    return kValidationExit;
  } catch (const std::exception& e) {
    fail("internal", e.what());
    return 1;
  }
  return 0;
}
