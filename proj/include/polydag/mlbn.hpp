#pragma once

// Max-linear Bayesian networks in min-plus coordinates: sampling, the
// sup-estimator of the Kleene star, and per-edge identifiability.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polydag/dag.hpp"
#include "polydag/trop.hpp"

namespace polydag {

/// Distribution of the innovations z_i in min-plus coordinates.
struct NoiseSpec {
  enum class Kind { Exponential, Uniform, Constant, Gumbel };
  Kind kind = Kind::Exponential;
  /// Rate, lower end, value or location.
  double a = 1.0;
  /// Upper end or scale; unused otherwise.
  double b = 0.0;

  static NoiseSpec exponential(double rate = 1.0) { return {Kind::Exponential, rate, 0.0}; }
  static NoiseSpec uniform(double low, double high) { return {Kind::Uniform, low, high}; }
  static NoiseSpec constant(double value) { return {Kind::Constant, value, 0.0}; }
  /// loc + scale * log(-log U): the min-plus image of a Frechet variable.
  static NoiseSpec gumbel(double location = 0.0, double scale = 1.0) { return {Kind::Gumbel, location, scale}; }
};

/// "exponential[:rate]", "uniform:lo:hi", "constant:v" or "gumbel[:loc[:scale]]".
NoiseSpec parse_noise(std::string_view text);
std::string to_string(const NoiseSpec& noise);

struct SampleBatch {
  int n = 0;
  std::vector<std::vector<Rational>> rows;
};

/// Rows C* (.) z with z drawn i.i.d. per node. Draws come from mt19937_64 in
/// chunks of 1024 rows with per-chunk seeds derived from `seed`, so the batch
/// does not depend on `workers` and shorter batches are prefixes of longer ones.
SampleBatch sample(const WeightedDag& g, const NoiseSpec& noise, std::size_t count, std::uint64_t seed,
                   int workers = 1);

/// c_ij = max over rows of x_i - x_j, zero diagonal.
TropMatrix estimate_kleene(const SampleBatch& batch);

struct EdgeReport {
  Edge edge;
  Rational weight;
  /// Shortest path weight, the quantity the estimator targets.
  Rational star;
  Rational estimate;
  /// The edge survives the weighted transitive reduction.
  bool identifiable = false;
};

std::vector<EdgeReport> identifiability_report(const WeightedDag& g, const TropMatrix& estimate);

/// Header x1,...,xn then one row per observation as shortest round-trip decimals.
void write_csv(std::ostream& out, const SampleBatch& batch);
SampleBatch read_csv(std::istream& in);

}  // namespace polydag
