#include "polydag/mlbn.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "polydag/errors.hpp"

namespace polydag {

namespace {

constexpr std::size_t kChunk = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform on the open interval (0, 1) from the top 53 bits.
double open_uniform(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53; }

double draw(const NoiseSpec& noise, std::mt19937_64& rng) {
  switch (noise.kind) {
    case NoiseSpec::Kind::Exponential:
      return -std::log1p(-open_uniform(rng)) / noise.a;
    case NoiseSpec::Kind::Uniform:
      return noise.a + (noise.b - noise.a) * open_uniform(rng);
    case NoiseSpec::Kind::Constant:
      return noise.a;
    case NoiseSpec::Kind::Gumbel:
      return noise.a + noise.b * std::log(-std::log(open_uniform(rng)));
  }
  return 0.0;
}

void validate_noise(const NoiseSpec& noise) {
  if (!std::isfinite(noise.a) || !std::isfinite(noise.b)) throw ValidationError("noise parameters must be finite");
  if (noise.kind == NoiseSpec::Kind::Exponential && noise.a <= 0) {
    throw ValidationError("exponential noise needs a positive rate");
  }
  if (noise.kind == NoiseSpec::Kind::Uniform && noise.a > noise.b) {
    throw ValidationError("uniform noise needs low <= high");
  }
  if (noise.kind == NoiseSpec::Kind::Gumbel && noise.b <= 0) throw ValidationError("gumbel noise needs a positive scale");
}

double parse_double(std::string_view text) {
  double v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw ValidationError("not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

NoiseSpec parse_noise(std::string_view text) {
  auto parts = split(text, ':');
  auto name = parts[0];
  auto arg = [&](std::size_t k, double fallback) { return k < parts.size() ? parse_double(parts[k]) : fallback; };
  NoiseSpec noise;
  if (name == "exponential" && parts.size() <= 2) {
    noise = NoiseSpec::exponential(arg(1, 1.0));
  } else if (name == "uniform" && parts.size() == 3) {
    noise = NoiseSpec::uniform(arg(1, 0), arg(2, 0));
  } else if (name == "constant" && parts.size() == 2) {
    noise = NoiseSpec::constant(arg(1, 0));
  } else if (name == "gumbel" && parts.size() <= 3) {
    noise = NoiseSpec::gumbel(arg(1, 0.0), arg(2, 1.0));
  } else {
    throw ValidationError("unknown noise specification '" + std::string(text) + "'");
  }
  validate_noise(noise);
  return noise;
}

std::string to_string(const NoiseSpec& noise) {
  switch (noise.kind) {
    case NoiseSpec::Kind::Exponential:
      return "exponential:" + shortest(noise.a);
    case NoiseSpec::Kind::Uniform:
      return "uniform:" + shortest(noise.a) + ":" + shortest(noise.b);
    case NoiseSpec::Kind::Constant:
      return "constant:" + shortest(noise.a);
    case NoiseSpec::Kind::Gumbel:
      return "gumbel:" + shortest(noise.a) + ":" + shortest(noise.b);
  }
  return "";
}

SampleBatch sample(const WeightedDag& g, const NoiseSpec& noise, std::size_t count, std::uint64_t seed, int workers) {
  validate_noise(noise);
  if (count == 0) throw ValidationError("sample needs at least one observation");
  const int n = g.n();
  const auto star = kleene_star(to_matrix(g));
  SampleBatch batch{n, std::vector<std::vector<Rational>>(count)};
  const std::size_t chunks = (count + kChunk - 1) / kChunk;

  auto fill_chunk = [&](std::size_t c) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(c)));
    std::vector<Rational> z(n);
    for (std::size_t r = c * kChunk; r < std::min(count, (c + 1) * kChunk); ++r) {
      for (int j = 0; j < n; ++j) z[j] = from_double(draw(noise, rng));
      auto& row = batch.rows[r];
      row.resize(n);
      for (int i = 0; i < n; ++i) {
        // x_i = min_j c*_ij + z_j; the diagonal is finite so the minimum exists.
        bool first = true;
        for (int j = 0; j < n; ++j) {
          if (star(i, j).is_inf()) continue;
          Rational v = star(i, j).value() + z[j];
          if (first || v < row[i]) row[i] = v;
          first = false;
        }
      }
    }
  };

  const int pool_size = std::max(1, std::min<int>(workers, static_cast<int>(chunks)));
  std::vector<std::exception_ptr> errors(pool_size);
  auto work = [&](int id) {
    try {
      for (std::size_t c = id; c < chunks; c += pool_size) fill_chunk(c);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < pool_size; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return batch;
}

TropMatrix estimate_kleene(const SampleBatch& batch) {
  if (batch.rows.empty()) throw ValidationError("estimate_kleene needs at least one observation");
  const int n = batch.n;
  std::vector<TropValue> e(static_cast<std::size_t>(n) * n, TropValue::zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational best = batch.rows.front()[i] - batch.rows.front()[j];
      for (const auto& row : batch.rows) {
        Rational d = row[i] - row[j];
        if (d > best) best = d;
      }
      e[static_cast<std::size_t>(i) * n + j] = TropValue(best);
    }
  }
  return TropMatrix(n, n, std::move(e));
}

std::vector<EdgeReport> identifiability_report(const WeightedDag& g, const TropMatrix& estimate) {
  if (estimate.rows() != g.n() || estimate.cols() != g.n()) {
    throw DimensionMismatch("identifiability_report: estimate does not match the graph");
  }
  const auto star = kleene_star(to_matrix(g));
  const auto flat = weighted_transitive_reduction(g);
  std::vector<EdgeReport> out;
  for (const auto& e : g.weighted_edges()) {
    EdgeReport r;
    r.edge = {e.from, e.to};
    r.weight = e.w;
    r.star = star(e.to, e.from).value();
    const auto& est = estimate(e.to, e.from);
    if (est.is_inf()) throw ValidationError("identifiability_report: estimate has an infinite entry on an edge");
    r.estimate = est.value();
    r.identifiable = flat.graph().has_edge(e.from, e.to);
    out.push_back(std::move(r));
  }
  return out;
}

void write_csv(std::ostream& out, const SampleBatch& batch) {
  for (int i = 0; i < batch.n; ++i) out << (i ? "," : "") << "x" << i + 1;
  out << "\n";
  for (const auto& row : batch.rows) {
    for (int i = 0; i < batch.n; ++i) out << (i ? "," : "") << shortest(to_double(row[i]));
    out << "\n";
  }
}

SampleBatch read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  SampleBatch batch;
  batch.n = static_cast<int>(split(line, ',').size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (static_cast<int>(fields.size()) != batch.n) {
      throw ValidationError("CSV line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                            " fields, expected " + std::to_string(batch.n));
    }
    std::vector<Rational> row;
    for (auto f : fields) row.push_back(from_double(parse_double(f)));
    batch.rows.push_back(std::move(row));
  }
  if (batch.rows.empty()) throw ValidationError("CSV input has no observations");
  return batch;
}

}  // namespace polydag
