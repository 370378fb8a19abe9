#include "polydag/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "polydag/errors.hpp"

namespace polydag {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

template <typename T>
T number(const std::string& key, const std::string& text, int line) {
  T v{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ValidationError("config line " + std::to_string(line) + ": bad value '" + text + "' for " + key);
  }
  return v;
}

}  // namespace

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto text = trim(raw);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ValidationError("config line " + std::to_string(line) + ": expected key = value");
    auto key = trim(text.substr(0, eq));
    auto value = unquote(trim(text.substr(eq + 1)));
    if (key == "workers") {
      base.workers = number<int>(key, value, line);
      if (base.workers < 1) throw ValidationError("config: workers must be at least 1");
    } else if (key == "budget_seconds") {
      double b = number<double>(key, value, line);
      if (!std::isfinite(b) || b < 0) throw ValidationError("config: budget_seconds must be a nonnegative number");
      base.budget_seconds = b;
    } else {
      throw ValidationError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  return parse_config(in, base);
}

}  // namespace polydag
