#include "morsewp_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "morsewp/error.hpp"

namespace morsewp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size() || !std::isfinite(value)) {
    throw ConfigError(key + ": '" + text + "' is not a finite number");
  }
  return value;
}

long long parse_integer(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long value = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size()) {
    throw ConfigError(key + ": '" + text + "' is not an integer");
  }
  return value;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const long long v = parse_integer(key, text);
  if (v < 0) throw ConfigError(key + ": must not be negative");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError(key + ": '" + text + "' is not a boolean");
}

}  // namespace

double TimeSpec::resolve(const Timescales& ts) const {
  return fractional ? ts.t_revival * static_cast<double>(r) / static_cast<double>(q) : value;
}

std::string TimeSpec::tag() const {
  if (fractional) return std::to_string(r) + "-" + std::to_string(q);
  std::string t = text;
  for (char& c : t) {
    if (c == '/') c = '-';
  }
  return t;
}

TimeSpec parse_time(const std::string& raw) {
  const std::string text = trim(raw);
  TimeSpec spec;
  spec.text = text;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long long r = parse_integer("time", text.substr(0, slash));
    const long long q = parse_integer("time", text.substr(slash + 1));
    if (q < 1) throw ConfigError("time: denominator of '" + text + "' must be positive");
    if (r < 0) throw ConfigError("time: '" + text + "' is negative");
    if (std::gcd(r, q) != 1) throw ConfigError("time: fraction '" + text + "' is not in lowest terms");
    if (r > 1000000 || q > 1000000) throw ConfigError("time: fraction '" + text + "' is too large");
    spec.fractional = true;
    spec.r = static_cast<int>(r);
    spec.q = static_cast<int>(q);
    return spec;
  }
  spec.value = parse_real("time", text);
  if (spec.value < 0.0) throw ConfigError("time: '" + text + "' is negative");
  return spec;
}

void RunConfig::validate() const {
  try {
    molecule.validate();
  } catch (const morsewp::Error& e) {
    throw ConfigError(std::string("molecule: ") + e.what());
  }
  if (molecule.hbar != 1.0) throw ConfigError("molecule: hbar is fixed to 1 (atomic units)");
  for (double a : alphas) {
    if (!std::isfinite(a)) throw ConfigError("alpha: values must be finite");
  }
  if (!(x_min < x_max)) throw ConfigError("x_min must be smaller than x_max");
  if (grid_points < 5) throw ConfigError("grid_points must be at least 5");
  if (!(p_max > 0.0)) throw ConfigError("p_max must be positive");
  if (p_points < 2) throw ConfigError("p_points must be at least 2");
  if (precision < 1 || precision > 17) throw ConfigError("precision must be within 1..17");
  if (matrix_stride < 1) throw ConfigError("matrix_stride must be at least 1");
  for (const auto& t : times) {
    if (!t.fractional && t.value < 0.0) throw ConfigError("time: negative value");
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "D",       "beta",     "mu",       "r0",        "alpha",         "time",
      "x_min",   "x_max",    "grid_points", "p_max",  "p_points",      "out",
      "precision", "matrix_stride", "eigenfunctions"};
  return keys;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "D") {
    config.molecule.D = parse_real(key, value);
  } else if (key == "beta") {
    config.molecule.beta = parse_real(key, value);
  } else if (key == "mu") {
    config.molecule.mu = parse_real(key, value);
  } else if (key == "r0") {
    config.molecule.r0 = parse_real(key, value);
  } else if (key == "alpha") {
    config.alphas.clear();
    for (const auto& item : split_list(value)) config.alphas.push_back(parse_real(key, item));
  } else if (key == "time") {
    config.times.clear();
    for (const auto& item : split_list(value)) config.times.push_back(parse_time(item));
  } else if (key == "x_min") {
    config.x_min = parse_real(key, value);
  } else if (key == "x_max") {
    config.x_max = parse_real(key, value);
  } else if (key == "grid_points") {
    config.grid_points = parse_count(key, value);
  } else if (key == "p_max") {
    config.p_max = parse_real(key, value);
  } else if (key == "p_points") {
    config.p_points = parse_count(key, value);
  } else if (key == "out") {
    const std::string path = trim(value);
    if (path.empty()) throw ConfigError("out: empty path");
    config.out_dir = path;
  } else if (key == "precision") {
    config.precision = static_cast<int>(parse_integer(key, value));
  } else if (key == "matrix_stride") {
    config.matrix_stride = parse_count(key, value);
  } else if (key == "eigenfunctions") {
    config.eigenfunctions = parse_bool(key, value);
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void load_config_file(const std::filesystem::path& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    try {
      apply_setting(config, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("error while reading config file " + path.string());
}

}  // namespace morsewp::cli
