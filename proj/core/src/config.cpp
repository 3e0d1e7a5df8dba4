// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>

namespace emwt {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InvalidArgument("expected a number, got '" + text + "'");
  }
  return value;
}

std::uint64_t parse_uint(const std::string& text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InvalidArgument("expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw InvalidArgument("expected true/false, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_double(trim(std::string_view(text).substr(start, comma - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& message)
    : InvalidArgument(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                               : source + ": " + message),
      line_(line) {}

ConfigBuilder::ConfigBuilder()
    : eh_a_(cfg_.system.eh.a()),
      eh_b_(cfg_.system.eh.b()),
      eh_c_(cfg_.system.eh.c()),
      p_max_(cfg_.system.p_max) {}

void ConfigBuilder::set(const std::string& key, const std::string& value,
                        const std::string& source, std::size_t line) {
  SystemConfig& sys = cfg_.system;
  GeometryConfig& geo = cfg_.geometry;
  try {
    if (key == "seed") cfg_.seed = parse_uint(value);
    else if (key == "system.antennas") sys.antennas = parse_uint(value);
    else if (key == "system.noise_power") sys.noise_power = parse_double(value);
    else if (key == "system.phi") sys.phi = parse_double(value);
    else if (key == "system.p_cir") sys.p_cir = parse_double(value);
    else if (key == "system.weights") sys.weights = parse_list(value);
    else if (key == "ue.p_max") p_max_ = parse_list(value);
    else if (key == "eh.a") eh_a_ = parse_double(value);
    else if (key == "eh.b") eh_b_ = parse_double(value);
    else if (key == "eh.c") eh_c_ = parse_double(value);
    else if (key == "topology.height") geo.height = parse_double(value);
    else if (key == "topology.r_min") geo.r_min = parse_double(value);
    else if (key == "topology.r_max") geo.r_max = parse_double(value);
    else if (key == "topology.freeze") geo.freeze_topology = parse_bool(value);
    else if (key == "channel.kappa") geo.kappa = value == "inf" ? std::numeric_limits<double>::infinity() : parse_double(value);
    else if (key == "channel.alpha") geo.alpha = parse_double(value);
    else if (key == "channel.independent_dl") geo.independent_dl = parse_bool(value);
    else if (key == "solver.tol") sys.solver.tol = parse_double(value);
    else if (key == "solver.kkt_tol") sys.solver.kkt_tol = parse_double(value);
    else if (key == "solver.max_iter") {
      const std::uint64_t v = parse_uint(value);
      if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        throw InvalidArgument("solver.max_iter is too large");
      }
      sys.solver.max_iter = static_cast<int>(v);
    }
    else if (key == "sweep.p_cir") cfg_.sweep.p_cir_values = parse_list(value);
    else if (key == "sweep.c") cfg_.sweep.c_values = parse_list(value);
    else if (key == "sweep.trials") cfg_.sweep.trials = parse_uint(value);
    else if (key == "sweep.threads") cfg_.threads = parse_uint(value);
    else throw InvalidArgument("unknown key '" + key + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(source, line, key + ": " + e.what());
  }
}

void ConfigBuilder::parse(std::istream& in, const std::string& source) {
  std::string raw;
  std::string section;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto comment = raw.find_first_of("#;");
    const std::string text = trim(std::string_view(raw).substr(0, comment));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3) {
        throw ConfigError(source, line, "malformed section header '" + text + "'");
      }
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source, line, "expected 'key = value', got '" + text + "'");
    }
    const std::string name = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (name.empty()) throw ConfigError(source, line, "missing key before '='");
    set(section.empty() ? name : section + "." + name, value, source, line);
  }
}

void ConfigBuilder::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  parse(in, path.string());
}

void ConfigBuilder::apply_override(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("--set", 0, "expected section.key=value, got '" + std::string(assignment) + "'");
  }
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)), "--set", 0);
}

SimulationConfig ConfigBuilder::build() const {
  SimulationConfig out = cfg_;
  try {
    out.system.eh = EhParams(eh_a_, eh_b_, eh_c_);
    out.system.p_max = p_max_.size() == 1
                           ? std::vector<double>(out.system.weights.size(), p_max_.front())
                           : p_max_;
    out.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError("config", 0, e.what());
  }
  return out;
}

SimulationConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides) {
  ConfigBuilder builder;
  if (!path.empty()) builder.parse_file(path);
  for (const auto& o : overrides) builder.apply_override(o);
  return builder.build();
}

}  // namespace emwt
