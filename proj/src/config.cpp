#include "dcsit/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dcsit/errors.hpp"
#include "dcsit/gdof.hpp"

namespace dcsit {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ConfigError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + " must be a number");
  return v.get<double>();
}

Matrix2 matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(where + " must be a 2x2 array");
  Matrix2 m{};
  for (int i = 0; i < 2; ++i) {
    const auto& row = v[i];
    if (!row.is_array() || row.size() != 2) throw ConfigError(where + " must be a 2x2 array");
    for (int k = 0; k < 2; ++k)
      m[i][k] = number(row[k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

std::vector<double> snr_grid(const json& v) {
  std::vector<double> grid;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      grid.push_back(number(v[i], "snr_db[" + std::to_string(i) + "]"));
    return grid;
  }
  if (v.is_object()) {
    const double start = number(require(v, "start"), "snr_db.start");
    const double stop = number(require(v, "stop"), "snr_db.stop");
    const double step = number(require(v, "step"), "snr_db.step");
    if (!(step > 0.0)) throw ConfigError("snr_db.step must be positive");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) grid.push_back(start + static_cast<double>(i) * step);
    return grid;
  }
  throw ConfigError("snr_db must be a list or {start, stop, step}");
}

json matrix_json(const Matrix2& m) { return json::array({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}); }

}  // namespace

SweepConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  SweepConfig cfg;
  cfg.topology.gamma = matrix(require(doc, "gamma"), "gamma");

  const auto& alpha = require(doc, "alpha");
  if (!alpha.is_array() || alpha.size() != 2)
    throw ConfigError("alpha must hold one 2x2 matrix per TX");
  for (int j = 0; j < 2; ++j)
    cfg.csit.alpha[j] = matrix(alpha[j], "alpha[" + std::to_string(j) + "]");

  const auto& schemes = require(doc, "schemes");
  if (!schemes.is_array()) throw ConfigError("schemes must be a list of names");
  for (const auto& s : schemes) {
    if (!s.is_string()) throw ConfigError("schemes must be a list of names");
    const auto kind = parse_scheme(s.get<std::string>());
    if (!kind) throw ConfigError("unknown scheme '" + s.get<std::string>() + "'");
    cfg.schemes.push_back(*kind);
  }

  cfg.snr_db = snr_grid(require(doc, "snr_db"));

  const auto& draws = require(doc, "draws");
  if (!draws.is_number_integer() || draws.get<long long>() < 1)
    throw ConfigError("draws must be a positive integer");
  cfg.draws = draws.get<std::size_t>();

  const auto& seed = require(doc, "seed");
  if (!seed.is_number_unsigned())
    throw ConfigError("seed must be a non-negative integer");
  cfg.seed = seed.get<std::uint64_t>();

  if (doc.contains("slope_window_db")) {
    const auto& w = doc.at("slope_window_db");
    if (!w.is_array() || w.size() != 2) throw ConfigError("slope_window_db must be [lo, hi]");
    cfg.window_lo_db = number(w[0], "slope_window_db[0]");
    cfg.window_hi_db = number(w[1], "slope_window_db[1]");
  }
  return cfg;
}

SweepConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(doc);
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

json to_json(const SweepConfig& config) {
  json schemes = json::array();
  for (auto k : config.schemes) schemes.push_back(std::string(scheme_name(k)));
  return json{
      {"gamma", matrix_json(config.topology.gamma)},
      {"alpha", json::array({matrix_json(config.csit.alpha[0]), matrix_json(config.csit.alpha[1])})},
      {"schemes", schemes},
      {"snr_db", config.snr_db},
      {"draws", config.draws},
      {"seed", config.seed},
      {"slope_window_db", json::array({config.window_lo_db, config.window_hi_db})},
  };
}

ClosedFormGdof closed_form(const SweepConfig& config) {
  ClosedFormGdof out;
  out.distributed = distributed_gdof(config.topology, config.csit).value;
  out.centralized = genie_outer_bound(config.topology, config.csit).value;
  out.no_csit = centralized_gdof(config.topology, Matrix2{}).value;
  return out;
}

json summary_json(const SweepConfig& config, const SweepCurve& curve) {
  json slopes = json::object();
  for (const auto& c : curve.curves) {
    const std::string name(scheme_name(c.kind));
    slopes[name] = c.slope ? json(*c.slope) : json(nullptr);
  }
  const auto cf = closed_form(config);
  return json{
      {"config", to_json(config)},
      {"slopes", slopes},
      {"gdof_closed_form",
       {{"distributed", cf.distributed}, {"centralized", cf.centralized}, {"no_csit", cf.no_csit}}},
  };
}

}  // namespace dcsit
