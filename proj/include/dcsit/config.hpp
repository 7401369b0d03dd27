#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dcsit/harness.hpp"

namespace dcsit {

/// Sweep configuration file (JSON):
///
///   {
///     "gamma":  [[1.0, 0.8], [0.8, 1.0]],          // gamma[rx][tx]
///     "alpha":  [[[0.5, 0.5], [0.5, 0.5]],         // alpha[tx][rx][link]
///                [[0.0, 0.0], [0.0, 0.0]]],
///     "schemes": ["apzf", "centralized_zf", "naive_zf", "no_csit"],
///     "snr_db": {"start": 0, "stop": 60, "step": 5},   // or an explicit list
///     "draws": 2000,
///     "seed": 1,
///     "slope_window_db": [40, 60]                   // optional, default 40..60
///   }
///
/// Every field except slope_window_db is required. Throws ConfigError.
SweepConfig parse_config(const nlohmann::json& doc);
SweepConfig parse_config_text(const std::string& text);
SweepConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const SweepConfig& config);

/// Closed-form references reported next to fitted slopes.
struct ClosedFormGdof {
  double distributed = 0.0;
  double centralized = 0.0;  // genie-aided, best estimate shared
  double no_csit = 0.0;
};
ClosedFormGdof closed_form(const SweepConfig& config);

/// {"config": ..., "slopes": {scheme: slope|null}, "gdof_closed_form": {...}}
nlohmann::json summary_json(const SweepConfig& config, const SweepCurve& curve);

}  // namespace dcsit
