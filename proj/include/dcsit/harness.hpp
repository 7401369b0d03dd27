#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcsit/scheme.hpp"

namespace dcsit {

inline constexpr double kDefaultWindowLoDb = 40.0;
inline constexpr double kDefaultWindowHiDb = 60.0;

struct SweepConfig {
  Topology topology;
  CsitQuality csit;
  std::vector<SchemeKind> schemes;
  std::vector<double> snr_db;  // strictly increasing
  std::size_t draws = 0;       // >= 1
  std::uint64_t seed = 0;
  double window_lo_db = kDefaultWindowLoDb;
  double window_hi_db = kDefaultWindowHiDb;

  /// Throws ConfigError for grid/draw/scheme problems and ValidationError for
  /// an invalid topology or CSIT.
  void check() const;
};

struct PointEstimate {
  double mean = 0.0;       // bits per channel use
  double std_error = 0.0;  // standard error of the mean
};

struct CurvePoint {
  double snr_db = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
};

struct SchemeCurve {
  SchemeKind kind = SchemeKind::ApZfLayered;
  std::vector<CurvePoint> points;
  std::optional<double> slope;  // absent when the window holds < 2 points
};

struct SweepCurve {
  std::vector<SchemeCurve> curves;

  const SchemeCurve* find(SchemeKind kind) const;
};

/// Worker threads used for the draws of one point; results do not depend on it.
struct RunOptions {
  unsigned workers = 1;
};

/// Draw d at SNR snr_db uses the substream (seed, bits of snr_db, d). The
/// same realizations are therefore shared by every scheme and by sweep().
PointEstimate simulate_point(const SweepConfig& config, SchemeKind kind, double snr_db,
                             RunOptions options = {});

SweepCurve sweep(const SweepConfig& config, RunOptions options = {});

/// log2(P) for a value in dB.
double log2_snr(double snr_db);

/// Least-squares slope of mean sum rate against log2(P), using the points
/// with snr_db in [lo_db, hi_db]. Throws InsufficientPoints with < 2 points.
double estimate_slope(std::span<const CurvePoint> points, double lo_db, double hi_db);

/// Least-squares slope of log(value) against log(P) for (P, value) samples.
/// Needs at least two distinct P values spanning two decades and positive
/// values; throws InsufficientPoints otherwise.
double fit_exponent(std::span<const std::pair<double, double>> samples);

/// CSV with header snr_db,scheme,sum_rate_mean,sum_rate_stderr, LF endings,
/// 12 significant digits. Rows ordered by SNR, then by scheme as configured.
void write_csv(const SweepCurve& curve, std::ostream& os);

/// Formats with 12 significant digits, as used in the CSV.
std::string format_number(double v);

}  // namespace dcsit
