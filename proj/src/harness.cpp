#include "dcsit/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "dcsit/errors.hpp"

namespace dcsit {

namespace {

double draw_sum_rate(const CanonicalForm& canonical, const SchemeLayout& layout, SchemeKind kind,
                     double p, std::uint64_t seed, std::uint64_t snr_key, std::uint64_t draw) {
  auto rng = Rng::substream(seed, {snr_key, draw});
  const auto channel = sample_channel(canonical.topology, p, rng);
  const auto estimate = sample_csit(channel, canonical.topology, canonical.csit, rng);
  const auto plan = build_plan(canonical, estimate, layout, kind, p);
  return achievable_rates(channel, plan).sum;
}

// Evaluates f(d) for d in [0, n) into a vector; each worker owns a contiguous block.
template <typename F>
std::vector<double> evaluate_draws(std::size_t n, unsigned workers, F&& f) {
  std::vector<double> out(n);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t d = 0; d < n; ++d) out[d] = f(d);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t block = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * block;
    const std::size_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&out, &f, lo, hi] {
      for (std::size_t d = lo; d < hi; ++d) out[d] = f(d);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

PointEstimate summarize(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

void SweepConfig::check() const {
  if (draws < 1) throw ConfigError("draws must be >= 1");
  if (snr_db.empty()) throw ConfigError("snr_db grid is empty");
  for (std::size_t i = 1; i < snr_db.size(); ++i)
    if (!(snr_db[i] > snr_db[i - 1])) throw ConfigError("snr_db grid must be strictly increasing");
  if (schemes.empty()) throw ConfigError("no scheme selected");
  if (!(window_lo_db < window_hi_db)) throw ConfigError("slope window must satisfy lo < hi");
  ensure_valid(topology, csit);
}

const SchemeCurve* SweepCurve::find(SchemeKind kind) const {
  for (const auto& c : curves)
    if (c.kind == kind) return &c;
  return nullptr;
}

PointEstimate simulate_point(const SweepConfig& config, SchemeKind kind, double snr_db,
                             RunOptions options) {
  config.check();
  const auto canonical = canonicalize(config.topology, config.csit);
  const auto layout = layout_for(kind, canonical);
  const double p = snr_from_db(snr_db);
  const auto snr_key = std::bit_cast<std::uint64_t>(snr_db + 0.0);  // folds -0 into +0
  auto values = evaluate_draws(config.draws, options.workers, [&](std::size_t d) {
    return draw_sum_rate(canonical, layout, kind, p, config.seed, snr_key, d);
  });
  return summarize(values);
}

SweepCurve sweep(const SweepConfig& config, RunOptions options) {
  config.check();
  SweepCurve curve;
  for (auto kind : config.schemes) {
    SchemeCurve sc;
    sc.kind = kind;
    for (double snr : config.snr_db) {
      const auto est = simulate_point(config, kind, snr, options);
      sc.points.push_back({snr, est.mean, est.std_error});
    }
    try {
      sc.slope = estimate_slope(sc.points, config.window_lo_db, config.window_hi_db);
    } catch (const InsufficientPoints&) {
      sc.slope.reset();
    }
    curve.curves.push_back(std::move(sc));
  }
  return curve;
}

double log2_snr(double snr_db) { return snr_db / 10.0 * std::log2(10.0); }

double estimate_slope(std::span<const CurvePoint> points, double lo_db, double hi_db) {
  std::vector<double> x, y;
  for (const auto& pt : points)
    if (pt.snr_db >= lo_db && pt.snr_db <= hi_db) {
      x.push_back(log2_snr(pt.snr_db));
      y.push_back(pt.mean);
    }
  if (x.size() < 2)
    throw InsufficientPoints("slope window [" + format_number(lo_db) + ", " +
                             format_number(hi_db) + "] dB holds fewer than 2 points");
  return least_squares_slope(x, y);
}

double fit_exponent(std::span<const std::pair<double, double>> samples) {
  std::vector<double> x, y;
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& [p, v] : samples) {
    if (!(p > 0.0) || !(v > 0.0))
      throw InsufficientPoints("fit_exponent needs positive P and values");
    x.push_back(std::log(p));
    y.push_back(std::log(v));
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  if (x.size() < 2 || hi < 100.0 * lo)
    throw InsufficientPoints("fit_exponent needs samples spanning at least two decades of P");
  return least_squares_slope(x, y);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const SweepCurve& curve, std::ostream& os) {
  os << "snr_db,scheme,sum_rate_mean,sum_rate_stderr\n";
  if (curve.curves.empty()) return;
  const std::size_t n = curve.curves.front().points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& c : curve.curves) {
      const auto& pt = c.points[i];
      os << format_number(pt.snr_db) << ',' << scheme_name(c.kind) << ','
         << format_number(pt.mean) << ',' << format_number(pt.std_error) << '\n';
    }
}

}  // namespace dcsit
