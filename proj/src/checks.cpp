#include "dcsit/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dcsit {

namespace {

constexpr double kUnit = 1.0 / 1024.0;
constexpr std::array<double, 5> kProbeGrid{1e4, 1e5, 1e6, 1e7, 1e8};
constexpr std::size_t kProbeDraws = 500;

double dyadic_upto(Rng& rng, double hi) {
  const auto units = static_cast<std::uint64_t>(std::llround(hi / kUnit));
  return static_cast<double>(rng.next_u64() % (units + 1)) * kUnit;
}

std::string fmt(double v) { return format_number(v); }

}  // namespace

Instance random_instance(Rng& rng) {
  Instance inst;
  const int dominant = static_cast<int>(rng.next_u64() % 2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const double g = dyadic_upto(rng, 1.0);
      const double best = dyadic_upto(rng, g);
      inst.topology.gamma[i][k] = g;
      inst.csit.alpha[dominant][i][k] = best;
      inst.csit.alpha[other(dominant)][i][k] = dyadic_upto(rng, best);
    }
  return inst;
}

ApzfExponents predicted_apzf_exponents(const CanonicalForm& canonical, int target_rx, double tau) {
  const auto& g = canonical.topology.gamma;
  const int victim = other(target_rx);
  const int a = canonical.active_tx;
  const int q = other(a);
  const double active_drop = positive_part(g[victim][a] - g[victim][q]);
  const double passive_drop = positive_part(g[victim][q] - g[victim][a]);
  const auto& own = canonical.csit.alpha[a][victim];

  ApzfExponents e;
  e.active_power = tau - active_drop;
  e.passive_power = tau - passive_drop;
  e.intended = tau - 1.0 + std::max(g[target_rx][a] - active_drop, g[target_rx][q] - passive_drop);
  e.interference = tau - 1.0 + std::min(g[victim][0], g[victim][1]) - std::min(own[0], own[1]);
  return e;
}

ApzfExponents measured_apzf_exponents(const CanonicalForm& canonical, int target_rx, double tau,
                                      std::span<const double> p_grid, std::size_t draws,
                                      std::uint64_t seed) {
  const int a = canonical.active_tx;
  const int q = other(a);
  const int victim = other(target_rx);
  std::array<std::vector<std::pair<double, double>>, 4> series;
  for (double p : p_grid) {
    std::array<double, 4> log_sum{};
    for (std::size_t d = 0; d < draws; ++d) {
      auto rng = Rng::substream(seed, {d});
      const auto ch = sample_channel(canonical.topology, p, rng);
      const auto est = sample_csit(ch, canonical.topology, canonical.csit, rng);
      const auto v = apzf(est.h_hat[a], a, target_rx, tau, canonical.topology, p);
      log_sum[0] += std::log(std::norm(v.t[a]));
      log_sum[1] += std::log(std::norm(v.t[q]));
      log_sum[2] += std::log(received_power(ch, v, target_rx));
      log_sum[3] += std::log(received_power(ch, v, victim));
    }
    for (int s = 0; s < 4; ++s)
      series[s].emplace_back(p, std::exp(log_sum[s] / static_cast<double>(draws)));
  }
  return {fit_exponent(series[0]), fit_exponent(series[1]), fit_exponent(series[2]),
          fit_exponent(series[3])};
}

CheckResult check_genie_identity(std::size_t count, std::uint64_t seed) {
  auto rng = Rng::substream(seed, {0x7e03});
  for (std::size_t n = 0; n < count; ++n) {
    const auto inst = random_instance(rng);
    const double a = distributed_gdof(inst.topology, inst.csit).value;
    const double b = genie_outer_bound(inst.topology, inst.csit).value;
    if (a != b)
      return {"genie_identity", false,
              "instance " + std::to_string(n) + ": distributed " + fmt(a) + " vs genie " + fmt(b)};
  }
  return {"genie_identity", true, std::to_string(count) + " instances bit-exact"};
}

CheckResult check_layout_sum(std::size_t count, std::uint64_t seed) {
  auto rng = Rng::substream(seed, {0x1a70});
  double worst = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    const auto inst = random_instance(rng);
    const auto layout = scheme_layout(canonicalize(inst.topology, inst.csit));
    const double gdof = distributed_gdof(inst.topology, inst.csit).value;
    worst = std::max(worst, std::abs(layout.total_rate() - gdof));
  }
  const bool ok = worst <= 1e-12;
  return {"layout_sum_identity", ok, "max |sum of rate exponents - GDoF| = " + fmt(worst)};
}

CheckResult check_exact_cancellation(std::size_t count, std::uint64_t seed) {
  auto rng = Rng::substream(seed, {0xca9c});
  double worst = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    const auto inst = random_instance(rng);
    const double p = std::pow(10.0, rng.uniform(2.0, 8.0));
    const double tau = rng.uniform(0.0, 1.0);
    const int active = static_cast<int>(rng.next_u64() % 2);
    const auto ch = sample_channel(inst.topology, p, rng);
    for (int target = 0; target < 2; ++target) {
      const auto v = apzf(ch.h, active, target, tau, inst.topology, p, Regularization::None);
      const auto& hv = ch.h[other(target)];
      const double scale = std::sqrt(v.power() * (std::norm(hv[0]) + std::norm(hv[1])));
      worst = std::max(worst, std::abs(dot(hv, v.t)) / scale);
    }
  }
  return {"exact_cancellation", worst < 1e-10, "max relative residual = " + fmt(worst)};
}

CheckResult check_coefficient_exponents(const CanonicalForm& canonical, double tau, std::uint64_t seed) {
  std::ostringstream detail;
  bool ok = true;
  for (int target = 0; target < 2; ++target) {
    const auto want = predicted_apzf_exponents(canonical, target, tau);
    const auto got = measured_apzf_exponents(canonical, target, tau, kProbeGrid, kProbeDraws, seed);
    ok = ok && std::abs(got.active_power - want.active_power) <= 0.05 &&
         std::abs(got.passive_power - want.passive_power) <= 0.05;
    detail << "target " << target << ": active " << fmt(got.active_power) << " (want "
           << fmt(want.active_power) << "), passive " << fmt(got.passive_power) << " (want "
           << fmt(want.passive_power) << ")  ";
  }
  return {"coefficient_power_exponents", ok, detail.str()};
}

CheckResult check_received_exponents(const CanonicalForm& canonical, double tau, std::uint64_t seed) {
  std::ostringstream detail;
  bool ok = true;
  for (int target = 0; target < 2; ++target) {
    const auto want = predicted_apzf_exponents(canonical, target, tau);
    const auto got = measured_apzf_exponents(canonical, target, tau, kProbeGrid, kProbeDraws, seed);
    ok = ok && std::abs(got.intended - want.intended) <= 0.1 &&
         got.interference <= want.interference + 0.1;
    detail << "target " << target << ": intended " << fmt(got.intended) << " (want "
           << fmt(want.intended) << "), interference " << fmt(got.interference) << " (bound "
           << fmt(want.interference) << ")  ";
  }
  return {"received_power_exponents", ok, detail.str()};
}

std::vector<CheckResult> run_validation_suite(const SweepConfig& config) {
  config.check();
  std::vector<CheckResult> out;
  out.push_back(check_genie_identity(1000, config.seed));
  out.push_back(check_layout_sum(1000, config.seed));
  out.push_back(check_exact_cancellation(1000, config.seed));

  const auto canonical = canonicalize(config.topology, config.csit);
  const auto layout = scheme_layout(canonical);
  const double gdof = distributed_gdof(config.topology, config.csit).value;
  out.push_back({"config_layout_sum", std::abs(layout.total_rate() - gdof) <= 1e-12,
                 "layout " + fmt(layout.total_rate()) + " vs GDoF " + fmt(gdof)});

  const double tau = layout.active(Layer::Private1) ? layout[Layer::Private1].power : 1.0;
  out.push_back(check_coefficient_exponents(canonical, tau, config.seed));
  out.push_back(check_received_exponents(canonical, tau, config.seed));
  return out;
}

}  // namespace dcsit
