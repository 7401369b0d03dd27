#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcsit/harness.hpp"

namespace dcsit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Instance {
  Topology topology;
  CsitQuality csit;
};

/// Random valid instance. Every exponent is a multiple of 2^-10 so branch
/// selection in the closed forms is exact. Either TX may be the dominant one.
Instance random_instance(Rng& rng);

/// Exponents predicted for one AP-ZF vector (towards `target_rx`).
struct ApzfExponents {
  double active_power = 0.0;   // |t[active]|^2
  double passive_power = 0.0;  // |t[passive]|^2
  double intended = 0.0;       // |h_target . t|^2
  double interference = 0.0;   // |h_other . t|^2 (an upper bound when predicted)
};

ApzfExponents predicted_apzf_exponents(const CanonicalForm& canonical, int target_rx, double tau);

/// Fitted exponents of the geometric means (exp of mean log) over `draws`
/// realizations at each P in p_grid. The same realizations are reused at
/// every P.
ApzfExponents measured_apzf_exponents(const CanonicalForm& canonical, int target_rx, double tau,
                                      std::span<const double> p_grid, std::size_t draws,
                                      std::uint64_t seed);

CheckResult check_genie_identity(std::size_t count, std::uint64_t seed);
CheckResult check_layout_sum(std::size_t count, std::uint64_t seed);
CheckResult check_exact_cancellation(std::size_t count, std::uint64_t seed);
CheckResult check_coefficient_exponents(const CanonicalForm& canonical, double tau, std::uint64_t seed);
CheckResult check_received_exponents(const CanonicalForm& canonical, double tau, std::uint64_t seed);

/// Everything above, with the exponent fits run on the configured instance.
std::vector<CheckResult> run_validation_suite(const SweepConfig& config);

}  // namespace dcsit
