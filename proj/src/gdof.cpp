#include "dcsit/gdof.hpp"

#include <algorithm>

#include "dcsit/errors.hpp"

namespace dcsit {

namespace {

GdofValue make_value(double d1, double d2) {
  GdofValue v;
  v.d1 = d1;
  v.d2 = d2;
  v.branch = d1 <= d2 ? Branch::D1 : Branch::D2;
  v.value = v.branch == Branch::D1 ? d1 : d2;
  return v;
}

void check_exponents(const Topology& topology, const Matrix2& alpha) {
  CsitQuality shared;
  shared.alpha = {alpha, alpha};
  auto report = validate(topology, shared);
  if (!report.ok()) throw ValidationError(report.summary());
}

}  // namespace

std::string_view layer_name(Layer layer) noexcept {
  switch (layer) {
    case Layer::Common: return "s0";
    case Layer::Private1: return "s1";
    case Layer::Private2: return "s2";
    case Layer::BelowNoise: return "z1";
  }
  return "?";
}

// Written out term by term. distributed_gdof computes the same quantity with
// a per-receiver loop.
GdofValue centralized_gdof(const Topology& topology, const Matrix2& alpha) {
  check_exponents(topology, alpha);
  const auto& g = topology.gamma;
  const double a1 = std::min(alpha[0][0], alpha[0][1]);
  const double a2 = std::min(alpha[1][0], alpha[1][1]);

  const double d1 = std::max(g[0][1], g[0][0]) +
                    std::max(positive_part(g[1][0] - g[0][0] + a1),
                             positive_part(g[1][1] - g[0][1] + a1));
  const double d2 = std::max(g[1][1], g[1][0]) +
                    std::max(positive_part(g[0][0] - g[1][0] + a2),
                             positive_part(g[0][1] - g[1][1] + a2));
  return make_value(d1, d2);
}

GdofValue distributed_gdof(const Topology& topology, const CsitQuality& csit) {
  ensure_valid(topology, csit);
  const auto eff = effective_alphas(topology, csit);
  const auto& g = topology.gamma;

  std::array<double, 2> d{};
  for (int rx = 0; rx < 2; ++rx) {
    const int ob = other(rx);
    double gain = 0.0;
    for (int tx = 0; tx < 2; ++tx)
      gain = std::max(gain, positive_part(g[ob][tx] - g[rx][tx] + eff.alpha_prime[rx]));
    d[rx] = std::max(g[rx][0], g[rx][1]) + gain;
  }
  return make_value(d[0], d[1]);
}

GdofValue genie_outer_bound(const Topology& topology, const CsitQuality& csit) {
  ensure_valid(topology, csit);
  Matrix2 best{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) best[i][k] = std::max(csit.alpha[0][i][k], csit.alpha[1][i][k]);
  return centralized_gdof(topology, best);
}

double SchemeLayout::total_rate() const {
  double sum = 0.0;
  for (const auto& l : layers) sum += l.rate;
  return sum;
}

SchemeLayout scheme_layout(const CanonicalForm& canonical) {
  const auto& g = canonical.topology.gamma;
  const auto ap = effective_alphas(canonical.topology, canonical.csit).alpha_prime;

  SchemeLayout layout;
  layout[Layer::Common].power = 1.0;

  const bool parallel =
      g[0][0] == 1.0 && g[1][1] == 1.0 && g[0][1] == g[1][0] && ap[0] == ap[1];
  if (parallel) {
    const double cross = g[0][1];
    const double tau = 1.0 + ap[0] - cross;
    layout.parallel = true;
    layout.case_id = LayoutCase::Case1;
    layout.rho = positive_part(tau);
    layout[Layer::Common].rate = positive_part(cross - ap[0]);
    layout[Layer::Private1] = {tau, layout.rho};
    layout[Layer::Private2] = {tau, layout.rho};
    layout[Layer::BelowNoise] = {1.0 - g[1][1], 0.0};
    return layout;
  }

  if (g[1][0] <= g[1][1]) {
    layout.case_id = LayoutCase::Case1;
    layout.rho = positive_part(std::min(positive_part(g[1][1] - g[0][1] + ap[0]),
                                        g[1][1] - g[1][0] + ap[1]));
    const double tau = layout.rho + 1.0 - g[1][1];
    layout[Layer::Common].rate = positive_part(g[1][1] - layout.rho);
    layout[Layer::Private1] = {tau, layout.rho};
    layout[Layer::Private2] = {tau, layout.rho};
    layout[Layer::BelowNoise] = {1.0 - g[1][1], positive_part(g[0][0] - g[1][1])};
  } else {
    layout.case_id = LayoutCase::Case2;
    const double first = std::max(positive_part(g[1][1] - g[0][1] + ap[0]),
                                  positive_part(g[1][0] - g[0][0] + ap[0]));
    const double second = positive_part(g[1][0] - g[0][0] + g[0][1] - g[1][1]) + ap[1];
    layout.rho = positive_part(std::min(first, second));
    const double tau =
        layout.rho + 1.0 - g[1][0] + std::min(g[0][0] - g[0][1], g[1][0] - g[1][1]);
    layout[Layer::Common].rate = positive_part(g[1][0] - layout.rho);
    layout[Layer::Private1] = {tau, layout.rho};
    layout[Layer::Private2] = {tau, layout.rho};
    layout[Layer::BelowNoise] = {1.0 - g[1][0], positive_part(g[0][0] - g[1][0])};
  }
  return layout;
}

}  // namespace dcsit
