#include "dcsit/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcsit/errors.hpp"

namespace dcsit {

namespace {

constexpr double kPowerTolerance = 1e-9;
constexpr double kLayerHeadroom = 2.0;

void cap_layer_power(PrecodingVector& vec, double nominal) {
  const double cap = kLayerHeadroom * nominal;
  const double pw = vec.power();
  if (pw <= cap) return;
  const double s = std::sqrt(cap / pw);
  for (auto& c : vec.t) c *= s;
}

struct ReceivedPowers {
  double common = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double z1 = 0.0;
};

ReceivedPowers received(const ChannelRealization& channel, const TransmitPlan& plan, int rx) {
  ReceivedPowers r;
  for (const auto& l : plan.layers) {
    const double pw = received_power(channel, l.vec, rx);
    switch (l.layer) {
      case Layer::Common: r.common += pw; break;
      case Layer::Private1: r.s1 += pw; break;
      case Layer::Private2: r.s2 += pw; break;
      case Layer::BelowNoise: r.z1 += pw; break;
    }
  }
  return r;
}

// Scales every private layer by one common factor.
void enforce_tx_power(TransmitPlan& plan) {
  const double budget = plan.p;
  const auto totals = plan.tx_power();
  double scale2 = 1.0;
  for (int k = 0; k < 2; ++k) {
    if (totals[k] <= budget) continue;
    double common = 0.0;
    for (const auto& l : plan.layers)
      if (l.layer == Layer::Common) common += std::norm(l.vec.t[k]);
    const double priv = totals[k] - common;
    scale2 = std::min(scale2, priv > 0.0 ? std::max(budget - common, 0.0) / priv : 0.0);
  }
  if (scale2 < 1.0) {
    const double scale = std::sqrt(scale2);
    for (auto& l : plan.layers)
      if (l.layer != Layer::Common)
        for (auto& c : l.vec.t) c *= scale;
  }
  const auto after = plan.tx_power();
  for (int k = 0; k < 2; ++k)
    if (after[k] > budget * (1.0 + kPowerTolerance))
      throw PowerInfeasible("TX " + std::to_string(k) + " power " + std::to_string(after[k]) +
                            " exceeds P = " + std::to_string(budget));
}

}  // namespace

std::string_view scheme_name(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::ApZfLayered: return "apzf";
    case SchemeKind::CentralizedZf: return "centralized_zf";
    case SchemeKind::NaiveZf: return "naive_zf";
    case SchemeKind::NoCsit: return "no_csit";
  }
  return "?";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) noexcept {
  for (auto kind : kAllSchemes)
    if (scheme_name(kind) == name) return kind;
  return std::nullopt;
}

std::array<double, 2> TransmitPlan::tx_power() const {
  std::array<double, 2> out{};
  for (const auto& l : layers)
    for (int k = 0; k < 2; ++k) out[k] += std::norm(l.vec.t[k]);
  return out;
}

const PlannedLayer* TransmitPlan::find(Layer layer) const {
  for (const auto& l : layers)
    if (l.layer == layer) return &l;
  return nullptr;
}

SchemeLayout layout_for(SchemeKind kind, const CanonicalForm& canonical) {
  if (kind != SchemeKind::NaiveZf) return scheme_layout(canonical);
  CanonicalForm worst = canonical;
  worst.csit = worst_case_csit(canonical.csit);
  return scheme_layout(worst);
}

TransmitPlan build_plan(const CanonicalForm& canonical, const CsitEstimate& csit_draw,
                        const SchemeLayout& layout, SchemeKind kind, double p,
                        Regularization reg) {
  TransmitPlan plan;
  plan.kind = kind;
  plan.p = p;

  if (kind == SchemeKind::NoCsit) {
    const auto& g = canonical.topology.gamma;
    const double exponent =
        std::min(std::max(g[0][0], g[0][1]), std::max(g[1][0], g[1][1]));
    plan.layers.push_back({Layer::Common, multicast_full(p), exponent});
    return plan;
  }

  for (auto l : kAllLayers)
    if (layout.active(l) && layout[l].power > 1.0 + 1e-12)
      throw PowerInfeasible("layout asks for power exponent " + std::to_string(layout[l].power) +
                            " on layer " + std::string(layer_name(l)));

  const int active = canonical.active_tx;
  const CMatrix2& own = csit_draw.h_hat[active];

  if (layout.active(Layer::Common))
    plan.layers.push_back({Layer::Common, multicast(p, layout), layout[Layer::Common].rate});

  for (int target = 0; target < 2; ++target) {
    const Layer layer = target == 0 ? Layer::Private1 : Layer::Private2;
    if (!layout.active(layer)) continue;
    const double tau = layout[layer].power;
    PrecodingVector vec;
    switch (kind) {
      case SchemeKind::ApZfLayered:
        vec = apzf(own, active, target, tau, canonical.topology, p, reg);
        break;
      case SchemeKind::CentralizedZf:
        vec = centralized_zf(own, target, tau, p, reg);
        break;
      case SchemeKind::NaiveZf:
        vec = naive_zf(csit_draw.h_hat, target, tau, p, reg);
        break;
      case SchemeKind::NoCsit:
        break;
    }
    cap_layer_power(vec, std::pow(p, tau));
    plan.layers.push_back({layer, vec, layout[layer].rate});
  }

  if (layout.active(Layer::BelowNoise))
    plan.layers.push_back({Layer::BelowNoise, matched(own, p, layout), layout[Layer::BelowNoise].rate});

  enforce_tx_power(plan);
  return plan;
}

double received_power(const ChannelRealization& channel, const PrecodingVector& vec, int rx) {
  return std::norm(dot(channel.h[rx], vec.t));
}

RateBreakdown achievable_rates(const ChannelRealization& channel, const TransmitPlan& plan) {
  const auto a = received(channel, plan, 0);
  const auto b = received(channel, plan, 1);

  RateBreakdown r;
  if (plan.find(Layer::Common)) {
    const double at_first = std::log2(1.0 + a.common / (1.0 + a.s1 + a.s2 + a.z1));
    const double at_second = std::log2(1.0 + b.common / (1.0 + b.s1 + b.s2 + b.z1));
    r.r0 = std::min(at_first, at_second);
  }
  if (plan.find(Layer::Private1)) r.r1 = std::log2(1.0 + a.s1 / (1.0 + a.z1 + a.s2));
  if (plan.find(Layer::BelowNoise)) r.rz = std::log2(1.0 + a.z1 / (1.0 + a.s2));
  if (plan.find(Layer::Private2)) r.r2 = std::log2(1.0 + b.s2 / (1.0 + b.s1 + b.z1));
  r.sum = r.r0 + r.r1 + r.r2 + r.rz;
  return r;
}

double interference_power(const ChannelRealization& channel, const TransmitPlan& plan, int rx) {
  double total = 0.0;
  for (const auto& l : plan.layers)
    if (l.layer != Layer::Common && l.vec.target_rx != rx)
      total += received_power(channel, l.vec, rx);
  return total;
}

LayerSinr layer_sinr(const ChannelRealization& channel, const TransmitPlan& plan, int rx) {
  const auto r = received(channel, plan, rx);
  LayerSinr s;
  s.common = r.common / (1.0 + r.s1 + r.s2 + r.z1);
  s.private_symbol = rx == 0 ? r.s1 / (1.0 + r.z1 + r.s2) : r.s2 / (1.0 + r.s1 + r.z1);
  return s;
}

}  // namespace dcsit
