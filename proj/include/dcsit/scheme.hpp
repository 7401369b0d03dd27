#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dcsit/channel.hpp"
#include "dcsit/precoders.hpp"

namespace dcsit {

enum class SchemeKind { ApZfLayered, CentralizedZf, NaiveZf, NoCsit };

inline constexpr std::array<SchemeKind, 4> kAllSchemes{
    SchemeKind::ApZfLayered, SchemeKind::CentralizedZf, SchemeKind::NaiveZf, SchemeKind::NoCsit};

/// CLI / CSV name: apzf, centralized_zf, naive_zf, no_csit.
std::string_view scheme_name(SchemeKind kind) noexcept;
std::optional<SchemeKind> parse_scheme(std::string_view name) noexcept;

struct PlannedLayer {
  Layer layer;
  PrecodingVector vec;
  double rate_exponent = 0.0;
};

struct TransmitPlan {
  SchemeKind kind = SchemeKind::ApZfLayered;
  double p = 1.0;
  std::vector<PlannedLayer> layers;

  /// Sum over layers of |t[k]|^2 for each TX k.
  std::array<double, 2> tx_power() const;
  const PlannedLayer* find(Layer layer) const;
};

struct RateBreakdown {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double rz = 0.0;
  double sum = 0.0;
};

/// Layout each scheme is designed for. AP-ZF and centralized ZF use the
/// layout of the instance itself. Naive ZF is limited by the worse of the two
/// estimates, so it is laid out for the elementwise-minimum CSIT.
SchemeLayout layout_for(SchemeKind kind, const CanonicalForm& canonical);

/// Builds the superposed transmission. Everything is in canonical labels.
///
/// ApZfLayered: multicast s0, AP-ZF s1/s2 (active TX = canonical.active_tx),
/// matched z1. CentralizedZf / NaiveZf: same layers and power exponents with
/// the AP-ZF vectors replaced by regularized ZF. NoCsit: one multicast layer
/// at full power. Layers with a zero rate exponent are left out.
///
/// Each private layer is held to at most 2 P^tau in total (a no-op for the
/// ZF baselines, which are normalized to P^tau). AP-ZF coefficients are
/// random, so this scales down the rare realizations with a large active
/// coefficient. If some TX still exceeds P, every private layer is scaled by
/// one common factor until all TXs meet P. Throws PowerInfeasible
/// if the layout itself asks for power exponents above 1.
TransmitPlan build_plan(const CanonicalForm& canonical, const CsitEstimate& csit_draw,
                        const SchemeLayout& layout, SchemeKind kind, double p,
                        Regularization reg = Regularization::InversePower);

/// |h_rx . t|^2 for one layer.
double received_power(const ChannelRealization& channel, const PrecodingVector& vec, int rx);

/// Successive decoding with unit noise. s0 is decoded first at both RXs with
/// all private layers as noise (r0 = min over RXs). RX 0 then decodes s1
/// with z1 and s2 as noise, then z1 with s2 as noise. RX 1 decodes s2 with
/// s1 and z1 as noise.
RateBreakdown achievable_rates(const ChannelRealization& channel, const TransmitPlan& plan);

/// Received power at `rx` of the private layers meant for the other RX.
double interference_power(const ChannelRealization& channel, const TransmitPlan& plan, int rx);

/// SINR of s0 at `rx` and of the private symbol of `rx` after s0 removal.
struct LayerSinr {
  double common = 0.0;
  double private_symbol = 0.0;
};
LayerSinr layer_sinr(const ChannelRealization& channel, const TransmitPlan& plan, int rx);

}  // namespace dcsit
