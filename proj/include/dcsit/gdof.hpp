#pragma once

#include <array>
#include <string_view>

#include "dcsit/topology.hpp"

namespace dcsit {

enum class Branch { D1, D2 };

/// Sum GDoF as min(D1, D2) together with both branch values.
struct GdofValue {
  double value = 0.0;
  Branch branch = Branch::D1;  // D1 on ties
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Sum GDoF of the two-user MISO BC when both TXs share a single estimate of
/// accuracy alpha[i][k]. Throws ValidationError if some alpha is outside
/// [0, gamma[i][k]] or some gamma outside [0, 1].
GdofValue centralized_gdof(const Topology& topology, const Matrix2& alpha);

/// Sum GDoF with distributed CSIT. Evaluated per receiver from the effective
/// exponents; equal to centralized_gdof(topology, alpha_max).
GdofValue distributed_gdof(const Topology& topology, const CsitQuality& csit);

/// Genie-aided centralized bound: centralized_gdof on the elementwise best
/// CSIT across TXs.
GdofValue genie_outer_bound(const Topology& topology, const CsitQuality& csit);

enum class LayoutCase { Case1, Case2 };

enum class Layer { Common, Private1, Private2, BelowNoise };

inline constexpr std::array<Layer, 4> kAllLayers{Layer::Common, Layer::Private1, Layer::Private2,
                                                 Layer::BelowNoise};

std::string_view layer_name(Layer layer) noexcept;

struct LayerExponents {
  double power = 0.0;  // transmit power ~ P^power
  double rate = 0.0;   // rate = rate * log2(P) bits
};

/// Power and rate exponents of each superposed layer of the AP-ZF scheme.
///   Common     s0  multicast symbol decoded by both RXs
///   Private1   s1  AP-ZF symbol for RX 0
///   Private2   s2  AP-ZF symbol for RX 1
///   BelowNoise z1  symbol for RX 0 sent under RX 1's noise floor
struct SchemeLayout {
  LayoutCase case_id = LayoutCase::Case1;
  bool parallel = false;  // symmetric topology with the three-layer layout
  double rho = 0.0;
  std::array<LayerExponents, 4> layers{};

  const LayerExponents& operator[](Layer l) const { return layers[static_cast<int>(l)]; }
  LayerExponents& operator[](Layer l) { return layers[static_cast<int>(l)]; }

  /// A layer with zero rate exponent is not transmitted.
  bool active(Layer l) const { return (*this)[l].rate > 0.0; }
  double total_rate() const;
};

/// Layout for a canonical instance (gamma[0][0] maximal). Case1 when
/// gamma[1][0] <= gamma[1][1], Case2 otherwise. The parallel topology
/// (unit direct links, equal cross links, equal per-RX alpha') gets the
/// three-layer layout without z1.
SchemeLayout scheme_layout(const CanonicalForm& canonical);

}  // namespace dcsit
