#pragma once

#include "dcsit/gdof.hpp"
#include "dcsit/types.hpp"

namespace dcsit {

struct PrecodingVector {
  CVector2 t{};  // t[k]: coefficient applied at TX k
  int target_rx = 0;
  Layer layer = Layer::Common;

  double power() const noexcept { return squared_norm(t); }
};

/// Diagonal loading used by the inverses inside the precoders. InversePower
/// adds 1/P; None is exact inversion and only meant for cancellation checks.
enum class Regularization { InversePower, None };

/// Active-passive zero forcing towards `target_rx`, nominal power P^tau.
///
/// The passive TX (the one that is not `active_tx`) sends the real constant
/// sqrt(P^x), x = tau - (gamma[u][passive] - gamma[u][active])^+, u being the
/// interfered RX. It uses no instantaneous CSIT. The active TX cancels the
/// passive TX's contribution at RX u using only its own estimate of row u:
///
///   t[active] = -conj(h_hat[u][active]) * h_hat[u][passive] * t[passive]
///               / (|h_hat[u][active]|^2 + 1/P)
///
/// which gives |t[active]|^2 ~ P^(tau - (gamma[u][active] - gamma[u][passive])^+).
/// The coefficients are not clipped; per-TX power is enforced by the plan.
PrecodingVector apzf(const CMatrix2& estimate_active, int active_tx, int target_rx, double tau,
                     const Topology& topology, double p,
                     Regularization reg = Regularization::InversePower);

/// Uniform multicast precoder sqrt(R/2) [1, 1] where R is P minus the
/// nominal power of one AP-ZF layer and of the z1 layer (inactive layers
/// count as zero). R is clipped at zero.
PrecodingVector multicast(double p, const SchemeLayout& layout);

/// Multicast at the full power P, for the no-CSIT reference scheme.
PrecodingVector multicast_full(double p);

/// z1 precoder: conj of the active TX's estimate of RX 0's channel, scaled to
/// P^(z1 power exponent). Zero vector when z1 carries no rate.
PrecodingVector matched(const CMatrix2& estimate_active, double p, const SchemeLayout& layout);

/// Column `target_rx` of Hhat^H (Hhat Hhat^H + reg I)^-1, unnormalized.
CVector2 regularized_zf_direction(const CMatrix2& estimate, int target_rx, double p,
                                  Regularization reg = Regularization::InversePower);

/// Regularized ZF computed from one estimate shared by both TXs, scaled to
/// norm sqrt(P^tau).
PrecodingVector centralized_zf(const CMatrix2& shared_estimate, int target_rx, double tau, double p,
                               Regularization reg = Regularization::InversePower);

/// Naive distributed ZF: TX j computes the full normalized ZF vector from its
/// own estimate, as if the other TX held the same one, and applies entry j.
PrecodingVector naive_zf(const std::array<CMatrix2, 2>& estimates, int target_rx, double tau,
                         double p, Regularization reg = Regularization::InversePower);

}  // namespace dcsit
