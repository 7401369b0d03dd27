#include "dcsit/precoders.hpp"

#include <cmath>

namespace dcsit {

namespace {

double loading(double p, Regularization reg) {
  return reg == Regularization::InversePower ? 1.0 / p : 0.0;
}

Layer private_layer(int target_rx) { return target_rx == 0 ? Layer::Private1 : Layer::Private2; }

CVector2 scaled_to(const CVector2& w, double target_power) {
  const double n = std::sqrt(squared_norm(w));
  if (n == 0.0) return {};
  const double s = std::sqrt(target_power) / n;
  return {w[0] * s, w[1] * s};
}

}  // namespace

PrecodingVector apzf(const CMatrix2& estimate_active, int active_tx, int target_rx, double tau,
                     const Topology& topology, double p, Regularization reg) {
  const int victim = other(target_rx);
  const int active = active_tx;
  const int passive = other(active_tx);
  const auto& g = topology.gamma;

  const double x = tau - positive_part(g[victim][passive] - g[victim][active]);
  const cplx passive_coef = std::sqrt(std::pow(p, x));

  const cplx ha = estimate_active[victim][active];
  const cplx hp = estimate_active[victim][passive];
  const cplx active_coef = -std::conj(ha) * hp * passive_coef / (std::norm(ha) + loading(p, reg));

  PrecodingVector v;
  v.target_rx = target_rx;
  v.layer = private_layer(target_rx);
  v.t[active] = active_coef;
  v.t[passive] = passive_coef;
  return v;
}

PrecodingVector multicast(double p, const SchemeLayout& layout) {
  double residual = p;
  if (layout.active(Layer::Private1)) residual -= std::pow(p, layout[Layer::Private1].power);
  if (layout.active(Layer::BelowNoise)) residual -= std::pow(p, layout[Layer::BelowNoise].power);
  PrecodingVector v;
  v.layer = Layer::Common;
  if (residual > 0.0) {
    const double c = std::sqrt(residual / 2.0);
    v.t = {c, c};
  }
  return v;
}

PrecodingVector multicast_full(double p) {
  const double c = std::sqrt(p / 2.0);
  return PrecodingVector{{c, c}, 0, Layer::Common};
}

PrecodingVector matched(const CMatrix2& estimate_active, double p, const SchemeLayout& layout) {
  PrecodingVector v;
  v.target_rx = 0;
  v.layer = Layer::BelowNoise;
  if (!layout.active(Layer::BelowNoise)) return v;
  const CVector2 dir{std::conj(estimate_active[0][0]), std::conj(estimate_active[0][1])};
  v.t = scaled_to(dir, std::pow(p, layout[Layer::BelowNoise].power));
  return v;
}

CVector2 regularized_zf_direction(const CMatrix2& h, int target_rx, double p, Regularization reg) {
  // G = H H^H + eps I is Hermitian, so its inverse is [d -b; -conj(b) a] / det.
  const double eps = loading(p, reg);
  const double a = std::norm(h[0][0]) + std::norm(h[0][1]) + eps;
  const double d = std::norm(h[1][0]) + std::norm(h[1][1]) + eps;
  const cplx b = h[0][0] * std::conj(h[1][0]) + h[0][1] * std::conj(h[1][1]);
  const double det = a * d - std::norm(b);
  if (det == 0.0) return {};

  // Column target_rx of G^-1.
  const std::array<cplx, 2> ginv_col =
      target_rx == 0 ? std::array<cplx, 2>{d / det, -std::conj(b) / det}
                     : std::array<cplx, 2>{-b / det, a / det};
  CVector2 w{};
  for (int k = 0; k < 2; ++k)
    w[k] = std::conj(h[0][k]) * ginv_col[0] + std::conj(h[1][k]) * ginv_col[1];
  return w;
}

PrecodingVector centralized_zf(const CMatrix2& shared_estimate, int target_rx, double tau, double p,
                               Regularization reg) {
  PrecodingVector v;
  v.target_rx = target_rx;
  v.layer = private_layer(target_rx);
  v.t = scaled_to(regularized_zf_direction(shared_estimate, target_rx, p, reg), std::pow(p, tau));
  return v;
}

PrecodingVector naive_zf(const std::array<CMatrix2, 2>& estimates, int target_rx, double tau,
                         double p, Regularization reg) {
  PrecodingVector v;
  v.target_rx = target_rx;
  v.layer = private_layer(target_rx);
  const double power = std::pow(p, tau);
  for (int j = 0; j < 2; ++j)
    v.t[j] = scaled_to(regularized_zf_direction(estimates[j], target_rx, p, reg), power)[j];
  return v;
}

}  // namespace dcsit
