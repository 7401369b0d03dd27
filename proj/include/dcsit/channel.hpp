#pragma once

#include <cmath>

#include "dcsit/rng.hpp"
#include "dcsit/topology.hpp"

namespace dcsit {

struct ChannelRealization {
  CMatrix2 h{};
  double p = 1.0;  // nominal SNR, linear
};

/// Local channel estimates, one full 2x2 matrix per TX.
struct CsitEstimate {
  std::array<CMatrix2, 2> h_hat{};
  double p = 1.0;
};

/// h[i][k] = sqrt(P^(gamma[i][k]-1)) * g, g ~ CN(0, 1) i.i.d.
/// Draws are consumed in row-major order.
ChannelRealization sample_channel(const Topology& topology, double p, Rng& rng);

/// h_hat[j][i][k] = h[i][k] + sqrt(P^-alpha[j][i][k]) * sqrt(P^(gamma[i][k]-1)) * delta,
/// delta ~ CN(0, 1) independent across TXs and entries.
CsitEstimate sample_csit(const ChannelRealization& channel, const Topology& topology,
                         const CsitQuality& csit, Rng& rng);

/// Estimate equal to the true channel at both TXs.
CsitEstimate perfect_csit(const ChannelRealization& channel);

inline double snr_from_db(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

}  // namespace dcsit
