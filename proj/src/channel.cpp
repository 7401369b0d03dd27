#include "dcsit/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace dcsit {

ChannelRealization sample_channel(const Topology& topology, double p, Rng& rng) {
  if (!(p > 0.0)) throw std::invalid_argument("sample_channel: SNR must be positive");
  ChannelRealization ch;
  ch.p = p;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      ch.h[i][k] = std::sqrt(std::pow(p, topology.gamma[i][k] - 1.0)) * rng.complex_normal();
  return ch;
}

CsitEstimate sample_csit(const ChannelRealization& channel, const Topology& topology,
                         const CsitQuality& csit, Rng& rng) {
  const double p = channel.p;
  CsitEstimate est;
  est.p = p;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        const double scale =
            std::sqrt(std::pow(p, -csit.alpha[j][i][k]) * std::pow(p, topology.gamma[i][k] - 1.0));
        est.h_hat[j][i][k] = channel.h[i][k] + scale * rng.complex_normal();
      }
  return est;
}

CsitEstimate perfect_csit(const ChannelRealization& channel) {
  return CsitEstimate{{channel.h, channel.h}, channel.p};
}

}  // namespace dcsit
