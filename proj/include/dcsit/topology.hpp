#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcsit/types.hpp"

namespace dcsit {

/// Channel-strength exponents: gamma[i][k] for the link TX k -> RX i. The
/// average channel power of that link scales as P^(gamma - 1).
struct Topology {
  Matrix2 gamma{};
};

/// Per-TX CSIT accuracy exponents: alpha[j][i][k] is how well TX j knows
/// link (i, k). The estimation error power relative to the channel power
/// scales as P^(-alpha).
struct CsitQuality {
  std::array<Matrix2, 2> alpha{};
};

enum class ViolationKind { GammaOutOfRange, AlphaOutOfRange, NoDominantTransmitter };

struct Violation {
  ViolationKind kind;
  int tx = -1;  // -1 when not applicable
  int rx = -1;
  int link = -1;
  double value = 0.0;

  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// TX whose alpha matrix elementwise dominates the other one (TX 0 on ties).
  std::optional<int> dominant_tx;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Topology& topology, const CsitQuality& csit);

/// Throws ValidationError carrying the report summary when validate() fails.
/// Returns the dominant TX otherwise.
int ensure_valid(const Topology& topology, const CsitQuality& csit);

/// Reductions of the per-TX exponents that the GDoF formulas depend on.
struct EffectiveExponents {
  Matrix2 alpha_rx{};                   // [j][i] = min_k alpha[j][i][k]
  Matrix2 alpha_max{};                  // [i][k] = max_j alpha[j][i][k]
  std::array<double, 2> alpha_prime{};  // [i]   = min_k alpha_max[i][k]
};

EffectiveExponents effective_alphas(const Topology& topology, const CsitQuality& csit);

/// Relabeled instance with gamma[0][0] maximal.
struct CanonicalForm {
  Topology topology;
  CsitQuality csit;
  bool rx_swap = false;
  bool tx_swap = false;
  int active_tx = 0;  // dominant (most informed) TX in the canonical labels
};

/// Tries identity, RX swap, TX swap, both swaps (in that order) and keeps the
/// first relabeling that puts a maximal gamma entry at (0, 0).
CanonicalForm canonicalize(const Topology& topology, const CsitQuality& csit);

/// Applies a relabeling without any validation. Exposed for symmetry tests.
Topology relabel(const Topology& topology, bool rx_swap, bool tx_swap);
CsitQuality relabel(const CsitQuality& csit, bool rx_swap, bool tx_swap);

/// Elementwise min over TXs, i.e. the CSIT both TXs can count on.
CsitQuality worst_case_csit(const CsitQuality& csit);

}  // namespace dcsit
