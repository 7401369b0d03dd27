#include "dcsit/topology.hpp"

#include <algorithm>
#include <sstream>

#include "dcsit/errors.hpp"

namespace dcsit {

namespace {

bool dominates(const Matrix2& a, const Matrix2& b) {
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      if (a[i][k] < b[i][k]) return false;
  return true;
}

Matrix2 permute(const Matrix2& m, bool rx_swap, bool tx_swap) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      out[i][k] = m[rx_swap ? other(i) : i][tx_swap ? other(k) : k];
  return out;
}

}  // namespace

std::string Violation::message() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::GammaOutOfRange:
      os << "GammaOutOfRange: gamma[" << rx << "][" << link << "] = " << value
         << " is outside [0, 1]";
      break;
    case ViolationKind::AlphaOutOfRange:
      os << "AlphaOutOfRange: alpha[" << tx << "][" << rx << "][" << link << "] = " << value
         << " is outside [0, gamma[" << rx << "][" << link << "]]";
      break;
    case ViolationKind::NoDominantTransmitter:
      os << "NoDominantTransmitter: neither TX's alpha matrix dominates the other elementwise";
      break;
  }
  return os.str();
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message();
  }
  return out;
}

ValidationReport validate(const Topology& topology, const CsitQuality& csit) {
  ValidationReport report;
  const auto& g = topology.gamma;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      if (!(g[i][k] >= 0.0 && g[i][k] <= 1.0))
        report.violations.push_back({ViolationKind::GammaOutOfRange, -1, i, k, g[i][k]});

  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        const double a = csit.alpha[j][i][k];
        // Compared against the raw gamma.
        if (!(a >= 0.0 && a <= g[i][k]))
          report.violations.push_back({ViolationKind::AlphaOutOfRange, j, i, k, a});
      }

  if (dominates(csit.alpha[0], csit.alpha[1]))
    report.dominant_tx = 0;
  else if (dominates(csit.alpha[1], csit.alpha[0]))
    report.dominant_tx = 1;
  else
    report.violations.push_back({ViolationKind::NoDominantTransmitter});
  return report;
}

int ensure_valid(const Topology& topology, const CsitQuality& csit) {
  auto report = validate(topology, csit);
  if (!report.ok()) throw ValidationError(report.summary());
  return *report.dominant_tx;
}

EffectiveExponents effective_alphas(const Topology& topology, const CsitQuality& csit) {
  (void)topology;
  EffectiveExponents e;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      e.alpha_rx[j][i] = std::min(csit.alpha[j][i][0], csit.alpha[j][i][1]);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k)
      e.alpha_max[i][k] = std::max(csit.alpha[0][i][k], csit.alpha[1][i][k]);
    e.alpha_prime[i] = std::min(e.alpha_max[i][0], e.alpha_max[i][1]);
  }
  return e;
}

Topology relabel(const Topology& topology, bool rx_swap, bool tx_swap) {
  return Topology{permute(topology.gamma, rx_swap, tx_swap)};
}

CsitQuality relabel(const CsitQuality& csit, bool rx_swap, bool tx_swap) {
  CsitQuality out;
  for (int j = 0; j < 2; ++j)
    out.alpha[j] = permute(csit.alpha[tx_swap ? other(j) : j], rx_swap, tx_swap);
  return out;
}

CanonicalForm canonicalize(const Topology& topology, const CsitQuality& csit) {
  ensure_valid(topology, csit);

  const auto& g = topology.gamma;
  const double strongest = std::max({g[0][0], g[0][1], g[1][0], g[1][1]});

  static constexpr std::array<std::array<bool, 2>, 4> kOrder{{
      {false, false}, {true, false}, {false, true}, {true, true}}};
  CanonicalForm form;
  for (const auto& [rx_swap, tx_swap] : kOrder) {
    if (g[rx_swap ? 1 : 0][tx_swap ? 1 : 0] == strongest) {
      form.rx_swap = rx_swap;
      form.tx_swap = tx_swap;
      break;
    }
  }
  form.topology = relabel(topology, form.rx_swap, form.tx_swap);
  form.csit = relabel(csit, form.rx_swap, form.tx_swap);
  form.active_tx = *validate(form.topology, form.csit).dominant_tx;
  return form;
}

CsitQuality worst_case_csit(const CsitQuality& csit) {
  CsitQuality out;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const double a = std::min(csit.alpha[0][i][k], csit.alpha[1][i][k]);
      out.alpha[0][i][k] = a;
      out.alpha[1][i][k] = a;
    }
  return out;
}

}  // namespace dcsit
