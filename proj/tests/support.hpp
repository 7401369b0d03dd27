#pragma once

#include <doctest.h>

#include "dcsit/checks.hpp"

namespace dcsit::test {

inline Topology topo(Matrix2 g) { return Topology{g}; }

inline CsitQuality csit(Matrix2 a0, Matrix2 a1) { return CsitQuality{{a0, a1}}; }

inline CsitQuality uniform_csit(double a0, double a1) { return csit(filled(a0), filled(a1)); }

/// gamma_ii = 1, gamma_ik = cross.
inline Topology parallel_topology(double cross) { return topo({{{1.0, cross}, {cross, 1.0}}}); }

inline doctest::Approx approx(double v, double eps = 1e-12) { return doctest::Approx(v).epsilon(eps); }

}  // namespace dcsit::test
