#include <algorithm>

#include "support.hpp"

#include "dcsit/errors.hpp"

using namespace dcsit;
using namespace dcsit::test;

TEST_CASE("centralized GDoF closed-form values") {
  CHECK(centralized_gdof(topo(filled(1.0)), filled(1.0)).value == 2.0);
  CHECK(centralized_gdof(topo({{{1.0, 0.0}, {0.0, 1.0}}}), filled(0.0)).value == 2.0);
  CHECK(centralized_gdof(parallel_topology(0.8), filled(0.5)).value == 1.7);
  CHECK(centralized_gdof(topo(filled(1.0)), filled(0.0)).value == 1.0);
}

TEST_CASE("centralized GDoF reports both branches") {
  const auto v = centralized_gdof(topo({{{1.0, 0.7}, {0.5, 0.9}}}), filled(0.3));
  CHECK(v.value == std::min(v.d1, v.d2));
  CHECK(v.branch == (v.d1 <= v.d2 ? Branch::D1 : Branch::D2));
  const auto tie = centralized_gdof(parallel_topology(0.8), filled(0.5));
  CHECK(tie.d1 == tie.d2);
  CHECK(tie.branch == Branch::D1);
}

TEST_CASE("centralized GDoF rejects alpha above gamma") {
  CHECK_THROWS_AS(centralized_gdof(parallel_topology(0.3), filled(0.5)), ValidationError);
}

TEST_CASE("distributed GDoF examples") {
  CHECK(distributed_gdof(parallel_topology(0.8), uniform_csit(0.5, 0.0)).value == 1.7);
  CHECK(distributed_gdof(parallel_topology(0.8), uniform_csit(0.0, 0.0)).value == 1.2);
  CHECK(distributed_gdof(topo({{{1.0, 0.7}, {0.5, 0.9}}}), uniform_csit(0.4, 0.3)).value ==
        approx(1.6));

  const auto g = topo({{{1.0, 0.7}, {0.5, 0.9}}});
  const Matrix2 a{{{0.25, 0.5}, {0.125, 0.375}}};
  CHECK(distributed_gdof(g, csit(a, a)).value == centralized_gdof(g, a).value);
}

TEST_CASE("distributed GDoF needs a dominant TX") {
  Matrix2 a0{}, a1{};
  a0[0][0] = 0.5;
  a1[1][1] = 0.5;
  CHECK_THROWS_AS(distributed_gdof(topo(filled(1.0)), csit(a0, a1)), ValidationError);
}

TEST_CASE("genie bound examples") {
  const auto g = topo({{{1.0, 0.75}, {0.5, 0.875}}});
  const Matrix2 a{{{0.25, 0.5}, {0.125, 0.375}}};
  CHECK(genie_outer_bound(g, csit(a, Matrix2{})).value == centralized_gdof(g, a).value);
  CHECK(genie_outer_bound(topo(filled(1.0)), uniform_csit(1.0, 0.0)).value == 2.0);
}

TEST_CASE("GDoF properties on random instances") {
  auto rng = Rng::substream(21, {});
  for (int n = 0; n < 1000; ++n) {
    const auto inst = random_instance(rng);
    const auto v = distributed_gdof(inst.topology, inst.csit);
    CHECK(v.value == genie_outer_bound(inst.topology, inst.csit).value);

    const auto& g = inst.topology.gamma;
    CHECK(v.value >= std::max({g[0][0], g[0][1], g[1][0], g[1][1]}));
    CHECK(v.value <= 2.0);

    const auto rx = distributed_gdof(relabel(inst.topology, true, false),
                                     relabel(inst.csit, true, false));
    CHECK(rx.value == v.value);

    // raising one alpha of the dominant TX keeps the instance valid
    const int dom = *validate(inst.topology, inst.csit).dominant_tx;
    const int i = static_cast<int>(rng.next_u64() % 2);
    const int k = static_cast<int>(rng.next_u64() % 2);
    auto better = inst.csit;
    better.alpha[dom][i][k] = g[i][k];
    CHECK(distributed_gdof(inst.topology, better).value >= v.value);

    const auto floor = distributed_gdof(inst.topology, uniform_csit(0.0, 0.0));
    CHECK(floor.value <= v.value);
  }
}

TEST_CASE("layout on the parallel configuration") {
  const auto l = scheme_layout(canonicalize(parallel_topology(0.8), uniform_csit(0.5, 0.0)));
  CHECK(l.parallel);
  CHECK(l.case_id == LayoutCase::Case1);
  CHECK(l.rho == approx(0.7));
  CHECK(l[Layer::Common].rate == approx(0.3));
  CHECK(l[Layer::Private1].rate == approx(0.7));
  CHECK(l[Layer::Private2].rate == approx(0.7));
  CHECK(l[Layer::Private1].power == approx(0.7));
  CHECK_FALSE(l.active(Layer::BelowNoise));
  CHECK(l.total_rate() == approx(1.7));
}

TEST_CASE("parallel layout matches the Case1 formulas") {
  const double cross = 0.75, ap = 0.5;
  const auto l = scheme_layout(canonicalize(parallel_topology(cross), uniform_csit(ap, 0.0)));
  const double rho = std::min(1.0 - cross + ap, 1.0 - cross + ap);
  CHECK(l.rho == rho);
  CHECK(l[Layer::Common].rate == 1.0 - rho);
  CHECK(l[Layer::Private1].power == rho + 1.0 - 1.0);
  CHECK(l[Layer::BelowNoise].rate == 0.0);
}

TEST_CASE("Case1 layout example") {
  const auto c = canonicalize(topo({{{1.0, 0.7}, {0.5, 0.9}}}),
                              csit({{{0.4, 0.4}, {0.3, 0.3}}}, Matrix2{}));
  const auto l = scheme_layout(c);
  CHECK_FALSE(l.parallel);
  CHECK(l.case_id == LayoutCase::Case1);
  CHECK(l.rho == approx(0.6));
  CHECK(l[Layer::Common].rate == approx(0.3));
  CHECK(l[Layer::Private1].rate == approx(0.6));
  CHECK(l[Layer::Private2].rate == approx(0.6));
  CHECK(l[Layer::BelowNoise].rate == approx(0.1));
  CHECK(l[Layer::Private1].power == approx(0.7));
  CHECK(l[Layer::BelowNoise].power == approx(0.1));
  CHECK(l.total_rate() == approx(1.6));
}

TEST_CASE("Case2 layout example") {
  const auto c = canonicalize(topo({{{1.0, 0.8}, {0.9, 0.6}}}),
                              csit({{{0.5, 0.5}, {0.4, 0.4}}}, Matrix2{}));
  const auto l = scheme_layout(c);
  CHECK(l.case_id == LayoutCase::Case2);
  CHECK(l.rho == approx(0.4));
  CHECK(l[Layer::Common].rate == approx(0.5));
  CHECK(l[Layer::Private1].rate == approx(0.4));
  CHECK(l[Layer::BelowNoise].rate == approx(0.1));
  CHECK(l[Layer::Private1].power == approx(0.7));
  CHECK(l[Layer::BelowNoise].power == approx(0.1));
  CHECK(l.total_rate() == approx(1.4));
}

TEST_CASE("Case boundary resolves to Case1") {
  const auto c = canonicalize(topo({{{1.0, 0.75}, {0.5, 0.5}}}), uniform_csit(0.25, 0.0));
  CHECK(scheme_layout(c).case_id == LayoutCase::Case1);
}

TEST_CASE("layout invariants on random instances") {
  auto rng = Rng::substream(22, {});
  for (int n = 0; n < 1000; ++n) {
    const auto inst = random_instance(rng);
    const auto l = scheme_layout(canonicalize(inst.topology, inst.csit));
    CHECK(l.rho >= 0.0);
    for (auto layer : kAllLayers) {
      CHECK(l[layer].rate >= 0.0);
      CHECK(l[layer].power <= 1.0 + 1e-12);
      if (l.active(layer)) CHECK(l[layer].power >= -1e-12);
    }
    CHECK(l.total_rate() == approx(distributed_gdof(inst.topology, inst.csit).value));
  }
}

TEST_CASE("layer names") {
  CHECK(layer_name(Layer::Common) == "s0");
  CHECK(layer_name(Layer::Private1) == "s1");
  CHECK(layer_name(Layer::Private2) == "s2");
  CHECK(layer_name(Layer::BelowNoise) == "z1");
}
