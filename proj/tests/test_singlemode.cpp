#include <cmath>
#include <random>

#include "doctest.h"
#include "fockalg/singlemode.hpp"
#include "support.hpp"

using namespace fockalg;
using fockalg::testing::rat;

namespace {

Sequence random_tower(std::mt19937& rng, std::size_t n_max) {
  Sequence phi{rat(0), rat(1)};
  std::uniform_int_distribution<long> num(1, 40), den(1, 9);
  for (std::size_t n = 2; n <= n_max; ++n) phi.push_back(rat(num(rng), den(rng)));
  return phi;
}

}  // namespace

TEST_CASE("phi from F and G") {
  Sequence bose = phi_from_FG(constant_sequence(rat(1), 6), constant_sequence(rat(1), 6), 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(bose[n] == rat(static_cast<long>(n)));
  CHECK(bose == bose_phi(6));

  Scalar q = rat(1, 2);
  Sequence qt = q_phi(q, 6);
  Scalar qn = rat(1);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(qt[n] == (qn - rat(1)) / (q - rat(1)));
    qn *= q;
  }

  Sequence alt = sample_sequence([](std::size_t n) { return rat(n % 2 ? -1 : 1); }, 6);
  Sequence fermi = phi_from_FG(constant_sequence(rat(1), 6), alt, 6);
  CHECK(fermi == Sequence{rat(0), rat(1), rat(0), rat(1), rat(0), rat(1), rat(0)});
  CHECK_THROWS(phi_from_FG(constant_sequence(rat(1), 3), alt, 6));

  // F vanishing inside the tower is harmless in the recurrence.
  Sequence F = constant_sequence(rat(2), 5);
  F[2] = rat(0);
  Sequence g = phi_from_FG(F, constant_sequence(rat(1), 5), 5);
  CHECK(g[3] == rat(1));
  CHECK(g[4] == rat(3));
}

TEST_CASE("c and d sequences") {
  Sequence bose = bose_phi(8);
  Sequence c = c_from_phi(bose);
  REQUIRE(c.size() == 8);
  CHECK(c[0] == rat(1));
  CHECK(c[1] == rat(1));
  for (std::size_t n = 2; n < c.size(); ++n) CHECK(c[n] == rat(0));
  Sequence d = d_from_phi(bose);
  CHECK(d[1] == rat(1));
  for (std::size_t n = 2; n < d.size(); ++n) CHECK(d[n] == rat(0));

  // q-tower: a a+ = 1 + q a+ a.
  Sequence qt = q_phi(rat(1, 2), 8);
  Sequence cq = c_from_phi(qt);
  CHECK(cq[1] == rat(1, 2));
  for (std::size_t n = 2; n < cq.size(); ++n) CHECK(cq[n] == rat(0));
  CHECK(phi_from_c(cq) == qt);
  Sequence dq = d_from_phi(qt);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(number_eigenvalue(qt, dq, n) == rat(static_cast<long>(n)));
  CHECK(phi_from_d(dq) == qt);
}

TEST_CASE("random towers round-trip exactly") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Sequence phi = random_tower(rng, 8);
    CHECK(phi_from_c(c_from_phi(phi)) == phi);
    Sequence d = d_from_phi(phi);
    CHECK(phi_from_d(d) == phi);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(number_eigenvalue(phi, d, n) == rat(static_cast<long>(n)));
  }
}

TEST_CASE("zeros of phi") {
  Sequence fermi{rat(0), rat(1), rat(0), rat(1), rat(0)};
  try {
    c_from_phi(fermi);
    FAIL("expected a tower error");
  } catch (const TowerError& e) {
    CHECK(e.n() == 2);
  }
  Sequence d = d_from_phi(fermi);
  REQUIRE(d.size() == 3);
  CHECK(d[1] == rat(1));
  CHECK(d[2] == rat(0));
  CHECK(number_eigenvalue(fermi, d, 1) == rat(1));

  CHECK(std::holds_alternative<InfiniteTower>(classify_representation(bose_phi(10))));
  auto f = classify_representation(fermi);
  REQUIRE(std::holds_alternative<Degenerate>(f));
  CHECK(std::get<Degenerate>(f).n0 == 2);
  Sequence para = sample_sequence([](std::size_t n) { return rat(static_cast<long>(n * (5 - n)), 4); }, 9);
  CHECK(para[1] == rat(1));
  auto r = classify_representation(para);
  REQUIRE(std::holds_alternative<Degenerate>(r));
  CHECK(std::get<Degenerate>(r).n0 == 5);
}

TEST_CASE("norms and vacuum matrix") {
  Sequence bose = bose_phi(6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(annihilator_element(bose, n) == doctest::Approx(std::sqrt(double(n))));
  CHECK(vacuum_matrix(bose, 3, 3) == rat(6));
  CHECK(vacuum_matrix(bose, 2, 3) == rat(0));
  CHECK(vacuum_matrix(q_phi(rat(1, 2), 4), 2, 2) == rat(3, 2));
  CHECK_THROWS(annihilator_element(bose, 0));

  // Towers differing by a phase share norms.
  Sequence flipped = q_phi(rat(1, 2), 6);
  for (std::size_t n = 2; n <= 6; n += 2) flipped[n] = -flipped[n];
  Sequence base = q_phi(rat(1, 2), 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(annihilator_element(flipped, n) == annihilator_element(base, n));
}

TEST_CASE("gauge presets") {
  GaugePresets b = gauge_presets(bose_phi(8), rat(1));
  for (const Scalar& g : b.unit_f.G) CHECK(g == rat(1));

  Scalar q = rat(1, 3);
  Sequence qt = q_phi(q, 8);
  GaugePresets g = gauge_presets(qt, q);
  for (const Scalar& v : g.q_f.G) CHECK(v == rat(1));
  for (std::size_t n = 1; n < g.unit_g.F.size(); ++n) CHECK(g.unit_g.F[n] == q);
  CHECK(phi_from_FG(g.unit_g.F, g.unit_g.G, 8) == qt);

  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    Sequence phi = random_tower(rng, 8);
    GaugePresets p = gauge_presets(phi, rat(2, 5));
    CHECK(phi_from_FG(p.unit_f.F, p.unit_f.G, 8) == phi);
    CHECK(phi_from_FG(p.unit_g.F, p.unit_g.G, 8) == phi);
    CHECK(phi_from_FG(p.q_f.F, p.q_f.G, 8) == phi);
  }
  CHECK_THROWS_AS(gauge_presets(Sequence{rat(0), rat(1), rat(0), rat(1)}, rat(1)), TowerError);
}

TEST_CASE("algebra wrapper") {
  auto a = SingleModeAlgebra::from_FG(constant_sequence(rat(1, 2), 5), constant_sequence(rat(1), 5), 5);
  CHECK(a.phi == q_phi(rat(1, 2), 5));
  auto b = SingleModeAlgebra::from_phi(a.phi);
  CHECK(phi_from_FG(b.F, b.G, b.n_max) == a.phi);
  CHECK_THROWS(SingleModeAlgebra::from_phi(Sequence{rat(1), rat(1)}));
}
