#include <random>

#include "doctest.h"
#include "fockalg/gram.hpp"
#include "support.hpp"

using namespace fockalg;
using fockalg::testing::rat;

namespace {

// Basis order used by the published 3-mode matrices.
const std::vector<Word> kPublishedBasis = {{1, 2, 3}, {2, 1, 3}, {1, 3, 2},
                                           {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};

Scalar in_published_order(const GramMatrix& g, std::size_t r, std::size_t c) {
  return g.entries(g.sector.index_of(kPublishedBasis[r]), g.sector.index_of(kPublishedBasis[c]));
}

}  // namespace

TEST_CASE("vacuum matrix elements") {
  CHECK(vacuum_matrix_element(AlgebraSpec::bose({1, 2}), {1, 2}, {2, 1}) == rat(1));
  CHECK(vacuum_matrix_element(AlgebraSpec::fermi({1, 2}), {1, 2}, {2, 1}) == rat(-1));
  CHECK(vacuum_matrix_element(AlgebraSpec::bose({1, 2}), {1, 1}, {1, 2}) == rat(0));
  CHECK(vacuum_matrix_element(AlgebraSpec::para({1, 2, 3}, 1, rat(4)), {1, 2, 3}, {2, 1, 3}) ==
        rat(-1, 2));

  ScalarMatrix q(2, 2, rat(0));
  q(0, 1) = Scalar::complex(Rational(1, 3), Rational(1, 2));
  q(1, 0) = q(0, 1).conj();
  auto s = AlgebraSpec::quon({1, 2}, q);
  CHECK(vacuum_matrix_element(s, {1, 2}, {1, 2}) == rat(1));
  CHECK(vacuum_matrix_element(s, {1, 2}, {2, 1}) == s.q(1, 2));
  CHECK(vacuum_matrix_element(s, {2, 1}, {1, 2}) == s.q(2, 1));
}

TEST_CASE("para 3-mode matrix matches the closed form") {
  for (int q : {1, -1})
    for (int p : {1, 2, 3, 4, 5}) {
      Scalar x = rat(q) * (rat(2, p) - rat(1));
      Scalar z = rat(q) * rat(2, p) - rat(q * q * q) * (rat(2, p) - rat(1)) * (rat(2, p) - rat(1));
      Scalar one = rat(1), x2 = x * x;
      const std::vector<std::vector<Scalar>> expected = {
          {one, x, x, x2, x2, z}, {x, one, x2, x, z, x2}, {x, x2, one, z, x, x2},
          {x2, x, z, one, x2, x}, {x2, z, x, x2, one, x}, {z, x2, x2, x, x, one}};
      GramMatrix g = gram_matrix(AlgebraSpec::para({1, 2, 3}, q, rat(p)), {1, 2, 3});
      for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) CHECK(in_published_order(g, r, c) == expected[r][c]);
    }
}

TEST_CASE("para two-mode and doubly occupied sectors") {
  for (int q : {1, -1})
    for (int p : {2, 3, 4}) {
      auto s = AlgebraSpec::para({1, 2}, q, rat(p));
      Scalar x = rat(q) * (rat(2, p) - rat(1));
      Scalar z = rat(q) * rat(2, p) - rat(q) * (rat(2, p) - rat(1)) * (rat(2, p) - rat(1));
      GramMatrix two = gram_matrix(s, {1, 2});
      CHECK(two.entries(0, 0) == rat(1));
      CHECK(two.entries(0, 1) == x);
      CHECK(two.entries(1, 0) == x);

      GramMatrix g = gram_matrix(s, {1, 1, 2});
      std::size_t a = g.sector.index_of({1, 1, 2}), b = g.sector.index_of({1, 2, 1});
      CHECK(g.entries(a, a) == rat(1) + x);
      CHECK(g.entries(a, b) == x + x * x);
      CHECK(g.entries(b, a) == x + x * x);
      CHECK(g.entries(b, b) == rat(1) + z);
    }
}

TEST_CASE("govorkov 3-mode matrix") {
  for (Scalar y : {rat(1, 4), rat(1, 3), rat(-2, 5)}) {
    Scalar one = rat(1), m = -y, y2 = y * y;
    // Hermitian form; the published display differs at (3,4) and (3,5).
    const std::vector<std::vector<Scalar>> expected = {
        {one, m, m, y2, y2, m}, {m, one, y2, m, m, y2}, {m, y2, one, m, m, y2},
        {y2, m, m, one, y2, m}, {y2, m, m, y2, one, m}, {m, y2, y2, m, m, one}};
    GramMatrix g = gram_matrix(AlgebraSpec::govorkov({1, 2, 3}, y), {1, 2, 3});
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) CHECK(in_published_order(g, r, c) == expected[r][c]);
  }
}

TEST_CASE("direct quon formula") {
  auto s = AlgebraSpec::quon_uniform({1, 2, 3}, rat(1));
  GramMatrix g = quon_gram_direct(s, {1, 2, 3});
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(g.entries(r, c) == rat(1));

  ScalarMatrix q(2, 2, rat(1, 5));
  q(0, 1) = Scalar::complex(Rational(1, 4), Rational(-1, 3));
  q(1, 0) = q(0, 1).conj();
  auto s2 = AlgebraSpec::quon({1, 2}, q);
  GramMatrix d = quon_gram_direct(s2, {1, 2});
  CHECK(d.entries(0, 0) == rat(1));
  CHECK(d.entries(0, 1) == s2.q(1, 2));
  CHECK_THROWS_AS(quon_gram_direct(AlgebraSpec::para({1, 2}, 1, rat(3)), {1, 2}), AlgebraError);
}

TEST_CASE("direct quon formula equals the contraction Gram") {
  std::mt19937 rng(3);
  for (int t = 0; t < 4; ++t) {
    auto s = AlgebraSpec::quon({1, 2, 3}, fockalg::testing::random_hermitian_q(rng, 3, Rational(3, 4)));
    GramEngine engine(s);
    for (std::size_t n = 1; n <= 3; ++n)
      for (const Word& ms : enumerate_multisets({1, 2, 3}, n))
        CHECK(engine.matrix(ms).entries == quon_gram_direct(s, ms).entries);
  }
}

TEST_CASE("Hermiticity and non-negative diagonal") {
  std::vector<AlgebraSpec> specs = {
      AlgebraSpec::bose({1, 2, 3}), AlgebraSpec::fermi({1, 2, 3}),
      AlgebraSpec::para({1, 2, 3}, 1, rat(3)), AlgebraSpec::para({1, 2, 3}, -1, rat(4)),
      AlgebraSpec::govorkov({1, 2, 3}, rat(1, 3)), AlgebraSpec::quon_uniform({1, 2, 3}, rat(-1, 2))};
  for (const auto& s : specs) {
    GramEngine engine(s);
    for (std::size_t n = 1; n <= 3; ++n)
      for (const Word& ms : enumerate_multisets({1, 2, 3}, n)) {
        GramMatrix g = engine.matrix(ms);
        CHECK(g.entries == conjugate_transpose(g.entries));
        for (std::size_t k = 0; k < g.sector.size(); ++k) CHECK(g.entries(k, k).to_double() >= 0);
      }
  }
}

TEST_CASE("matrix elements between different multisets vanish") {
  auto s = AlgebraSpec::para({1, 2, 3}, 1, rat(3));
  GramEngine engine(s);
  CHECK(engine.element({1, 2, 3}, {1, 1, 2}) == rat(0));
  CHECK(engine.element({1, 2}, {1, 2, 3}) == rat(0));
  CHECK(engine.element({}, {}) == rat(1));
}

TEST_CASE("engine agrees with the uncached element") {
  auto s = AlgebraSpec::govorkov({1, 2, 3}, rat(2, 7));
  GramEngine engine(s);
  Sector sec = enumerate_sector({1, 1, 2, 3});
  for (const Word& u : sec.basis())
    for (const Word& v : sec.basis()) CHECK(engine.element(u, v) == vacuum_matrix_element(s, u, v));
}

TEST_CASE("sector quotient") {
  auto s = AlgebraSpec::bose({1, 2});
  GramEngine engine(s);
  const SectorQuotient& qt = engine.quotient({1, 2});
  CHECK(qt.rank() == 1);
  FockVector antisym({1, 2}, rat(1));
  antisym.add({2, 1}, rat(-1));
  CHECK(qt.is_null(antisym));
  CHECK_FALSE(qt.is_null(FockVector({2, 1}, rat(1))));
  CHECK(qt.reduced_vector(FockVector({2, 1}, rat(3))) == FockVector({1, 2}, rat(3)));
  CHECK(engine.is_null(FockVector()));
  CHECK_FALSE(engine.is_null(FockVector(Word{}, rat(1))));
}

TEST_CASE("float mode reproduces the exact matrix") {
  auto s = AlgebraSpec::para({1, 2, 3}, 1, rat(3));
  GramMatrix e = gram_matrix(s, {1, 2, 3});
  GramMatrix f = gram_matrix(s.in_mode(ScalarMode::ComplexFloat), {1, 2, 3});
  CHECK(f.mode == ScalarMode::ComplexFloat);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(approx_equal(e.entries(r, c), f.entries(r, c)));
}
