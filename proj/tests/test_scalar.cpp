#include <random>

#include "doctest.h"
#include "fockalg/scalar.hpp"
#include "support.hpp"

using namespace fockalg;
using fockalg::testing::rat;

TEST_CASE("exact rational arithmetic") {
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
  CHECK(rat(1, 2) / rat(1, 4) == rat(2));
  CHECK(rat(1, 2) - rat(1, 2) == rat(0));
  CHECK((rat(1, 3) + rat(1, 6)).str() == "1/2");
  CHECK(rat(4, -6).str() == "-2/3");
}

TEST_CASE("complex conjugation and modulus") {
  Scalar z = Scalar::complex(2, 3);
  CHECK(z.conj() == Scalar::complex(2, -3));
  CHECK(Scalar::complex(Rational(1, 2), Rational(1, 2)).abs2() == rat(1, 2));
  CHECK(z.mode() == ScalarMode::ExactComplexRational);
  CHECK((z * z.conj()) == rat(13));
}

TEST_CASE("normalization is independent of the representative") {
  for (long k : {1L, 2L, -3L, 17L})
    for (long n : {0L, 1L, -5L, 12L}) CHECK(Scalar::rational(k * n, k * 7) == Scalar::rational(n, 7));
}

TEST_CASE("exact field laws on random rationals") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Scalar a(fockalg::testing::random_rational(rng, 50, 10));
    Scalar b(fockalg::testing::random_rational(rng, 50, 10));
    Scalar c(fockalg::testing::random_rational(rng, 50, 10));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("mode promotion and its limits") {
  Scalar f = Scalar::floating(0.5);
  Scalar sum = rat(1, 2) + f;
  CHECK(sum.mode() == ScalarMode::ComplexFloat);
  CHECK(sum.to_double() == doctest::Approx(1.0));
  CHECK((rat(1) + Scalar::complex(0, 1)).mode() == ScalarMode::ExactComplexRational);
  CHECK_THROWS_AS(f.to_mode(ScalarMode::ExactRational), ScalarError);
  CHECK(rat(1, 4).to_mode(ScalarMode::ComplexFloat).to_double() == 0.25);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(rat(1) / rat(0), ScalarError);
  CHECK_THROWS_AS(Scalar::complex(1, 1) / Scalar::complex(0, 0), ScalarError);
  CHECK_THROWS_AS(Scalar::floating(1) / Scalar::floating(0), ScalarError);
}

TEST_CASE("parsing") {
  CHECK(Scalar::parse("3/9") == rat(1, 3));
  CHECK(Scalar::parse("-7") == rat(-7));
  CHECK(Scalar::parse("0.25") == rat(1, 4));
  CHECK_THROWS(Scalar::parse("abc"));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK(parse_scalar_mode("exact") == ScalarMode::ExactRational);
  CHECK(parse_scalar_mode("float") == ScalarMode::ComplexFloat);
}

TEST_CASE("zero tests") {
  CHECK(rat(0).is_zero());
  CHECK_FALSE(rat(1, 1000000000).is_zero());
  CHECK(Scalar::floating(1e-12).is_zero());
  CHECK(approx_equal(Scalar::floating(1.0 + 1e-12), rat(1)));
  CHECK(pow(rat(-1, 2), 3) == rat(-1, 8));
}
