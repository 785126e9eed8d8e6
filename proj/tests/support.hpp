#ifndef FOCKALG_TESTS_SUPPORT_HPP
#define FOCKALG_TESTS_SUPPORT_HPP

#include <random>

#include "fockalg/algebra.hpp"

namespace fockalg::testing {

inline Scalar rat(long n, long d = 1) { return Scalar::rational(n, d); }

/// Rational in [-bound, bound] with denominator up to max_den.
inline Rational random_rational(std::mt19937& rng, long max_den, const Rational& bound) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  long den = den_dist(rng);
  Rational limit = bound * den;
  long top = static_cast<long>(mpz_class(limit.get_num() / limit.get_den()).get_si());
  std::uniform_int_distribution<long> num_dist(-top, top);
  Rational r(num_dist(rng), den);
  r.canonicalize();
  return r;
}

/// Hermitian matrix of exact complex rationals with |q_ij| <= bound
/// (real and imaginary parts are each kept within bound / 2).
inline ScalarMatrix random_hermitian_q(std::mt19937& rng, std::size_t d, const Rational& bound) {
  ScalarMatrix q(d, d);
  Rational half = bound / 2;
  for (std::size_t i = 0; i < d; ++i) {
    q(i, i) = Scalar(random_rational(rng, 8, bound));
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexRational c(random_rational(rng, 8, half), random_rational(rng, 8, half));
      q(i, j) = Scalar(c);
      q(j, i) = Scalar(c.conj());
    }
  }
  return q;
}

}  // namespace fockalg::testing

#endif  // FOCKALG_TESTS_SUPPORT_HPP
