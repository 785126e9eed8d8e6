#include "fockalg/jordanwigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockalg {

namespace {

void check_mode(const JWSpec& spec, std::size_t i) {
  if (i < 1 || i > spec.d) throw std::out_of_range("mode " + std::to_string(i) + " outside 1.." + std::to_string(spec.d));
}

void check_occupation(const JWSpec& spec, const Occupation& n) {
  if (n.size() != spec.d) throw std::invalid_argument("occupation vector length differs from d");
  for (std::size_t i = 0; i < spec.d; ++i)
    if (n[i] >= spec.phi[i].size())
      throw std::out_of_range("occupation " + std::to_string(n[i]) + " of mode " + std::to_string(i + 1) +
                              " exceeds the phi table");
}

double two_re(const JWSpec& spec, std::size_t i, std::size_t j) { return 2.0 * spec.c(i, j).real(); }

// exp(sum_{l != j} (c_jl + conj(c_jl)) n_l), 0-based j.
double cross_factor(const JWSpec& spec, std::size_t j, const Occupation& n) {
  double e = 0.0;
  for (std::size_t l = 0; l < spec.d; ++l)
    if (l != j) e += two_re(spec, j, l) * static_cast<double>(n[l]);
  return std::exp(e);
}

}  // namespace

void JWSpec::validate() const {
  if (d == 0) throw std::invalid_argument("JW spec needs at least one mode");
  if (c.rows() != d || c.cols() != d) throw std::invalid_argument("c must be d x d");
  if (phi.size() != d) throw std::invalid_argument("one phi table per mode is required");
  for (std::size_t i = 0; i < d; ++i) {
    if (phi[i].size() < 2) throw std::invalid_argument("phi table too short for mode " + std::to_string(i + 1));
    if (!phi[i][0].is_zero()) throw std::invalid_argument("phi_" + std::to_string(i + 1) + "(0) must be 0");
    if (std::abs(std::abs(phi[i][1].to_complex()) - 1.0) > 1e-12)
      throw std::invalid_argument("|phi_" + std::to_string(i + 1) + "(1)| must be 1");
  }
}

JWSpec JWSpec::bose(std::size_t d, std::size_t n_max) {
  JWSpec s;
  s.d = d;
  s.c = ComplexMatrix(d, d, Complex(0.0, 0.0));
  s.phi.assign(d, bose_phi(n_max));
  return s;
}

JWCommutation jw_commutation_data(const JWSpec& spec, std::size_t i, std::size_t j) {
  check_mode(spec, i);
  check_mode(spec, j);
  if (i == j) throw std::invalid_argument("commutation data needs distinct modes");
  const Complex cij = spec.c(i - 1, j - 1), cji = spec.c(j - 1, i - 1);
  return {std::exp(cji - cij), std::exp(cij + std::conj(cji))};
}

double jw_phi_tilde(const JWSpec& spec, std::size_t i, std::size_t n) {
  check_mode(spec, i);
  const Sequence& phi = spec.phi[i - 1];
  if (n >= phi.size()) throw std::out_of_range("phi table too short");
  return std::abs(phi[n].to_complex()) * std::exp(two_re(spec, i - 1, i - 1) * static_cast<double>(n));
}

double jw_state_norm(const JWSpec& spec, const Occupation& n) {
  check_occupation(spec, n);
  double prod = 1.0, e = 0.0;
  for (std::size_t i = 0; i < spec.d; ++i) {
    for (std::size_t t = 1; t <= n[i]; ++t) prod *= jw_phi_tilde(spec, i + 1, t);
    for (std::size_t j = i + 1; j < spec.d; ++j)
      e += two_re(spec, i, j) * static_cast<double>(n[i]) * static_cast<double>(n[j]);
  }
  if (prod == 0.0) return 0.0;
  return std::sqrt(prod) * std::exp(0.5 * e);
}

Complex jw_matrix_element(const JWSpec& spec, std::size_t i, const Occupation& n) {
  check_mode(spec, i);
  check_occupation(spec, n);
  if (n[i - 1] == 0) throw std::invalid_argument("matrix element needs n_i >= 1");
  double e = 0.0;
  for (std::size_t j = 0; j < spec.d; ++j) e += two_re(spec, i - 1, j) * static_cast<double>(n[j]);
  return std::sqrt(spec.phi[i - 1][n[i - 1]].to_complex()) * std::exp(0.5 * e);
}

std::pair<double, double> jw_powers(const JWSpec& spec, std::size_t j, std::size_t k, const Occupation& n) {
  check_mode(spec, j);
  check_occupation(spec, n);
  const std::size_t nj = n[j - 1];
  if (nj + k >= spec.phi[j - 1].size()) throw std::out_of_range("phi table too short for the raised state");
  const double cross = std::pow(cross_factor(spec, j - 1, n), static_cast<double>(k));
  double lower = 0.0;
  if (nj >= k) {
    lower = 1.0;
    for (std::size_t t = 0; t < k; ++t) lower *= jw_phi_tilde(spec, j, nj - t);
    lower *= cross;
  }
  double raise = 1.0;
  for (std::size_t t = 1; t <= k; ++t) raise *= jw_phi_tilde(spec, j, nj + t);
  return {lower, raise * cross};
}

JWSpec haldane_preset(long m, std::size_t d, std::vector<Sequence> phi) {
  if (m < 1) throw std::invalid_argument("Haldane preset needs m >= 1");
  JWSpec s = JWSpec::bose(d);
  if (!phi.empty()) s.phi = std::move(phi);
  const double angle = std::numbers::pi / static_cast<double>(m + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      s.c(i, j) = Complex(0.0, -angle);
      s.c(j, i) = Complex(0.0, angle);
    }
  s.haldane_m = m;
  s.validate();
  return s;
}

OccupationSpace::OccupationSpace(std::size_t d, std::size_t max_total) {
  Occupation n(d, 0);
  while (true) {
    std::size_t total = 0;
    for (std::size_t x : n) total += x;
    if (total <= max_total) states_.push_back(n);
    std::size_t pos = 0;
    while (pos < d && n[pos] == max_total) n[pos++] = 0;
    if (pos == d) break;
    ++n[pos];
  }
}

std::size_t OccupationSpace::index_of(const Occupation& n) const {
  for (std::size_t k = 0; k < states_.size(); ++k)
    if (states_[k] == n) return k;
  return SIZE_MAX;
}

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix shapes do not match");
  ComplexMatrix out(x.rows(), y.cols(), Complex(0.0, 0.0));
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Complex v = x(r, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < y.cols(); ++c) out(r, c) += v * y(k, c);
    }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& x) {
  ComplexMatrix out(x.cols(), x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(c, r) = std::conj(x(r, c));
  return out;
}

JWOperators jw_operator_matrices(const JWSpec& spec, std::size_t max_total) {
  spec.validate();
  JWOperators ops{OccupationSpace(spec.d, max_total), {}, {}, {}};
  const std::size_t size = ops.space.size();
  const Complex zero(0.0, 0.0);
  for (std::size_t i = 0; i < spec.d; ++i) {
    ComplexMatrix b(size, size, zero), e(size, size, zero), s(size, size, zero);
    for (std::size_t k = 0; k < size; ++k) {
      const Occupation& n = ops.space[k];
      if (n[i] >= spec.phi[i].size()) throw std::out_of_range("phi table too short for the truncation");
      Complex exponent = zero;
      for (std::size_t j = 0; j < spec.d; ++j) exponent += spec.c(i, j) * static_cast<double>(n[j]);
      e(k, k) = std::exp(exponent);
      if (n[i] == 0) continue;
      s(k, k) = std::sqrt(spec.phi[i][n[i]].to_complex() / static_cast<double>(n[i]));
      Occupation lowered = n;
      --lowered[i];
      b(ops.space.index_of(lowered), k) = std::sqrt(static_cast<double>(n[i]));
    }
    ComplexMatrix a = multiply(b, multiply(e, s));
    ops.adag.push_back(adjoint(a));
    ops.a.push_back(std::move(a));
    ops.number.push_back(multiply(adjoint(b), b));
  }
  return ops;
}

}  // namespace fockalg
