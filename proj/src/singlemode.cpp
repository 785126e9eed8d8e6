#include "fockalg/singlemode.hpp"

#include <cmath>

namespace fockalg {

namespace {

void require_length(const Sequence& s, std::size_t n, const char* name) {
  if (s.size() < n)
    throw std::invalid_argument(std::string(name) + " needs " + std::to_string(n) + " entries, has " +
                                std::to_string(s.size()));
}

Scalar zero_like(const Scalar& x) { return Scalar(0).to_mode(x.mode()); }
Scalar one_like(const Scalar& x) { return Scalar(1).to_mode(x.mode()); }
Scalar exact_zero_like(const Sequence& s) { return s.empty() ? Scalar(0) : zero_like(s.front()); }

}  // namespace

Sequence constant_sequence(const Scalar& value, std::size_t length) { return Sequence(length, value); }

Sequence sample_sequence(const std::function<Scalar(std::size_t)>& f, std::size_t length) {
  Sequence s;
  s.reserve(length);
  for (std::size_t n = 0; n < length; ++n) s.push_back(f(n));
  return s;
}

Sequence phi_from_FG(const Sequence& F, const Sequence& G, std::size_t n_max) {
  require_length(F, n_max, "F");
  require_length(G, n_max, "G");
  Sequence phi{exact_zero_like(G)};
  for (std::size_t n = 0; n < n_max; ++n) phi.push_back(F[n] * phi[n] + G[n]);
  return phi;
}

Sequence bose_phi(std::size_t n_max) {
  return sample_sequence([](std::size_t n) { return Scalar(static_cast<int>(n)); }, n_max + 1);
}

Sequence q_phi(const Scalar& q, std::size_t n_max) {
  return phi_from_FG(constant_sequence(q, n_max), constant_sequence(one_like(q), n_max), n_max);
}

Scalar falling_product(const Sequence& phi, std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("falling product longer than its start");
  require_length(phi, n + 1, "phi");
  Scalar p = phi.empty() ? Scalar(1) : one_like(phi.front());
  for (std::size_t t = 0; t < k; ++t) p *= phi[n - t];
  return p;
}

Scalar phi_factorial(const Sequence& phi, std::size_t n) { return falling_product(phi, n, n); }

Sequence c_from_phi(const Sequence& phi) {
  if (phi.size() < 2) throw std::invalid_argument("phi needs at least phi(0) and phi(1)");
  const std::size_t n_max = phi.size() - 1;
  Sequence c;
  for (std::size_t n = 0; n < n_max; ++n) {
    Scalar fact = phi_factorial(phi, n);
    if (fact.is_zero())
      throw TowerError("c_n undefined: phi(" + std::to_string(n) + ") factorial vanishes", n);
    Scalar rest = phi[n + 1];
    for (std::size_t k = 0; k < n; ++k) rest -= c[k] * falling_product(phi, n, k);
    c.push_back(rest / fact);
  }
  return c;
}

Sequence phi_from_c(const Sequence& c) {
  Sequence phi{exact_zero_like(c)};
  for (std::size_t n = 0; n < c.size(); ++n) {
    Scalar sum = exact_zero_like(c);
    for (std::size_t k = 0; k <= n; ++k) sum += c[k] * falling_product(phi, n, k);
    phi.push_back(sum);
  }
  return phi;
}

Sequence d_from_phi(const Sequence& phi) {
  if (phi.size() < 2) throw std::invalid_argument("phi needs at least phi(0) and phi(1)");
  Sequence d{exact_zero_like(phi)};
  for (std::size_t n = 1; n < phi.size(); ++n) {
    if (phi[n].is_zero()) {
      d.push_back(exact_zero_like(phi));
      break;
    }
    Scalar rest = Scalar(static_cast<int>(n)).to_mode(phi[n].mode());
    for (std::size_t k = 1; k < n; ++k) rest -= d[k] * falling_product(phi, n, k);
    d.push_back(rest / phi_factorial(phi, n));
  }
  return d;
}

Sequence phi_from_d(const Sequence& d) {
  if (d.size() < 2) throw std::invalid_argument("d needs at least d_1");
  Sequence phi{exact_zero_like(d)};
  for (std::size_t n = 1; n < d.size(); ++n) {
    Scalar sum = exact_zero_like(d);
    for (std::size_t k = 1; k <= n; ++k) sum += d[k] * falling_product(phi, n - 1, k - 1);
    if (sum.is_zero()) throw TowerError("phi(" + std::to_string(n) + ") undefined: sum vanishes", n);
    phi.push_back(Scalar(static_cast<int>(n)).to_mode(sum.mode()) / sum);
  }
  return phi;
}

Scalar number_eigenvalue(const Sequence& phi, const Sequence& d, std::size_t n) {
  Scalar sum = exact_zero_like(phi);
  for (std::size_t k = 1; k <= n && k < d.size(); ++k) sum += d[k] * falling_product(phi, n, k);
  return sum;
}

double annihilator_element(const Sequence& phi, std::size_t n) {
  if (n == 0 || n >= phi.size()) throw std::out_of_range("annihilator element needs 1 <= n <= n_max");
  return std::sqrt(std::abs(phi[n].to_complex()));
}

Scalar vacuum_matrix(const Sequence& phi, std::size_t m, std::size_t n) {
  if (m != n) return exact_zero_like(phi);
  return phi_factorial(phi, n);
}

GaugePresets gauge_presets(const Sequence& phi, const Scalar& q) {
  if (phi.size() < 2) throw std::invalid_argument("phi needs at least phi(0) and phi(1)");
  const std::size_t n_max = phi.size() - 1;
  const Scalar one = one_like(phi[1]);
  GaugePresets g;
  g.unit_f.F = constant_sequence(one, n_max);
  g.q_f.F = constant_sequence(q, n_max);
  g.unit_g.G = constant_sequence(one, n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    g.unit_f.G.push_back(phi[n + 1] - phi[n]);
    g.q_f.G.push_back(phi[n + 1] - q * phi[n]);
    if (n == 0) {
      if (phi[1] != one) throw TowerError("gauge G = 1 needs phi(1) = 1", 1);
      g.unit_g.F.push_back(one);
      continue;
    }
    if (phi[n].is_zero()) throw TowerError("gauge G = 1 divides by phi(" + std::to_string(n) + ") = 0", n);
    g.unit_g.F.push_back((phi[n + 1] - one) / phi[n]);
  }
  for (const GaugePair* p : {&g.unit_f, &g.unit_g, &g.q_f})
    if (phi_from_FG(p->F, p->G, n_max) != phi) throw std::logic_error("gauge does not regenerate phi");
  return g;
}

Representation classify_representation(const Sequence& phi) {
  for (std::size_t n = 1; n < phi.size(); ++n)
    if (phi[n].is_zero()) return Degenerate{n};
  return InfiniteTower{};
}

SingleModeAlgebra SingleModeAlgebra::from_FG(Sequence F, Sequence G, std::size_t n_max) {
  SingleModeAlgebra a;
  a.phi = phi_from_FG(F, G, n_max);
  a.F = std::move(F);
  a.G = std::move(G);
  a.n_max = n_max;
  return a;
}

SingleModeAlgebra SingleModeAlgebra::from_phi(Sequence phi) {
  if (phi.size() < 2) throw std::invalid_argument("phi needs at least phi(0) and phi(1)");
  if (!phi[0].is_zero()) throw std::invalid_argument("phi(0) must be 0");
  SingleModeAlgebra a;
  a.n_max = phi.size() - 1;
  GaugePair unit = {constant_sequence(one_like(phi[1]), a.n_max), {}};
  for (std::size_t n = 0; n < a.n_max; ++n) unit.G.push_back(phi[n + 1] - phi[n]);
  a.F = std::move(unit.F);
  a.G = std::move(unit.G);
  a.phi = std::move(phi);
  return a;
}

}  // namespace fockalg
