#ifndef FOCKALG_SINGLEMODE_HPP
#define FOCKALG_SINGLEMODE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fockalg/scalar.hpp"

namespace fockalg {

/// Finite scalar sequence indexed from 0.
using Sequence = std::vector<Scalar>;

inline constexpr std::size_t kDefaultTowerDepth = 32;

/// Raised when a recursion divides by [phi(n)]! = 0.
class TowerError : public std::domain_error {
 public:
  TowerError(const std::string& what, std::size_t n) : std::domain_error(what), n_(n) {}
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
};

Sequence constant_sequence(const Scalar& value, std::size_t length);
Sequence sample_sequence(const std::function<Scalar(std::size_t)>& f, std::size_t length);

/// phi(0..n_max) from phi(n+1) = F(n) phi(n) + G(n), phi(0) = 0.
/// F and G need entries 0..n_max-1.
Sequence phi_from_FG(const Sequence& F, const Sequence& G, std::size_t n_max);

/// Bose tower phi(n) = n.
Sequence bose_phi(std::size_t n_max = kDefaultTowerDepth);
/// q-tower phi(n) = 1 + q + ... + q^(n-1).
Sequence q_phi(const Scalar& q, std::size_t n_max = kDefaultTowerDepth);

/// [phi(n)]! = phi(1) ... phi(n), with [phi(0)]! = 1.
Scalar phi_factorial(const Sequence& phi, std::size_t n);
/// phi(n) phi(n-1) ... phi(n-k+1); empty product is 1.
Scalar falling_product(const Sequence& phi, std::size_t n, std::size_t k);

/// a a+ = sum_k c_k a+^k a^k. Returns c_0..c_{n_max-1}; c_0 = phi(1).
Sequence c_from_phi(const Sequence& phi);
/// phi(0..c.size()).
Sequence phi_from_c(const Sequence& c);

/// N = sum_{k>=1} d_k a+^k a^k. Index k holds d_k and index 0 is 0. At the
/// first zero n0 of phi, d_{n0} = 0 and the sequence ends there.
Sequence d_from_phi(const Sequence& phi);
/// phi(0..d.size()-1). Throws TowerError when a sum vanishes.
Sequence phi_from_d(const Sequence& d);

/// Eigenvalue of sum_k d_k a+^k a^k on |n>.
Scalar number_eigenvalue(const Sequence& phi, const Sequence& d, std::size_t n);

/// <n-1|a|n> = sqrt|phi(n)|.
double annihilator_element(const Sequence& phi, std::size_t n);
/// <m| a^m a+^n |0> = [phi(n)]! delta_mn.
Scalar vacuum_matrix(const Sequence& phi, std::size_t m, std::size_t n);

struct GaugePair {
  Sequence F;
  Sequence G;
};

struct GaugePresets {
  GaugePair unit_f;  // F = 1
  GaugePair unit_g;  // G = 1
  GaugePair q_f;     // F = q
};

/// The three gauges of phi. Each is checked to regenerate phi; gauge G = 1
/// throws TowerError where phi(n) = 0 or when phi(1) != 1.
GaugePresets gauge_presets(const Sequence& phi, const Scalar& q);

struct InfiniteTower {};
struct Degenerate {
  std::size_t n0;
};
using Representation = std::variant<InfiniteTower, Degenerate>;

/// Degenerate with the least n >= 1 where phi(n) = 0, else InfiniteTower.
Representation classify_representation(const Sequence& phi);

/// A single-mode algebra truncated at n_max.
struct SingleModeAlgebra {
  Sequence F;
  Sequence G;
  Sequence phi;
  std::size_t n_max = kDefaultTowerDepth;

  static SingleModeAlgebra from_FG(Sequence F, Sequence G, std::size_t n_max);
  static SingleModeAlgebra from_phi(Sequence phi);
};

}  // namespace fockalg

#endif  // FOCKALG_SINGLEMODE_HPP
