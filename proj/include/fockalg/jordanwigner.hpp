#ifndef FOCKALG_JORDANWIGNER_HPP
#define FOCKALG_JORDANWIGNER_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "fockalg/matrix.hpp"
#include "fockalg/singlemode.hpp"

namespace fockalg {

using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;
/// Occupation numbers n_1..n_d.
using Occupation = std::vector<std::size_t>;

/// Multimode algebra a_i = b_i exp(sum_j c_ij N_j) sqrt(phi_i(N_i)/N_i)
/// built on Bose operators b_i. Modes are numbered 1..d in the API.
struct JWSpec {
  std::size_t d = 0;
  ComplexMatrix c;           // c(i-1, j-1) = c_ij
  std::vector<Sequence> phi;  // phi[i-1] = phi_i(0..n_max)
  /// Exclusion statistics parameter m of the Haldane preset, if any.
  std::optional<long> haldane_m;

  /// Checks sizes, phi_i(0) = 0 and |phi_i(1)| = 1.
  void validate() const;
  static JWSpec bose(std::size_t d, std::size_t n_max = kDefaultTowerDepth);
};

struct JWCommutation {
  Complex aa_phase;      // a_i a_j = aa_phase a_j a_i
  Complex a_adag_phase;  // a_i a+_j = a_adag_phase a+_j a_i
};

/// exp(c_ji - c_ij) and exp(c_ij + conj(c_ji)). Requires i != j.
JWCommutation jw_commutation_data(const JWSpec& spec, std::size_t i, std::size_t j);

/// |phi_i(n)| exp((c_ii + conj(c_ii)) n).
double jw_phi_tilde(const JWSpec& spec, std::size_t i, std::size_t n);

/// Norm of (a+_1)^n_1 ... (a+_d)^n_d |0>:
/// sqrt(prod [phi~_i(n_i)]!) exp(1/2 sum_{i<j} (c_ij + conj(c_ij)) n_i n_j).
/// Zero when some [phi~_i(n_i)]! vanishes (null state).
double jw_state_norm(const JWSpec& spec, const Occupation& n);

/// <..n_i - 1..|a_i|..n_i..> = sqrt(phi_i(n_i)) exp(1/2 sum_j (c_ij + conj(c_ij)) n_j).
Complex jw_matrix_element(const JWSpec& spec, std::size_t i, const Occupation& n);

/// Eigenvalues of (a+_j)^k (a_j)^k and (a_j)^k (a+_j)^k on the state n.
std::pair<double, double> jw_powers(const JWSpec& spec, std::size_t j, std::size_t k, const Occupation& n);

/// c_ij = -i pi/(m+1) for i < j, c_ji = +i pi/(m+1), c_ii = 0. phi defaults
/// to the Bose tower for every mode.
JWSpec haldane_preset(long m, std::size_t d, std::vector<Sequence> phi = {});

/// Occupation states of d modes with total particle number <= max_total.
class OccupationSpace {
 public:
  OccupationSpace(std::size_t d, std::size_t max_total);
  std::size_t size() const { return states_.size(); }
  const Occupation& operator[](std::size_t k) const { return states_[k]; }
  /// SIZE_MAX when n lies outside the space.
  std::size_t index_of(const Occupation& n) const;

 private:
  std::vector<Occupation> states_;
};

/// Operator matrices on a truncated occupation space, built directly from
/// the mapping. Matrix(r, c) = <state r| op |state c>.
struct JWOperators {
  OccupationSpace space;
  std::vector<ComplexMatrix> a;
  std::vector<ComplexMatrix> adag;
  std::vector<ComplexMatrix> number;  // b+_i b_i
};

JWOperators jw_operator_matrices(const JWSpec& spec, std::size_t max_total);

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix adjoint(const ComplexMatrix& x);

}  // namespace fockalg

#endif  // FOCKALG_JORDANWIGNER_HPP
