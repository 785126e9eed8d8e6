#ifndef FOCKALG_ALGEBRA_HPP
#define FOCKALG_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fockalg/fock.hpp"
#include "fockalg/linalg.hpp"
#include "fockalg/scalar.hpp"

namespace fockalg {

enum class Family { Bose, Fermi, Quon, Para, Govorkov, Custom };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position-based contraction table for the Custom family. Key (n, k, perm):
/// a word of length n hit at 1-based position k, with the remaining n-1
/// letters rearranged so that output[t] = rest[perm[t]].
struct ContractionTable {
  using Key = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::map<Key, Scalar> entries;

  void set(std::size_t n, std::size_t k, std::vector<std::size_t> perm, Scalar coeff) {
    entries[{n, k, std::move(perm)}] = std::move(coeff);
  }
};

/// An algebra family with its parameters over an ordered set of modes.
/// Immutable once built; use the named constructors.
class AlgebraSpec {
 public:
  static AlgebraSpec bose(std::vector<Mode> modes);
  static AlgebraSpec fermi(std::vector<Mode> modes);
  /// q is indexed by mode position and must satisfy q(i,j)* = q(j,i).
  static AlgebraSpec quon(std::vector<Mode> modes, ScalarMatrix q);
  /// Uniform quon with q_ij = q for every pair (q must be real).
  static AlgebraSpec quon_uniform(std::vector<Mode> modes, const Scalar& q);
  /// Para-Bose (sign = +1) or para-Fermi (sign = -1) of order p. Only 2/p
  /// enters the algebra, so p may be any nonzero rational.
  static AlgebraSpec para(std::vector<Mode> modes, int sign, const Scalar& p);
  /// Govorkov algebra with y = lambda / p.
  static AlgebraSpec govorkov(std::vector<Mode> modes, const Scalar& y);
  static AlgebraSpec custom(std::vector<Mode> modes, ContractionTable table);

  Family family() const { return family_; }
  const std::vector<Mode>& modes() const { return modes_; }
  ScalarMode scalar_mode() const { return scalar_mode_; }

  bool has_mode(Mode m) const;
  std::size_t mode_index(Mode m) const;  // throws AlgebraError

  /// q_ij for Quon (also defined for Bose = 1 and Fermi = -1).
  Scalar q(Mode i, Mode j) const;
  const ScalarMatrix& quon_matrix() const { return quon_q_; }
  int para_sign() const { return para_sign_; }
  const Scalar& para_p() const { return para_p_; }
  const Scalar& two_over_p() const { return two_over_p_; }
  const Scalar& govorkov_y() const { return govorkov_y_; }
  const ContractionTable& table() const { return table_; }

  /// Same algebra restricted to the first d modes.
  AlgebraSpec restricted(std::size_t d) const;
  /// Converts every parameter to `mode` (float -> exact is rejected).
  AlgebraSpec in_mode(ScalarMode mode) const;

  /// One(zero) in this spec's scalar mode.
  Scalar one() const { return Scalar(1).to_mode(scalar_mode_); }
  Scalar zero() const { return Scalar(0).to_mode(scalar_mode_); }

  std::string describe() const;

 private:
  AlgebraSpec(Family f, std::vector<Mode> modes);
  void refresh_mode();

  Family family_ = Family::Bose;
  std::vector<Mode> modes_;
  ScalarMode scalar_mode_ = ScalarMode::ExactRational;
  ScalarMatrix quon_q_;
  int para_sign_ = 1;
  Scalar para_p_;
  Scalar two_over_p_;
  Scalar govorkov_y_;
  ContractionTable table_;
};

struct ContractionTerm {
  Scalar coeff;
  Word word;
};

/// Raw expansion of a_i acting on a creation word: one entry per
/// (hit position, rearrangement), before like terms are merged.
struct ContractionResult {
  std::vector<ContractionTerm> terms;
  FockVector combined() const;
};

/// a_i a†_{w1} ... a†_{wn} |0> expanded in (n-1)-particle words.
ContractionResult apply_annihilator(const AlgebraSpec& spec, Mode i, const Word& w);

/// Linear extension of apply_annihilator to vectors.
FockVector annihilate(const AlgebraSpec& spec, Mode i, const FockVector& v);

/// a_{u1} a_{u2} ... a_{uk} applied to v (rightmost factor acts first).
FockVector annihilate_string(const AlgebraSpec& spec, const Word& operator_order, const FockVector& v);

}  // namespace fockalg

#endif  // FOCKALG_ALGEBRA_HPP
