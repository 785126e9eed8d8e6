#ifndef FOCKALG_OPERATORS_HPP
#define FOCKALG_OPERATORS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockalg/gram.hpp"

namespace fockalg {

/// Gamma: a_i a+_j.  Number: N_i.  Transition: N_ij with [N_ij, a+_k] = delta_jk a+_i.
enum class ExpansionKind { Gamma, Number, Transition };

std::string_view to_string(ExpansionKind k);
ExpansionKind parse_expansion_kind(std::string_view text);

/// The operator a+_{c[0]} ... a+_{c[m-1]} a_{u[0]} ... a_{u[m-1]}, where
/// `annihilation` is written left to right (its last letter acts first).
struct NormalOrderedTerm {
  Word creation;
  Word annihilation;
  Scalar coeff;
};

struct SectorSolveInfo {
  Word multiset;        // annihilation-side sector
  Word creation;        // creation-side sector
  std::size_t rank_annihilation = 0;
  std::size_t rank_creation = 0;
  /// Dimension of the solution set modulo null states (0 = unique).
  std::size_t free_dimension = 0;
};

/// Normal-ordered expansion of one operator, truncated at `order`.
struct ExpansionCoefficients {
  ExpansionKind kind = ExpansionKind::Number;
  Mode i = 0;
  Mode j = 0;
  std::size_t order = 0;
  std::vector<Mode> probe_modes;
  /// Coefficient of the identity (delta_ij for Gamma, otherwise 0).
  Scalar constant;
  std::map<std::pair<Word, Word>, Scalar> terms;  // (creation, annihilation) -> coeff
  std::vector<SectorSolveInfo> sectors;

  Scalar coefficient(const Word& creation, const Word& annihilation) const;
  std::vector<NormalOrderedTerm> term_list() const;
  void add(const Word& creation, const Word& annihilation, const Scalar& c);
};

/// Raised when V is not in the range of A: the truncation cannot reproduce
/// the operator on `state`.
class InconsistentSystemError : public std::runtime_error {
 public:
  InconsistentSystemError(const std::string& what, Word state)
      : std::runtime_error(what), state_(std::move(state)) {}
  const Word& state() const { return state_; }

 private:
  Word state_;
};

/// Modes annihilated and created by the target operator.
std::pair<Mode, Mode> annihilated_created(ExpansionKind kind, Mode i, Mode j);

/// Exact action of the target operator on a basis word.
FockVector target_action(const AlgebraSpec& spec, ExpansionKind kind, Mode i, Mode j, const Word& w);

/// Action of the truncated expansion. Terms longer than max_order are skipped.
FockVector apply_expansion(const AlgebraSpec& spec, const ExpansionCoefficients& coeffs,
                           const FockVector& v, std::size_t max_order = SIZE_MAX);

/// Solves A X = V order by order. For each multiset M of size k over the
/// probe modes containing the annihilated mode, the unknowns are the
/// coefficients of a+...(creation sector) a...(M) and V is the defect of the
/// order k-1 truncation on the words of M, reduced modulo null states. Free
/// variables are set to zero.
ExpansionCoefficients solve_expansion(const AlgebraSpec& spec, ExpansionKind kind, Mode i, Mode j,
                                      std::size_t order, const std::vector<Mode>& probe_modes,
                                      const SectorLimits& limits = SectorLimits::from_environment());

/// The order k system restricted to one annihilation multiset: rows are
/// all words w of the sector, columns the independent words b.
struct SectorSystem {
  Sector annihilation;
  std::vector<Word> unknowns;        // independent annihilation-side words b
  std::vector<Word> creation_words;  // coordinates of V and X
  ScalarMatrix a;                    // a(w, b) = <b|w>
  ScalarMatrix v;                    // v(w, c)
};

/// Builds the system for `multiset` given the lower-order expansion. When
/// `unknowns` / `creation_words` are empty the pivot words are used.
SectorSystem build_sector_system(GramEngine& engine, const ExpansionCoefficients& lower,
                                 const Word& multiset, std::vector<Word> unknowns = {},
                                 std::vector<Word> creation_words = {});

struct ActionViolation {
  Word word;
  FockVector residual;
};

struct ActionReport {
  std::size_t checks = 0;
  double max_residual = 0.0;
  std::vector<ActionViolation> violations;
  bool exact_zero() const { return violations.empty(); }
};

/// Applies the expansion to every word of the sector and compares with the
/// target action modulo null states.
ActionReport verify_operator_action(const AlgebraSpec& spec, const ExpansionCoefficients& coeffs,
                                    const Word& multiset,
                                    const SectorLimits& limits = SectorLimits::from_environment());

/// Same, over all n-particle sectors of the probe modes.
ActionReport verify_operator_action(const AlgebraSpec& spec, const ExpansionCoefficients& coeffs,
                                    std::size_t n,
                                    const SectorLimits& limits = SectorLimits::from_environment());

// ---- quons -----------------------------------------------------------------

/// Linear combination of annihilator strings, each written left to right.
using AnnihilatorPolynomial = std::map<Word, Scalar>;

/// Y_{k i1} = a_k a_{i1} - q_{i1 k} a_{i1} a_k, and
/// Y_{k i1..in} = Y_{k i1..i(n-1)} a_{in} - q_{in k} q_{in i1} ... q_{in i(n-1)} a_{in} Y_{k i1..i(n-1)}.
AnnihilatorPolynomial quon_Y(const AlgebraSpec& spec, Mode k, const Word& chain);

/// N_k built from the Y operators up to chains of length max_chain. In float
/// mode, throws when a labeled Gram block has condition number above 1e12.
ExpansionCoefficients quon_number_operator(const AlgebraSpec& spec, Mode k, std::size_t max_chain,
                                           double max_condition = 1e12);

}  // namespace fockalg

#endif  // FOCKALG_OPERATORS_HPP
