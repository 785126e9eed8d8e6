#ifndef FOCKALG_ANALYSIS_HPP
#define FOCKALG_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fockalg/gram.hpp"

namespace fockalg {

/// Exact rank (Bareiss) in exact mode, SVD rank with relative threshold
/// 1e-9 in float mode.
std::size_t rank(const GramMatrix& gram);

struct NullBasis {
  Sector sector;
  std::vector<FockVector> vectors;
};

/// Kernel of the Gram matrix as combinations of sector words. One vector per
/// free column of the echelon form.
NullBasis null_space(const GramMatrix& gram);

struct NullViolation {
  std::size_t vector_index = 0;
  Mode mode = 0;
  FockVector image;
};

struct NullConsistencyReport {
  std::size_t checks = 0;
  std::vector<NullViolation> violations;
  bool consistent() const { return violations.empty(); }
};

/// Every contraction a_j E of a null vector E must again be null.
NullConsistencyReport check_null_consistency(const AlgebraSpec& spec, const NullBasis& basis,
                                             const SectorLimits& limits = SectorLimits::from_environment());

enum class Definiteness { PositiveSemidefinite, Indefinite };
std::string_view to_string(Definiteness d);

struct PositivityCertificate {
  Definiteness verdict = Definiteness::PositiveSemidefinite;
  bool exact = true;
  std::size_t rank = 0;
  /// Exact route: leading principal minors of the pivot block.
  ScalarVector minors;
  /// Exact route, Indefinite only: position in `minors` of the first
  /// non-positive minor and the sector word it ends on.
  std::optional<std::size_t> minor_index;
  std::optional<Word> witness_word;
  /// Float route: smallest eigenvalue.
  std::optional<double> min_eigenvalue;
};

/// Throws std::invalid_argument on a non-Hermitian matrix.
PositivityCertificate positivity(const GramMatrix& gram, double tol = kDefaultTolerance);

struct SectorCount {
  Word multiset;
  std::size_t size = 0;
  std::size_t rank = 0;
};

struct CountReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t total = 0;
  std::vector<SectorCount> sectors;
};

/// W(n, d): sum of sector ranks over all n-element multisets of the first d
/// modes of the spec.
CountReport count_states(const AlgebraSpec& spec, std::size_t d, std::size_t n,
                         const SectorLimits& limits = SectorLimits::from_environment());

}  // namespace fockalg

#endif  // FOCKALG_ANALYSIS_HPP
