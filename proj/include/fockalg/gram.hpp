#ifndef FOCKALG_GRAM_HPP
#define FOCKALG_GRAM_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fockalg/algebra.hpp"
#include "fockalg/fock.hpp"
#include "fockalg/linalg.hpp"

namespace fockalg {

/// Sector Gram matrix: entries(r, c) = <w_r | w_c>, where the bra word w_r
/// is read as the annihilator string a_{w_r[0]} applied first.
struct GramMatrix {
  Sector sector;
  ScalarMatrix entries;
  ScalarMode mode = ScalarMode::ExactRational;
};

/// <bra|ket> with no caching. Zero unless the two words share a multiset.
Scalar vacuum_matrix_element(const AlgebraSpec& spec, const Word& bra, const Word& ket);

/// Closed-form quon Gram matrix: sum over label-preserving bijections of
/// products of q over inverted pairs.
GramMatrix quon_gram_direct(const AlgebraSpec& spec, const Word& multiset,
                            const SectorLimits& limits = SectorLimits::from_environment());

/// Modding a sector out by its null states. Words outside the pivot set are
/// rewritten in terms of pivot words; a vector is null iff its reduction is 0.
class SectorQuotient {
 public:
  SectorQuotient(GramMatrix gram);

  const Sector& sector() const { return gram_.sector; }
  const GramMatrix& gram() const { return gram_; }
  const RowEchelon& echelon() const { return echelon_; }
  std::size_t rank() const { return echelon_.rank(); }
  /// Basis positions of the independent (pivot) words.
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }
  std::vector<Word> pivot_words() const;

  /// Coordinates on the pivot words. Every word of v must lie in the sector.
  ScalarVector reduce(const FockVector& v) const;
  FockVector reduced_vector(const FockVector& v) const;
  bool is_null(const FockVector& v) const;
  /// Coefficients c with v - sum_t c_t targets[t] null, or nullopt when v is
  /// not in the span of the targets modulo null states.
  std::optional<ScalarVector> express(const FockVector& v, const std::vector<Word>& targets) const;

 private:
  GramMatrix gram_;
  RowEchelon echelon_;
};

/// Gram matrices with memoized sub-contractions and cached quotients.
/// Not thread-safe; use one engine per thread.
class GramEngine {
 public:
  explicit GramEngine(AlgebraSpec spec, SectorLimits limits = SectorLimits::from_environment());

  const AlgebraSpec& spec() const { return spec_; }
  const SectorLimits& limits() const { return limits_; }

  Scalar element(const Word& bra, const Word& ket);
  GramMatrix matrix(const Word& multiset);
  const SectorQuotient& quotient(const Word& multiset);

  /// True when every sector component of v is a null state.
  bool is_null(const FockVector& v);
  /// Largest |coordinate| of v after reduction modulo null states.
  double residual_norm(const FockVector& v);

 private:
  Scalar element_rec(const Word& bra, std::size_t from, const Word& ket);

  AlgebraSpec spec_;
  SectorLimits limits_;
  std::map<std::pair<Word, Word>, Scalar> memo_;
  std::map<Word, std::unique_ptr<SectorQuotient>> quotients_;
};

GramMatrix gram_matrix(const AlgebraSpec& spec, const Word& multiset,
                       const SectorLimits& limits = SectorLimits::from_environment());

/// Splits v by multiset.
std::map<Word, FockVector> split_by_sector(const FockVector& v);

}  // namespace fockalg

#endif  // FOCKALG_GRAM_HPP
