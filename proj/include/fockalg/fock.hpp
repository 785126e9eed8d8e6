#ifndef FOCKALG_FOCK_HPP
#define FOCKALG_FOCK_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fockalg/scalar.hpp"

namespace fockalg {

using Mode = int;

/// Creation word: indices (i1, ..., in) of the state a†_{i1} ... a†_{in} |0>.
using Word = std::vector<Mode>;

std::string format_word(const Word& w);
/// Parses "1,2,1"; the empty string is the vacuum word.
Word parse_word(std::string_view text);

Word sorted_multiset(Word w);
Word reversed(Word w);
bool same_multiset(const Word& a, const Word& b);

std::size_t total_number(const Word& w);
std::map<Mode, std::size_t> mode_counts(const Word& w);

/// Raised when an enumeration would exceed the configured size caps.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SectorLimits {
  std::size_t max_particles = 6;
  std::size_t max_basis = 720;

  /// Defaults, with max_basis overridden by FOCKALG_MAX_BASIS when set.
  static SectorLimits from_environment();
};

/// n! / (m1! ... ms!) for the multiset underlying `w`, saturating at SIZE_MAX.
std::size_t multinomial(const Word& w);

/// All distinct orderings of a fixed multiset of modes, in lexicographic order.
class Sector {
 public:
  Sector() = default;

  const Word& multiset() const { return multiset_; }
  const std::vector<Word>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t particles() const { return multiset_.size(); }
  const Word& operator[](std::size_t k) const { return basis_[k]; }

  /// Position of `w` in the basis; throws std::out_of_range if absent.
  std::size_t index_of(const Word& w) const;
  bool contains(const Word& w) const;

  std::string label() const { return "{" + format_word(multiset_) + "}"; }

  friend Sector enumerate_sector(const Word& multiset, const SectorLimits& limits);

 private:
  Word multiset_;
  std::vector<Word> basis_;
  std::map<Word, std::size_t> index_;
};

Sector enumerate_sector(const Word& multiset, const SectorLimits& limits = {});

/// All multisets of size n drawn from `modes` (non-decreasing in mode order).
std::vector<Word> enumerate_multisets(const std::vector<Mode>& modes, std::size_t n);

/// Finite combination of creation words with scalar coefficients. Zero
/// coefficients are pruned on insertion.
class FockVector {
 public:
  using Terms = std::map<Word, Scalar>;

  FockVector() = default;
  explicit FockVector(const Word& w, Scalar coeff = Scalar(1)) { add(w, std::move(coeff)); }

  void add(const Word& w, const Scalar& coeff);
  Scalar coefficient(const Word& w) const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Multisets present among the terms.
  std::vector<Word> multisets() const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& s);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& s, FockVector v) { return v *= s; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

/// a†_j applied on the left: prepends j to every word.
FockVector create(Mode j, const FockVector& v);

}  // namespace fockalg

#endif  // FOCKALG_FOCK_HPP
