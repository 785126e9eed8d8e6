#include "fockalg/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fockalg {

Scalar vacuum_matrix_element(const AlgebraSpec& spec, const Word& bra, const Word& ket) {
  if (!same_multiset(bra, ket)) return spec.zero();
  FockVector v(ket, spec.one());
  for (Mode m : bra) {
    v = annihilate(spec, m, v);
    if (v.empty()) return spec.zero();
  }
  return v.coefficient(Word{}).to_mode(spec.scalar_mode());
}

GramMatrix quon_gram_direct(const AlgebraSpec& spec, const Word& multiset, const SectorLimits& limits) {
  if (spec.family() != Family::Quon && spec.family() != Family::Bose &&
      spec.family() != Family::Fermi)
    throw AlgebraError("direct Gram formula needs a quon-type algebra");
  GramMatrix g{enumerate_sector(multiset, limits), {}, spec.scalar_mode()};
  const std::size_t size = g.sector.size();
  const std::size_t n = g.sector.particles();
  g.entries = ScalarMatrix(size, size, spec.zero());

  std::vector<std::size_t> beta(n);
  for (std::size_t r = 0; r < size; ++r) {
    const Word& u = g.sector[r];
    for (std::size_t c = 0; c < size; ++c) {
      const Word& v = g.sector[c];
      Scalar sum = spec.zero();
      std::iota(beta.begin(), beta.end(), 0);
      do {
        bool preserves = true;
        for (std::size_t s = 0; s < n && preserves; ++s) preserves = u[s] == v[beta[s]];
        if (!preserves) continue;
        Scalar term = spec.one();
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = s + 1; t < n; ++t)
            if (beta[s] > beta[t]) term *= spec.q(u[s], u[t]);
        sum += term;
      } while (std::next_permutation(beta.begin(), beta.end()));
      g.entries(r, c) = sum;
    }
  }
  return g;
}

SectorQuotient::SectorQuotient(GramMatrix gram) : gram_(std::move(gram)) {
  echelon_ = row_reduce(gram_.entries);
}

std::vector<Word> SectorQuotient::pivot_words() const {
  std::vector<Word> out;
  for (std::size_t p : pivots()) out.push_back(sector()[p]);
  return out;
}

ScalarVector SectorQuotient::reduce(const FockVector& v) const {
  const Scalar zero = Scalar(0).to_mode(gram_.mode);
  ScalarVector out(rank(), zero);
  std::vector<std::size_t> pivot_row(sector().size(), SIZE_MAX);
  for (std::size_t r = 0; r < rank(); ++r) pivot_row[pivots()[r]] = r;

  for (const auto& [w, c] : v.terms()) {
    std::size_t col = sector().index_of(w);
    if (pivot_row[col] != SIZE_MAX) {
      out[pivot_row[col]] += c;
      continue;
    }
    // A free word equals sum_r R(r, f) e_{pivot r} modulo null states.
    for (std::size_t r = 0; r < rank(); ++r) {
      const Scalar& coef = echelon_.reduced(r, col);
      if (!(coef.is_exact() && coef.is_zero())) out[r] += c * coef;
    }
  }
  return out;
}

FockVector SectorQuotient::reduced_vector(const FockVector& v) const {
  ScalarVector coords = reduce(v);
  FockVector out;
  for (std::size_t r = 0; r < coords.size(); ++r) out.add(sector()[pivots()[r]], coords[r]);
  return out;
}

bool SectorQuotient::is_null(const FockVector& v) const {
  for (const Scalar& s : reduce(v))
    if (!s.is_zero()) return false;
  return true;
}

std::optional<ScalarVector> SectorQuotient::express(const FockVector& v,
                                                    const std::vector<Word>& targets) const {
  const Scalar zero = Scalar(0).to_mode(gram_.mode);
  ScalarMatrix lhs(rank(), targets.size(), zero);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    ScalarVector col = reduce(FockVector(targets[t], Scalar(1).to_mode(gram_.mode)));
    for (std::size_t r = 0; r < rank(); ++r) lhs(r, t) = col[r];
  }
  ScalarMatrix rhs(rank(), 1, zero);
  ScalarVector coords = reduce(v);
  for (std::size_t r = 0; r < rank(); ++r) rhs(r, 0) = coords[r];
  if (rank() == 0) return ScalarVector(targets.size(), zero);
  SolveResult sol = solve_particular(lhs, rhs);
  if (!sol.solution) return std::nullopt;
  ScalarVector out(targets.size(), zero);
  for (std::size_t t = 0; t < targets.size(); ++t) out[t] = (*sol.solution)(t, 0);
  return out;
}

GramEngine::GramEngine(AlgebraSpec spec, SectorLimits limits)
    : spec_(std::move(spec)), limits_(limits) {}

Scalar GramEngine::element_rec(const Word& bra, std::size_t from, const Word& ket) {
  if (from == bra.size()) return ket.empty() ? spec_.one() : spec_.zero();
  Word key_bra(bra.begin() + static_cast<std::ptrdiff_t>(from), bra.end());
  auto key = std::make_pair(std::move(key_bra), ket);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Scalar sum = spec_.zero();
  const FockVector contracted = apply_annihilator(spec_, bra[from], ket).combined();
  for (const auto& [w, c] : contracted.terms()) sum += c * element_rec(bra, from + 1, w);
  memo_.emplace(std::move(key), sum);
  return sum;
}

Scalar GramEngine::element(const Word& bra, const Word& ket) {
  if (!same_multiset(bra, ket)) return spec_.zero();
  return element_rec(bra, 0, ket);
}

GramMatrix GramEngine::matrix(const Word& multiset) {
  GramMatrix g{enumerate_sector(multiset, limits_), {}, spec_.scalar_mode()};
  const std::size_t size = g.sector.size();
  g.entries = ScalarMatrix(size, size, spec_.zero());
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) g.entries(r, c) = element(g.sector[r], g.sector[c]);
  return g;
}

const SectorQuotient& GramEngine::quotient(const Word& multiset) {
  Word key = sorted_multiset(multiset);
  auto it = quotients_.find(key);
  if (it == quotients_.end())
    it = quotients_.emplace(key, std::make_unique<SectorQuotient>(matrix(key))).first;
  return *it->second;
}

std::map<Word, FockVector> split_by_sector(const FockVector& v) {
  std::map<Word, FockVector> parts;
  for (const auto& [w, c] : v.terms()) parts[sorted_multiset(w)].add(w, c);
  return parts;
}

bool GramEngine::is_null(const FockVector& v) {
  for (const auto& [ms, part] : split_by_sector(v)) {
    if (ms.empty()) return false;  // vacuum component is never null
    if (!quotient(ms).is_null(part)) return false;
  }
  return true;
}

double GramEngine::residual_norm(const FockVector& v) {
  double worst = 0.0;
  for (const auto& [ms, part] : split_by_sector(v)) {
    if (ms.empty()) {
      worst = std::max(worst, std::abs(part.coefficient(Word{}).to_complex()));
      continue;
    }
    for (const Scalar& s : quotient(ms).reduce(part)) worst = std::max(worst, std::abs(s.to_complex()));
  }
  return worst;
}

GramMatrix gram_matrix(const AlgebraSpec& spec, const Word& multiset, const SectorLimits& limits) {
  return GramEngine(spec, limits).matrix(multiset);
}

}  // namespace fockalg
