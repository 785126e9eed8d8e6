#include "fockalg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fockalg {

std::size_t rank(const GramMatrix& gram) {
  if (gram.entries.empty()) return 0;
  return is_exact(gram.entries) ? bareiss_rank(gram.entries) : float_rank(gram.entries);
}

NullBasis null_space(const GramMatrix& gram) {
  NullBasis out{gram.sector, {}};
  for (const ScalarVector& k : kernel_basis(row_reduce(gram.entries))) {
    FockVector v;
    for (std::size_t c = 0; c < k.size(); ++c) v.add(gram.sector[c], k[c]);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

NullConsistencyReport check_null_consistency(const AlgebraSpec& spec, const NullBasis& basis,
                                             const SectorLimits& limits) {
  NullConsistencyReport report;
  GramEngine engine(spec, limits);
  for (std::size_t e = 0; e < basis.vectors.size(); ++e)
    for (Mode j : spec.modes()) {
      ++report.checks;
      FockVector image = annihilate(spec, j, basis.vectors[e]);
      if (!engine.is_null(image)) report.violations.push_back({e, j, std::move(image)});
    }
  return report;
}

std::string_view to_string(Definiteness d) {
  return d == Definiteness::PositiveSemidefinite ? "PositiveSemidefinite" : "Indefinite";
}

PositivityCertificate positivity(const GramMatrix& gram, double tol) {
  const ScalarMatrix& a = gram.entries;
  if (!is_hermitian(a, tol)) throw std::invalid_argument("positivity needs a Hermitian matrix");
  PositivityCertificate cert;
  if (a.empty()) return cert;

  if (!is_exact(a)) {
    cert.exact = false;
    cert.rank = float_rank(a, tol);
    std::vector<double> ev = hermitian_eigenvalues(a);
    double scale = std::max(1.0, std::max(std::abs(ev.front()), std::abs(ev.back())));
    cert.min_eigenvalue = ev.front();
    cert.verdict = ev.front() >= -tol * scale ? Definiteness::PositiveSemidefinite
                                              : Definiteness::Indefinite;
    return cert;
  }

  // For a Hermitian matrix the principal block on any maximal set of
  // independent columns is nonsingular, and A is PSD iff that block is PD.
  RowEchelon ech = row_reduce(a);
  cert.rank = ech.rank();
  if (cert.rank == 0) return cert;
  ScalarMatrix block = a.extract(ech.pivots, ech.pivots);
  cert.minors = leading_principal_minors(block);
  for (std::size_t k = 0; k < cert.minors.size(); ++k) {
    const Scalar& m = cert.minors[k];
    if (m.is_zero() || m.to_double() < 0) {
      cert.verdict = Definiteness::Indefinite;
      cert.minor_index = k;
      cert.witness_word = gram.sector[ech.pivots[k]];
      break;
    }
  }
  return cert;
}

CountReport count_states(const AlgebraSpec& spec, std::size_t d, std::size_t n,
                         const SectorLimits& limits) {
  if (d == 0 || d > spec.modes().size())
    throw std::invalid_argument("d = " + std::to_string(d) + " but the algebra has " +
                                std::to_string(spec.modes().size()) + " modes");
  CountReport report{d, n, 0, {}};
  if (n == 0) {
    report.total = 1;
    return report;
  }
  if (n > limits.max_particles)
    throw CapError("n = " + std::to_string(n) + " exceeds the particle cap " +
                   std::to_string(limits.max_particles));
  GramEngine engine(spec.restricted(d), limits);
  for (const Word& ms : enumerate_multisets(engine.spec().modes(), n)) {
    GramMatrix g = engine.matrix(ms);
    std::size_t r = rank(g);
    report.sectors.push_back({ms, g.sector.size(), r});
    report.total += r;
  }
  return report;
}

}  // namespace fockalg
