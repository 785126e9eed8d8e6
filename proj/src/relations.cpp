#include "fockalg/relations.hpp"

namespace fockalg {

namespace {

FockVector a(const AlgebraSpec& s, Mode m, const FockVector& v) { return annihilate(s, m, v); }
FockVector ad(Mode m, const FockVector& v) { return create(m, v); }

}  // namespace

RelationReport check_defining_relation(const AlgebraSpec& spec, const Word& multiset,
                                       const SectorLimits& limits) {
  RelationReport report;
  const Sector sector = enumerate_sector(multiset, limits);
  GramEngine engine(spec, limits);
  const auto& modes = spec.modes();

  auto record = [&](Mode i, Mode j, Mode k, const Word& w, const FockVector& r) {
    ++report.checks;
    double norm = engine.residual_norm(r);
    report.max_residual = std::max(report.max_residual, norm);
    if (!engine.is_null(r)) report.violations.push_back({i, j, k, w, r});
  };

  switch (spec.family()) {
    case Family::Bose:
    case Family::Fermi:
    case Family::Quon:
      report.relation = "a_i a+_j - q_ij a+_j a_i = delta_ij";
      for (const Word& w : sector.basis()) {
        FockVector v(w, spec.one());
        for (Mode i : modes)
          for (Mode j : modes) {
            FockVector r = a(spec, i, ad(j, v)) - spec.q(i, j) * ad(j, a(spec, i, v));
            if (i == j) r -= v;
            record(i, j, 0, w, r);
          }
      }
      break;
    case Family::Para: {
      report.relation = "[a_i a+_j + q a+_j a_i, a_k] = -(2/p) q delta_jk a_i";
      const Scalar q(spec.para_sign());
      for (const Word& w : sector.basis()) {
        FockVector v(w, spec.one());
        for (Mode i : modes)
          for (Mode j : modes)
            for (Mode k : modes) {
              auto op = [&](const FockVector& x) {
                return a(spec, i, ad(j, x)) + q * ad(j, a(spec, i, x));
              };
              FockVector r = op(a(spec, k, v)) - a(spec, k, op(v));
              if (j == k) r += (spec.two_over_p() * q) * a(spec, i, v);
              record(i, j, k, w, r);
            }
      }
      break;
    }
    case Family::Govorkov:
      report.relation = "[a_i a+_j, a_k] = y delta_jk a_i";
      for (const Word& w : sector.basis()) {
        FockVector v(w, spec.one());
        for (Mode i : modes)
          for (Mode j : modes)
            for (Mode k : modes) {
              auto op = [&](const FockVector& x) { return a(spec, i, ad(j, x)); };
              FockVector r = op(a(spec, k, v)) - a(spec, k, op(v));
              if (j == k) r -= spec.govorkov_y() * a(spec, i, v);
              record(i, j, k, w, r);
            }
      }
      break;
    case Family::Custom:
      report.relation = "none (custom contraction table)";
      report.applicable = false;
      break;
  }
  return report;
}

}  // namespace fockalg
