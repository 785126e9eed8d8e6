#ifndef FOCKALG_RELATIONS_HPP
#define FOCKALG_RELATIONS_HPP

#include <string>
#include <vector>

#include "fockalg/gram.hpp"

namespace fockalg {

struct RelationViolation {
  Mode i = 0, j = 0, k = 0;  // k unused for bilinear relations
  Word word;
  FockVector residual;
};

/// Outcome of applying both sides of the family's defining relation to every
/// basis word of a sector. Residuals are taken modulo null states, so an
/// exact algebra reports max_residual == 0.
struct RelationReport {
  std::string relation;
  std::size_t checks = 0;
  double max_residual = 0.0;
  std::vector<RelationViolation> violations;
  bool applicable = true;
  bool holds() const { return violations.empty(); }
};

RelationReport check_defining_relation(const AlgebraSpec& spec, const Word& multiset,
                                       const SectorLimits& limits = SectorLimits::from_environment());

}  // namespace fockalg

#endif  // FOCKALG_RELATIONS_HPP
