#ifndef FOCKALG_FIXTURES_HPP
#define FOCKALG_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fockalg/operators.hpp"

namespace fockalg {

/// PASS: computation agrees with the published value. FAIL: a value the
/// library is expected to reproduce does not. ERRATA: the published value
/// disagrees with exact computation; findings list the differences.
enum class FixtureStatus { Pass, Fail, Errata };

std::string_view to_string(FixtureStatus s);

struct FixtureResult {
  std::string name;
  std::string parameters;
  FixtureStatus status = FixtureStatus::Pass;
  std::vector<std::string> findings;
};

/// Basis order of the published three-mode matrices: 123, 213, 132, 231, 312, 321.
const std::vector<Word>& published_basis();

/// Published para Gram matrix on {1,2,3} in published_basis() order.
ScalarMatrix published_para_gram(int q, const Scalar& p);

/// One printed matrix entry. `value` is empty when the printed symbol has no
/// meaning in context.
struct PrintedEntry {
  std::optional<Scalar> value;
  std::string text;
};

/// Published Govorkov matrix display, transcribed as printed.
std::vector<std::vector<PrintedEntry>> published_govorkov_display(const Scalar& y);

/// A printed solution set of the order-k system A X = V.
struct PublishedSolution {
  std::string name{};
  std::string parameters{};
  AlgebraSpec spec;
  ExpansionKind kind = ExpansionKind::Number;
  Mode i = 1;
  Mode j = 1;
  std::vector<Word> unknowns{};      // rows and columns of A
  std::vector<FockVector> x{};       // X for each unknown
  std::optional<std::vector<FockVector>> v{};  // printed V, same rows

  std::size_t order() const { return unknowns.front().size(); }
};

struct SolutionCheck {
  /// A X - V per unknown, reduced modulo null states.
  std::vector<FockVector> residual;
  /// Printed V - computed V per unknown, reduced modulo null states.
  std::optional<std::vector<FockVector>> v_difference;

  bool residual_zero() const;
  bool v_matches() const;
};

/// Residual of a printed solution. V is the defect of the solved order k-1
/// expansion on each unknown word.
SolutionCheck validate_published_solution(const PublishedSolution& s,
                                           const SectorLimits& limits = SectorLimits::from_environment());

// Printed solution sets. Each throws std::domain_error when the parameter
// hits a zero of a printed denominator.
PublishedSolution para_bose_number_solution(const Scalar& p);
/// Para-Fermi set obtained by the printed substitution rule, applied literally.
PublishedSolution para_fermi_number_solution(const Scalar& p);
PublishedSolution para_transition_solution(int q, const Scalar& p);
PublishedSolution govorkov_number_solution(const Scalar& y);

FixtureResult check_published_solution(const PublishedSolution& s,
                                       const SectorLimits& limits = SectorLimits::from_environment());

/// Runs every published fixture: Gram matrices, rank claims, second-order
/// coefficients and printed solution sets. Order is fixed.
std::vector<FixtureResult> run_published_fixtures(const SectorLimits& limits = SectorLimits::from_environment());

/// Plain-text report: one status line per fixture, findings indented below.
std::string format_fixture_report(const std::vector<FixtureResult>& results);

}  // namespace fockalg

#endif  // FOCKALG_FIXTURES_HPP
