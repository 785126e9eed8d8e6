#include "fockalg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fockalg {

std::string_view to_string(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::Gamma:
      return "gamma";
    case ExpansionKind::Number:
      return "number";
    case ExpansionKind::Transition:
      return "transition";
  }
  return "?";
}

ExpansionKind parse_expansion_kind(std::string_view text) {
  for (auto k : {ExpansionKind::Gamma, ExpansionKind::Number, ExpansionKind::Transition})
    if (text == to_string(k)) return k;
  throw std::invalid_argument("unknown operator kind '" + std::string(text) + "'");
}

Scalar ExpansionCoefficients::coefficient(const Word& creation, const Word& annihilation) const {
  auto it = terms.find({creation, annihilation});
  return it == terms.end() ? Scalar(0) : it->second;
}

std::vector<NormalOrderedTerm> ExpansionCoefficients::term_list() const {
  std::vector<NormalOrderedTerm> out;
  for (const auto& [key, c] : terms) out.push_back({key.first, key.second, c});
  return out;
}

void ExpansionCoefficients::add(const Word& creation, const Word& annihilation, const Scalar& c) {
  if (c.is_exact() && c.is_zero()) return;
  auto [it, inserted] = terms.emplace(std::make_pair(creation, annihilation), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_exact() && it->second.is_zero()) terms.erase(it);
}

std::pair<Mode, Mode> annihilated_created(ExpansionKind kind, Mode i, Mode j) {
  switch (kind) {
    case ExpansionKind::Gamma:
      return {i, j};
    case ExpansionKind::Number:
      return {i, i};
    case ExpansionKind::Transition:
      return {j, i};
  }
  return {i, j};
}

FockVector target_action(const AlgebraSpec& spec, ExpansionKind kind, Mode i, Mode j, const Word& w) {
  FockVector out;
  switch (kind) {
    case ExpansionKind::Number: {
      long m = std::count(w.begin(), w.end(), i);
      if (m) out.add(w, Scalar(m).to_mode(spec.scalar_mode()));
      break;
    }
    case ExpansionKind::Transition:
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        if (w[pos] == j) {
          Word moved = w;
          moved[pos] = i;
          out.add(moved, spec.one());
        }
      break;
    case ExpansionKind::Gamma: {
      Word longer;
      longer.reserve(w.size() + 1);
      longer.push_back(j);
      longer.insert(longer.end(), w.begin(), w.end());
      out = apply_annihilator(spec, i, longer).combined();
      break;
    }
  }
  return out;
}

FockVector apply_expansion(const AlgebraSpec& spec, const ExpansionCoefficients& coeffs,
                           const FockVector& v, std::size_t max_order) {
  FockVector out;
  if (!(coeffs.constant.is_exact() && coeffs.constant.is_zero())) out = coeffs.constant * v;
  for (const auto& [key, c] : coeffs.terms) {
    const auto& [creation, annihilation] = key;
    if (annihilation.size() > max_order) continue;
    for (const auto& [w, cw] : v.terms()) {
      if (annihilation.size() > w.size()) continue;
      FockVector rest = annihilate_string(spec, annihilation, FockVector(w, cw));
      for (const auto& [r, cr] : rest.terms()) {
        Word full = creation;
        full.insert(full.end(), r.begin(), r.end());
        out.add(full, c * cr);
      }
    }
  }
  return out;
}

namespace {

Word creation_multiset(const Word& multiset, Mode annihilated, Mode created) {
  Word out = multiset;
  auto it = std::find(out.begin(), out.end(), annihilated);
  if (it == out.end()) throw std::logic_error("multiset lacks the annihilated mode");
  *it = created;
  return sorted_multiset(out);
}

void check_modes(const AlgebraSpec& spec, const std::vector<Mode>& modes) {
  for (Mode m : modes) spec.mode_index(m);
}

}  // namespace

SectorSystem build_sector_system(GramEngine& engine, const ExpansionCoefficients& lower,
                                 const Word& multiset, std::vector<Word> unknowns,
                                 std::vector<Word> creation_words) {
  const AlgebraSpec& spec = engine.spec();
  auto [ann, cre] = annihilated_created(lower.kind, lower.i, lower.j);
  const SectorQuotient& qb = engine.quotient(multiset);
  const Word cms = creation_multiset(sorted_multiset(multiset), ann, cre);
  const SectorQuotient& qc = engine.quotient(cms);

  SectorSystem sys;
  sys.annihilation = qb.sector();
  sys.unknowns = unknowns.empty() ? qb.pivot_words() : std::move(unknowns);
  sys.creation_words = creation_words.empty() ? qc.pivot_words() : std::move(creation_words);

  const std::size_t rows = sys.annihilation.size();
  sys.a = ScalarMatrix(rows, sys.unknowns.size(), spec.zero());
  sys.v = ScalarMatrix(rows, sys.creation_words.size(), spec.zero());
  for (std::size_t r = 0; r < rows; ++r) {
    const Word& w = sys.annihilation[r];
    for (std::size_t b = 0; b < sys.unknowns.size(); ++b) sys.a(r, b) = engine.element(sys.unknowns[b], w);

    FockVector defect = target_action(spec, lower.kind, lower.i, lower.j, w);
    defect -= apply_expansion(spec, lower, FockVector(w, spec.one()));
    for (const auto& [dw, dc] : defect.terms())
      if (sorted_multiset(dw) != cms)
        throw std::logic_error("defect of (" + format_word(w) + ") leaves the creation sector");
    auto coords = qc.express(defect, sys.creation_words);
    if (!coords)
      throw InconsistentSystemError("defect on state (" + format_word(w) +
                                        ") is not spanned by the chosen creation words",
                                    w);
    for (std::size_t c = 0; c < sys.creation_words.size(); ++c) sys.v(r, c) = (*coords)[c];
  }
  return sys;
}

ExpansionCoefficients solve_expansion(const AlgebraSpec& spec, ExpansionKind kind, Mode i, Mode j,
                                      std::size_t order, const std::vector<Mode>& probe_modes,
                                      const SectorLimits& limits) {
  if (kind == ExpansionKind::Number) j = i;
  check_modes(spec, {i, j});
  check_modes(spec, probe_modes);
  auto [ann, cre] = annihilated_created(kind, i, j);
  auto in_probe = [&](Mode m) {
    return std::find(probe_modes.begin(), probe_modes.end(), m) != probe_modes.end();
  };
  if (!in_probe(ann) || !in_probe(cre))
    throw std::invalid_argument("probe modes must contain the target modes");
  if (order == 0 || order > limits.max_particles)
    throw CapError("expansion order " + std::to_string(order) + " outside 1.." +
                   std::to_string(limits.max_particles));

  ExpansionCoefficients out;
  out.kind = kind;
  out.i = i;
  out.j = j;
  out.order = order;
  out.probe_modes = probe_modes;
  out.constant = (kind == ExpansionKind::Gamma && i == j) ? spec.one() : spec.zero();

  GramEngine engine(spec, limits);
  for (std::size_t k = 1; k <= order; ++k) {
    for (const Word& ms : enumerate_multisets(probe_modes, k)) {
      if (std::find(ms.begin(), ms.end(), ann) == ms.end()) continue;
      SectorSystem sys = build_sector_system(engine, out, ms);
      SectorSolveInfo info{ms, creation_multiset(ms, ann, cre), sys.unknowns.size(),
                           sys.creation_words.size(), 0};
      info.free_dimension = (sys.annihilation.size() - info.rank_annihilation) * info.rank_creation;
      out.sectors.push_back(info);
      if (sys.creation_words.empty()) continue;

      if (sys.unknowns.empty()) {
        for (std::size_t r = 0; r < sys.v.rows(); ++r)
          for (std::size_t c = 0; c < sys.v.cols(); ++c)
            if (!sys.v(r, c).is_zero())
              throw InconsistentSystemError("order " + std::to_string(k) + " defect on null state (" +
                                                format_word(sys.annihilation[r]) + ") is nonzero",
                                            sys.annihilation[r]);
        continue;
      }
      SolveResult sol = solve_particular(sys.a, sys.v);
      if (!sol.solution) {
        const Word& bad = sys.annihilation[*sol.inconsistent_row];
        throw InconsistentSystemError("order " + std::to_string(k) + " system for sector {" +
                                          format_word(ms) + "} is inconsistent at state (" +
                                          format_word(bad) + ")",
                                      bad);
      }
      for (std::size_t b = 0; b < sys.unknowns.size(); ++b)
        for (std::size_t c = 0; c < sys.creation_words.size(); ++c) {
          const Scalar& x = (*sol.solution)(b, c);
          if (x.is_zero()) continue;
          out.add(sys.creation_words[c], reversed(sys.unknowns[b]), x);
        }
    }
  }
  return out;
}

ActionReport verify_operator_action(const AlgebraSpec& spec, const ExpansionCoefficients& coeffs,
                                    const Word& multiset, const SectorLimits& limits) {
  ActionReport report;
  GramEngine engine(spec, limits);
  Sector sector = enumerate_sector(multiset, limits);
  for (const Word& w : sector.basis()) {
    FockVector r = apply_expansion(spec, coeffs, FockVector(w, spec.one()));
    r -= target_action(spec, coeffs.kind, coeffs.i, coeffs.j, w);
    ++report.checks;
    report.max_residual = std::max(report.max_residual, engine.residual_norm(r));
    if (!engine.is_null(r)) report.violations.push_back({w, std::move(r)});
  }
  return report;
}

ActionReport verify_operator_action(const AlgebraSpec& spec, const ExpansionCoefficients& coeffs,
                                    std::size_t n, const SectorLimits& limits) {
  ActionReport total;
  const std::vector<Mode>& modes = coeffs.probe_modes.empty() ? spec.modes() : coeffs.probe_modes;
  for (const Word& ms : enumerate_multisets(modes, n)) {
    ActionReport r = verify_operator_action(spec, coeffs, ms, limits);
    total.checks += r.checks;
    total.max_residual = std::max(total.max_residual, r.max_residual);
    for (auto& v : r.violations) total.violations.push_back(std::move(v));
  }
  return total;
}

// ---- quons -----------------------------------------------------------------

namespace {

void add_term(AnnihilatorPolynomial& p, const Word& w, const Scalar& c) {
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) it->second += c;
  if (it->second.is_exact() && it->second.is_zero()) p.erase(it);
}

/// Gram matrix of the orderings of `labels` with every position treated as a
/// distinct particle; rows and columns follow std::next_permutation order of
/// position indices, so the identity ordering comes first.
ScalarMatrix labeled_quon_block(const AlgebraSpec& spec, const Word& labels,
                                std::vector<std::vector<std::size_t>>& orderings) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  orderings.clear();
  do orderings.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  // position_of[o][alpha] = where particle alpha sits in ordering o
  std::vector<std::vector<std::size_t>> position_of(orderings.size(), std::vector<std::size_t>(n));
  for (std::size_t o = 0; o < orderings.size(); ++o)
    for (std::size_t pos = 0; pos < n; ++pos) position_of[o][orderings[o][pos]] = pos;

  ScalarMatrix a(orderings.size(), orderings.size(), spec.zero());
  for (std::size_t r = 0; r < orderings.size(); ++r)
    for (std::size_t c = 0; c < orderings.size(); ++c) {
      Scalar prod = spec.one();
      for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be)
          if (al != be && position_of[r][al] < position_of[r][be] &&
              position_of[c][al] > position_of[c][be])
            prod *= spec.q(labels[al], labels[be]);
      a(r, c) = prod;
    }
  return a;
}

}  // namespace

AnnihilatorPolynomial quon_Y(const AlgebraSpec& spec, Mode k, const Word& chain) {
  if (chain.empty()) throw std::invalid_argument("Y needs a non-empty index chain");
  check_modes(spec, chain);
  AnnihilatorPolynomial y;
  add_term(y, {k, chain[0]}, spec.one());
  add_term(y, {chain[0], k}, -spec.q(chain[0], k));
  for (std::size_t n = 1; n < chain.size(); ++n) {
    const Mode in = chain[n];
    Scalar factor = spec.q(in, k);
    for (std::size_t t = 0; t < n; ++t) factor *= spec.q(in, chain[t]);
    AnnihilatorPolynomial next;
    for (const auto& [w, c] : y) {
      Word right = w;
      right.push_back(in);
      add_term(next, right, c);
      Word left{in};
      left.insert(left.end(), w.begin(), w.end());
      add_term(next, left, -(factor * c));
    }
    y = std::move(next);
  }
  return y;
}

ExpansionCoefficients quon_number_operator(const AlgebraSpec& spec, Mode k, std::size_t max_chain,
                                           double max_condition) {
  if (spec.family() != Family::Quon && spec.family() != Family::Bose &&
      spec.family() != Family::Fermi)
    throw AlgebraError("the Y construction needs a quon-type algebra");
  spec.mode_index(k);

  ExpansionCoefficients out;
  out.kind = ExpansionKind::Number;
  out.i = out.j = k;
  out.order = max_chain + 1;
  out.probe_modes = spec.modes();
  out.constant = spec.zero();
  out.add({k}, {k}, spec.one());

  const auto& modes = spec.modes();
  for (std::size_t n = 1; n <= max_chain; ++n) {
    // every tuple (i1..in) over the modes
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      Word chain(n);
      for (std::size_t t = 0; t < n; ++t) chain[t] = modes[idx[t]];
      Word labels{k};
      labels.insert(labels.end(), chain.begin(), chain.end());

      std::vector<std::vector<std::size_t>> orderings;
      ScalarMatrix block = labeled_quon_block(spec, labels, orderings);
      if (!block.empty() && !is_exact(block) && condition_number(block) > max_condition)
        throw std::domain_error("labeled Gram block for chain (" + format_word(chain) +
                                ") is ill-conditioned; coefficients diverge");
      auto inv = inverse(block);
      if (!inv)
        throw std::domain_error("labeled Gram block for chain (" + format_word(chain) +
                                ") is singular");

      AnnihilatorPolynomial y = quon_Y(spec, k, chain);
      // orderings that keep particle 0 (mode k) in front: (k, pi(i))
      for (std::size_t o = 0; o < orderings.size(); ++o) {
        if (orderings[o][0] != 0) continue;
        Word permuted(n);
        for (std::size_t t = 0; t < n; ++t) permuted[t] = labels[orderings[o][t + 1]];
        const Scalar& weight = (*inv)(0, o);
        if (weight.is_zero()) continue;
        AnnihilatorPolynomial yp = quon_Y(spec, k, permuted);
        for (const auto& [s, cs] : yp)
          for (const auto& [t, ct] : y) out.add(reversed(s), t, cs.conj() * ct * weight);
      }

      std::size_t pos = n;
      while (pos > 0 && idx[pos - 1] + 1 == modes.size()) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  return out;
}

}  // namespace fockalg
