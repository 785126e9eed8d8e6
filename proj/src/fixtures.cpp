#include "fockalg/fixtures.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "fockalg/analysis.hpp"

namespace fockalg {

namespace {

const std::vector<Mode> kModes = {1, 2, 3};

Scalar num(long n, long d = 1) { return Scalar::rational(n, d); }

FockVector combo(std::initializer_list<std::pair<Word, Scalar>> terms) {
  FockVector v;
  for (const auto& [w, c] : terms) v.add(w, c);
  return v;
}

void require_nonzero(const Scalar& den, const std::string& what, const std::string& at) {
  if (den.is_zero()) throw std::domain_error("printed denominator " + what + " vanishes at " + at);
}

std::string label(const Word& w) {
  std::string s = "X";
  for (Mode m : w) s += std::to_string(m);
  return s;
}

std::string param_text(const std::string& name, const Scalar& v) { return name + "=" + v.str(); }

}  // namespace

std::string_view to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::Pass: return "PASS";
    case FixtureStatus::Fail: return "FAIL";
    case FixtureStatus::Errata: return "ERRATA";
  }
  return "?";
}

const std::vector<Word>& published_basis() {
  static const std::vector<Word> basis = {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  return basis;
}

ScalarMatrix published_para_gram(int q, const Scalar& p) {
  Scalar t = num(2) / p;
  Scalar x = num(q) * (t - num(1));
  Scalar z = num(q) * t - num(q * q * q) * (t - num(1)) * (t - num(1));
  Scalar one = num(1), x2 = x * x;
  const std::vector<std::vector<Scalar>> rows = {
      {one, x, x, x2, x2, z}, {x, one, x2, x, z, x2}, {x, x2, one, z, x, x2},
      {x2, x, z, one, x2, x}, {x2, z, x, x2, one, x}, {z, x2, x2, x, x, one}};
  ScalarMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<std::vector<PrintedEntry>> published_govorkov_display(const Scalar& y) {
  PrintedEntry one{num(1), "1"}, m{-y, "-y"}, p{y, "y"}, y2{y * y, "y^2"}, z{std::nullopt, "z"};
  return {{one, m, m, y2, y2, m}, {m, one, y2, m, m, y2}, {m, y2, one, z, p, y2},
          {y2, m, m, one, y2, m}, {y2, m, m, y2, one, m}, {m, y2, y2, m, m, one}};
}

bool SolutionCheck::residual_zero() const {
  for (const auto& r : residual)
    if (!r.empty()) return false;
  return true;
}

bool SolutionCheck::v_matches() const {
  if (!v_difference) return true;
  for (const auto& r : *v_difference)
    if (!r.empty()) return false;
  return true;
}

SolutionCheck validate_published_solution(const PublishedSolution& s, const SectorLimits& limits) {
  if (s.unknowns.empty() || s.x.size() != s.unknowns.size() || (s.v && s.v->size() != s.unknowns.size()))
    throw std::invalid_argument("published solution '" + s.name + "' has mismatched rows");
  const std::size_t k = s.order();
  ExpansionCoefficients lower = solve_expansion(s.spec, s.kind, s.i, s.j, k - 1, s.spec.modes(), limits);
  GramEngine engine(s.spec, limits);

  Word created = s.unknowns.front();
  auto [ann, cre] = annihilated_created(s.kind, s.i, s.j);
  for (Mode& m : created)
    if (m == ann) {
      m = cre;
      break;
    }
  const SectorQuotient& qc = engine.quotient(created);

  SolutionCheck out;
  if (s.v) out.v_difference.emplace();
  for (const Word& w : s.unknowns) {
    FockVector defect = target_action(s.spec, s.kind, s.i, s.j, w);
    defect -= apply_expansion(s.spec, lower, FockVector(w, s.spec.one()));
    FockVector lhs;
    for (std::size_t c = 0; c < s.unknowns.size(); ++c) lhs += engine.element(s.unknowns[c], w) * s.x[c];
    out.residual.push_back(qc.reduced_vector(lhs - defect));
  }
  if (s.v)
    for (std::size_t r = 0; r < s.unknowns.size(); ++r) {
      FockVector defect = target_action(s.spec, s.kind, s.i, s.j, s.unknowns[r]);
      defect -= apply_expansion(s.spec, lower, FockVector(s.unknowns[r], s.spec.one()));
      out.v_difference->push_back(qc.reduced_vector((*s.v)[r] - defect));
    }
  return out;
}

namespace {

// Para-Bose order-3 set in y = 2/p - 1; s1 scales every v1 coefficient.
std::vector<FockVector> para_number_x(const Scalar& y, const Scalar& s1) {
  const Word v1{1, 2, 3}, v2{2, 1, 3}, v3{1, 3, 2}, v6{3, 2, 1};
  Scalar one = num(1), y2 = y * y, y3 = y2 * y;
  Scalar d1 = num(2) * y - y2 - y3, d2 = num(-2) + y + y2;
  std::string at = param_text("y", y);
  require_nonzero(d1, "2y - y^2 - y^3", at);
  require_nonzero(d2, "-2 + y + y^2", at);
  require_nonzero(y, "y", at);
  FockVector x123 = combo({{v1, -(one + num(3) * y + y2 + y3) * s1}, {v2, y2 - y}, {v3, y + num(2) * y2},
                           {v6, one + num(2) * y}});
  FockVector x213 = combo({{v1, (one - y) * s1}, {v2, num(2)}, {v3, -y}, {v6, num(-1)}});
  FockVector x132 = combo({{v1, -(one + num(2) * y) * s1}, {v2, -y}, {v3, y + y2}, {v6, one + y}});
  x123 *= one / d1;
  x213 *= one / d2;
  x132 *= one / d2;
  FockVector x321 = (one / y) * x132;
  return {x123, x213, x132, x321};
}

std::vector<FockVector> para_number_v(int q, const Scalar& p) {
  const Word v1{1, 2, 3}, v2{2, 1, 3}, v3{1, 3, 2}, v6{3, 2, 1};
  Scalar t = num(2) / p;
  return {FockVector(),
          combo({{v1, -num(q) * t}, {v2, -t}, {v3, t * (t - num(1))}, {v6, t}}),
          FockVector(),
          combo({{v1, -num(q) * t * t}, {v3, t * (t - num(1))}, {v6, t}})};
}

PublishedSolution para_number_base(int q, const Scalar& p) {
  PublishedSolution s{.spec = AlgebraSpec::para(kModes, q, p)};
  s.parameters = param_text("p", p);
  s.kind = ExpansionKind::Number;
  s.i = s.j = 1;
  s.unknowns = {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
  s.v = para_number_v(q, p);
  return s;
}

}  // namespace

PublishedSolution para_bose_number_solution(const Scalar& p) {
  PublishedSolution s = para_number_base(1, p);
  s.name = "para-Bose number N1 order 3 published solution set";
  s.x = para_number_x(num(2) / p - num(1), num(1));
  return s;
}

PublishedSolution para_fermi_number_solution(const Scalar& p) {
  PublishedSolution s = para_number_base(-1, p);
  s.name = "para-Fermi number N1 order 3 by published substitution";
  s.x = para_number_x(-(num(2) / p - num(1)), num(-1));
  s.x[0] *= num(-1);
  return s;
}

PublishedSolution para_transition_solution(int q, const Scalar& p) {
  if (q != 1 && q != -1) throw std::invalid_argument("para sign must be +1 or -1");
  const Word w1{1, 1, 3}, w2{1, 3, 1}, w3{3, 1, 1};
  PublishedSolution s{.spec = AlgebraSpec::para(kModes, q, p)};
  s.name = q == 1 ? "para-Bose transition N12 order 3 published solution set"
                  : "para-Fermi transition N12 order 3 published solution set";
  s.parameters = param_text("p", p);
  s.kind = ExpansionKind::Transition;
  s.i = 1;
  s.j = 2;
  s.unknowns = {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};

  Scalar one = num(1), x = num(q) * (num(2) / p - one), x2 = x * x, x3 = x2 * x, qs = num(q);
  std::string at = param_text("x", x);
  s.v = std::vector<FockVector>{
      combo({{w1, -(qs + x)}, {w2, x * (qs + x)}}), FockVector(),
      combo({{w1, x * (qs + x - one)}, {w2, one - qs - x - qs * x2}, {w3, qs * x}}),
      combo({{w1, (x - one) * (qs + x)}})};

  if (q == 1) {
    Scalar d = x2 + x - num(2);
    require_nonzero(d, "x^2 + x - 2", at);
    require_nonzero(x, "x", at);
    FockVector x123 = (one / d) * combo({{w1, num(-3) * x}, {w2, one + x + x2}});
    FockVector x213 = (one / d) * combo({{w1, x2}, {w2, -x}});
    FockVector x132 = (one / d) * combo({{w1, num(-2) * x}, {w2, x + x2}});
    FockVector x321 = (-(one + x) / x) * x132;
    s.x = {x123, x213, x132, x321};
  } else {
    Scalar d3 = x3 - x2 - num(2) * x, d2 = x2 - x - num(2);
    require_nonzero(d3, "x^3 - x^2 - 2x", at);
    require_nonzero(d2, "x^2 - x - 2", at);
    FockVector x123 = (one / d3) * combo({{w1, num(-5) * x2 + num(2) * x - num(2)}, {w2, x3 + x2 + num(3) * x}});
    FockVector x213 = (one / d2) * combo({{w1, x2 + num(2)}, {w2, num(-3) * x}});
    FockVector x132 = (one / d2) * combo({{w1, num(2) * x - num(2)}, {w2, -x2 + x - num(4)}});
    FockVector x321 =
        (one / d3) * combo({{w1, num(-2) * x2 + num(2) * x - num(2)}, {w2, x3 - num(2) * x2 + num(3) * x}});
    s.x = {x123, x213, x132, x321};
  }
  return s;
}

PublishedSolution govorkov_number_solution(const Scalar& y) {
  const auto& g = published_basis();
  PublishedSolution s{.spec = AlgebraSpec::govorkov(kModes, y)};
  s.name = "Govorkov number N1 order 3 published solution set";
  s.parameters = param_text("y", y);
  s.kind = ExpansionKind::Number;
  s.i = s.j = 1;
  s.unknowns = g;

  Scalar one = num(1), y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
  Scalar d = one - num(5) * y2 + num(4) * y4;
  require_nonzero(d, "1 - 5y^2 + 4y^4", param_text("y", y));
  auto vec = [&](std::vector<Scalar> c) {
    FockVector v;
    for (std::size_t k = 0; k < 6; ++k) v.add(g[k], c[k]);
    return v;
  };
  Scalar z = num(0);
  FockVector x123 = (y / d) * vec({y + num(4) * y3, num(4) * y2, num(4) * y2, num(2) * y, num(2) * y, one});
  FockVector x213 = (y / d) * vec({num(4) * y2, num(2) * y, num(2) * y, one, one, num(2) * y});
  FockVector x231 = (one / d) * vec({num(2) * y2, y, y, one - num(2) * y2, num(2) * y2, y});
  // v2 <-> v5, v1 <-> v3, v4 <-> v6
  const std::vector<std::size_t> swap = {2, 4, 0, 5, 1, 3};
  auto swapped = [&](const FockVector& v) {
    FockVector out;
    for (std::size_t k = 0; k < 6; ++k) out.add(g[swap[k]], v.coefficient(g[k]));
    return out;
  };
  s.x = {x123, x213, swapped(x123), x231, swapped(x213), swapped(x231)};
  s.v = std::vector<FockVector>{
      FockVector(),
      vec({z, z, y2, z, y, z}),
      FockVector(),
      vec({y2, y, y, one, z, z}),
      vec({y2, y, z, z, z, z}),
      vec({y, z, y2, z, y, one})};
  return s;
}

FixtureResult check_published_solution(const PublishedSolution& s, const SectorLimits& limits) {
  FixtureResult r{s.name, s.parameters, FixtureStatus::Pass, {}};
  SolutionCheck c = validate_published_solution(s, limits);
  if (c.v_difference)
    for (std::size_t k = 0; k < s.unknowns.size(); ++k)
      if (!(*c.v_difference)[k].empty())
        r.findings.push_back("printed V row " + label(s.unknowns[k]) +
                             " differs from computed by " + (*c.v_difference)[k].str());
  for (std::size_t k = 0; k < s.unknowns.size(); ++k)
    if (!c.residual[k].empty())
      r.findings.push_back("residual A X - V row " + label(s.unknowns[k]) + " = " + c.residual[k].str());
  if (!r.findings.empty()) r.status = FixtureStatus::Errata;
  return r;
}

namespace {

void run_guarded(std::vector<FixtureResult>& out, const std::string& name, const std::string& params,
                 const std::function<FixtureResult()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back({name, params, FixtureStatus::Fail, {std::string("error: ") + e.what()}});
  }
}

FixtureResult para_gram_fixture(int q, const Scalar& p, const SectorLimits& limits) {
  FixtureResult r{"para Gram matrix on {1,2,3}", "q=" + std::to_string(q) + ", " + param_text("p", p), {}, {}};
  GramMatrix g = gram_matrix(AlgebraSpec::para(kModes, q, p), {1, 2, 3}, limits);
  ScalarMatrix expected = published_para_gram(q, p);
  const auto& b = published_basis();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Scalar got = g.entries(g.sector.index_of(b[i]), g.sector.index_of(b[j]));
      if (got != expected(i, j))
        r.findings.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): published " +
                             expected(i, j).str() + ", computed " + got.str());
    }
  r.status = r.findings.empty() ? FixtureStatus::Pass : FixtureStatus::Fail;
  return r;
}

FixtureResult govorkov_display_fixture(const Scalar& y, const SectorLimits& limits) {
  FixtureResult r{"Govorkov matrix display on {1,2,3}", param_text("y", y), {}, {}};
  GramMatrix g = gram_matrix(AlgebraSpec::govorkov(kModes, y), {1, 2, 3}, limits);
  auto printed = published_govorkov_display(y);
  const auto& b = published_basis();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Scalar got = g.entries(g.sector.index_of(b[i]), g.sector.index_of(b[j]));
      const PrintedEntry& e = printed[i][j];
      if (!e.value || *e.value != got)
        r.findings.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): printed " +
                             e.text + ", computed " + got.str());
    }
  if (!(g.entries == conjugate_transpose(g.entries))) {
    r.status = FixtureStatus::Fail;
    r.findings.push_back("computed matrix is not Hermitian");
  } else {
    r.status = r.findings.empty() ? FixtureStatus::Pass : FixtureStatus::Errata;
  }
  return r;
}

FixtureResult rank_claim(const std::string& name, int q, const Scalar& p, const Word& sector,
                         std::size_t claimed, const SectorLimits& limits) {
  FixtureResult r{name, "q=" + std::to_string(q) + ", " + param_text("p", p), {}, {}};
  std::size_t got = rank(gram_matrix(AlgebraSpec::para(kModes, q, p), sector, limits));
  if (got != claimed)
    r.findings.push_back("sector {" + format_word(sector) + "}: published rank " + std::to_string(claimed) +
                         ", computed " + std::to_string(got));
  r.status = r.findings.empty() ? FixtureStatus::Pass : FixtureStatus::Errata;
  return r;
}

struct DClaim {
  Word creation;
  Word annihilation;
  Scalar value;
};

FixtureResult second_order_fixture(const std::string& name, const std::string& params, const AlgebraSpec& spec,
                                   Mode i, const std::function<std::vector<DClaim>(Mode)>& claims,
                                   const SectorLimits& limits) {
  FixtureResult r{name, params, {}, {}};
  ExpansionCoefficients c = solve_expansion(spec, ExpansionKind::Number, i, i, 2, kModes, limits);
  for (Mode l : kModes) {
    if (l == i) continue;
    for (const DClaim& d : claims(l)) {
      Scalar got = c.coefficient(d.creation, d.annihilation);
      if (got != d.value)
        r.findings.push_back("D(" + format_word(d.creation) + ";" + format_word(d.annihilation) + "): published " +
                             d.value.str() + ", computed " + got.str());
    }
  }
  for (std::size_t n = 1; n <= 2; ++n)
    if (!verify_operator_action(spec, c, n, limits).exact_zero())
      r.findings.push_back("action check fails on " + std::to_string(n) + "-particle sectors");
  r.status = r.findings.empty() ? FixtureStatus::Pass : FixtureStatus::Fail;
  return r;
}

}  // namespace

std::vector<FixtureResult> run_published_fixtures(const SectorLimits& limits) {
  std::vector<FixtureResult> out;

  for (int q : {1, -1})
    for (long p : {1, 2, 3, 4, 5}) {
      std::string params = "q=" + std::to_string(q) + ", p=" + std::to_string(p);
      run_guarded(out, "para Gram matrix on {1,2,3}", params,
                  [&] { return para_gram_fixture(q, num(p), limits); });
    }

  for (Scalar y : {num(1, 4), num(1, 3)})
    run_guarded(out, "Govorkov matrix display on {1,2,3}", param_text("y", y),
                [&] { return govorkov_display_fixture(y, limits); });

  for (int q : {1, -1})
    for (long p : {1, 2, 3, 4, 5}) {
      std::string params = "q=" + std::to_string(q) + ", p=" + std::to_string(p);
      run_guarded(out, "para rank 4 on {1,2,3} for every p", params,
                  [&] { return rank_claim("para rank 4 on {1,2,3} for every p", q, num(p), {1, 2, 3}, 4, limits); });
    }
  for (int q : {1, -1})
    for (long p : {2, 3, 4, 5}) {
      std::string params = "q=" + std::to_string(q) + ", p=" + std::to_string(p);
      run_guarded(out, "para rank 2 on {1,2} for p > 1", params,
                  [&] { return rank_claim("para rank 2 on {1,2} for p > 1", q, num(p), {1, 2}, 2, limits); });
    }
  for (long p : {2, 3, 4, 5})
    run_guarded(out, "para-Bose rank 2 on {1,1,2} for p > 1", "q=1, p=" + std::to_string(p), [&] {
      return rank_claim("para-Bose rank 2 on {1,1,2} for p > 1", 1, num(p), {1, 1, 2}, 2, limits);
    });
  for (long p : {1, 2, 3, 4, 5}) {
    std::size_t claimed = p <= 2 ? 1 : 2;
    std::string name = p <= 2 ? "para-Fermi rank 1 on {1,1,2} for p = 1, 2" : "para-Fermi rank 2 on {1,1,2} for p >= 3";
    run_guarded(out, name, "q=-1, p=" + std::to_string(p),
                [&] { return rank_claim(name, -1, num(p), {1, 1, 2}, claimed, limits); });
  }

  for (int q : {1, -1})
    for (long p : {2, 3, 4}) {
      std::string params = "q=" + std::to_string(q) + ", p=" + std::to_string(p);
      Scalar pp = num(p), den = num(4 * (p - 1));
      run_guarded(out, "para second-order number coefficients", params, [&] {
        return second_order_fixture(
            "para second-order number coefficients", params, AlgebraSpec::para(kModes, q, pp), 1,
            [&](Mode l) {
              return std::vector<DClaim>{{{l, 1}, {1, l}, pp * pp / den},
                                         {{1, l}, {1, l}, num(q) * pp * (pp - num(2)) / den},
                                         {{l, 1}, {l, 1}, num(q) * pp * (pp - num(2)) / den},
                                         {{1, l}, {l, 1}, (pp - num(2)) * (pp - num(2)) / den}};
            },
            limits);
      });
    }
  for (Scalar y : {num(1, 4), num(1, 3)}) {
    Scalar k = num(1) / ((num(1) + y) * (num(1) - y));
    run_guarded(out, "Govorkov second-order number coefficients", param_text("y", y), [&] {
      return second_order_fixture(
          "Govorkov second-order number coefficients", param_text("y", y), AlgebraSpec::govorkov(kModes, y), 1,
          [&](Mode l) {
            return std::vector<DClaim>{
                {{l, 1}, {1, l}, k}, {{1, l}, {1, l}, y * k}, {{l, 1}, {l, 1}, y * k}, {{1, l}, {l, 1}, y * y * k}};
          },
          limits);
    });
  }

  auto solution = [&](const std::string& name, const std::string& params,
                      const std::function<PublishedSolution()>& make) {
    run_guarded(out, name, params, [&] { return check_published_solution(make(), limits); });
  };
  for (long p : {3, 4}) {
    std::string params = "p=" + std::to_string(p);
    solution("para-Bose number N1 order 3 published solution set", params,
             [&] { return para_bose_number_solution(num(p)); });
    solution("para-Fermi number N1 order 3 by published substitution", params,
             [&] { return para_fermi_number_solution(num(p)); });
  }
  for (int q : {1, -1})
    for (long p : {3, 4})
      solution(q == 1 ? "para-Bose transition N12 order 3 published solution set"
                      : "para-Fermi transition N12 order 3 published solution set",
               "p=" + std::to_string(p), [&] { return para_transition_solution(q, num(p)); });
  for (Scalar y : {num(1, 4), num(1, 3)})
    solution("Govorkov number N1 order 3 published solution set", param_text("y", y),
             [&] { return govorkov_number_solution(y); });
  return out;
}

std::string format_fixture_report(const std::vector<FixtureResult>& results) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.status)];
    os << to_string(r.status) << "  " << r.name << " [" << r.parameters << "]\n";
    for (const auto& f : r.findings) os << "    " << f << "\n";
  }
  os << "total " << results.size() << ": " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
     << " errata\n";
  return os.str();
}

}  // namespace fockalg
