#include "fockalg/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace fockalg {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Bose:
      return "bose";
    case Family::Fermi:
      return "fermi";
    case Family::Quon:
      return "quon";
    case Family::Para:
      return "para";
    case Family::Govorkov:
      return "govorkov";
    case Family::Custom:
      return "custom";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::Bose, Family::Fermi, Family::Quon, Family::Para, Family::Govorkov,
                   Family::Custom})
    if (text == to_string(f)) return f;
  throw AlgebraError("unknown algebra family '" + std::string(text) + "'");
}

AlgebraSpec::AlgebraSpec(Family f, std::vector<Mode> modes) : family_(f), modes_(std::move(modes)) {
  if (modes_.empty()) throw AlgebraError("algebra needs at least one mode");
  std::vector<Mode> sorted = modes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw AlgebraError("duplicate mode label");
}

void AlgebraSpec::refresh_mode() {
  ScalarMode m = ScalarMode::ExactRational;
  switch (family_) {
    case Family::Quon:
      m = matrix_mode(quon_q_);
      break;
    case Family::Para:
      m = wider(para_p_.mode(), two_over_p_.mode());
      break;
    case Family::Govorkov:
      m = govorkov_y_.mode();
      break;
    case Family::Custom:
      for (const auto& [key, v] : table_.entries) m = wider(m, v.mode());
      break;
    default:
      break;
  }
  scalar_mode_ = m;
}

AlgebraSpec AlgebraSpec::bose(std::vector<Mode> modes) {
  return AlgebraSpec(Family::Bose, std::move(modes));
}

AlgebraSpec AlgebraSpec::fermi(std::vector<Mode> modes) {
  return AlgebraSpec(Family::Fermi, std::move(modes));
}

AlgebraSpec AlgebraSpec::quon(std::vector<Mode> modes, ScalarMatrix q) {
  AlgebraSpec s(Family::Quon, std::move(modes));
  const std::size_t d = s.modes_.size();
  if (q.rows() != d || q.cols() != d)
    throw AlgebraError("quon q matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      bool ok = q(a, b).is_exact() && q(b, a).is_exact() ? q(a, b) == q(b, a).conj()
                                                         : approx_equal(q(a, b), q(b, a).conj());
      if (!ok)
        throw AlgebraError("quon parameters violate q_ij* = q_ji at (" +
                           std::to_string(s.modes_[a]) + "," + std::to_string(s.modes_[b]) + ")");
    }
  s.quon_q_ = std::move(q);
  s.refresh_mode();
  return s;
}

AlgebraSpec AlgebraSpec::quon_uniform(std::vector<Mode> modes, const Scalar& q) {
  const std::size_t d = modes.size();
  return quon(std::move(modes), ScalarMatrix(d, d, q));
}

AlgebraSpec AlgebraSpec::para(std::vector<Mode> modes, int sign, const Scalar& p) {
  AlgebraSpec s(Family::Para, std::move(modes));
  if (sign != 1 && sign != -1) throw AlgebraError("para sign q must be +1 or -1");
  if (!p.is_real() || p.to_double() <= 0.0) throw AlgebraError("para order p must be positive");
  s.para_sign_ = sign;
  s.para_p_ = p;
  s.two_over_p_ = Scalar(2) / p;
  s.refresh_mode();
  return s;
}

AlgebraSpec AlgebraSpec::govorkov(std::vector<Mode> modes, const Scalar& y) {
  AlgebraSpec s(Family::Govorkov, std::move(modes));
  s.govorkov_y_ = y;
  s.refresh_mode();
  return s;
}

AlgebraSpec AlgebraSpec::custom(std::vector<Mode> modes, ContractionTable table) {
  AlgebraSpec s(Family::Custom, std::move(modes));
  for (const auto& [key, v] : table.entries) {
    const auto& [n, k, perm] = key;
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = sorted.size() + 1 == n;
    for (std::size_t t = 0; is_perm && t < sorted.size(); ++t) is_perm = sorted[t] == t;
    if (n == 0 || k == 0 || k > n || !is_perm)
      throw AlgebraError("invalid contraction table key (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
  }
  s.table_ = std::move(table);
  s.refresh_mode();
  return s;
}

bool AlgebraSpec::has_mode(Mode m) const {
  return std::find(modes_.begin(), modes_.end(), m) != modes_.end();
}

std::size_t AlgebraSpec::mode_index(Mode m) const {
  auto it = std::find(modes_.begin(), modes_.end(), m);
  if (it == modes_.end()) throw AlgebraError("mode " + std::to_string(m) + " is not in the index set");
  return static_cast<std::size_t>(it - modes_.begin());
}

Scalar AlgebraSpec::q(Mode i, Mode j) const {
  switch (family_) {
    case Family::Bose:
      return Scalar(1);
    case Family::Fermi:
      return Scalar(-1);
    case Family::Quon:
      return quon_q_(mode_index(i), mode_index(j));
    default:
      throw AlgebraError("q_ij is defined for bose, fermi and quon families only");
  }
}

AlgebraSpec AlgebraSpec::restricted(std::size_t d) const {
  if (d == 0 || d > modes_.size())
    throw AlgebraError("cannot restrict to " + std::to_string(d) + " modes");
  AlgebraSpec s = *this;
  s.modes_.resize(d);
  if (family_ == Family::Quon) {
    std::vector<std::size_t> idx(d);
    for (std::size_t k = 0; k < d; ++k) idx[k] = k;
    s.quon_q_ = quon_q_.extract(idx, idx);
  }
  return s;
}

AlgebraSpec AlgebraSpec::in_mode(ScalarMode mode) const {
  AlgebraSpec s = *this;
  switch (family_) {
    case Family::Quon:
      s.quon_q_ = to_mode(quon_q_, mode);
      break;
    case Family::Para:
      s.para_p_ = para_p_.to_mode(mode);
      s.two_over_p_ = two_over_p_.to_mode(mode);
      break;
    case Family::Govorkov:
      s.govorkov_y_ = govorkov_y_.to_mode(mode);
      break;
    case Family::Custom:
      for (auto& [key, v] : s.table_.entries) v = v.to_mode(mode);
      break;
    default:
      break;
  }
  s.scalar_mode_ = mode;
  return s;
}

std::string AlgebraSpec::describe() const {
  std::ostringstream os;
  os << to_string(family_) << " modes={" << format_word(modes_) << "}";
  if (family_ == Family::Para)
    os << " q=" << para_sign_ << " p=" << para_p_.str();
  else if (family_ == Family::Govorkov)
    os << " y=" << govorkov_y_.str();
  os << " mode=" << to_string(scalar_mode_);
  return os.str();
}

FockVector ContractionResult::combined() const {
  FockVector v;
  for (const auto& t : terms) v.add(t.word, t.coeff);
  return v;
}

namespace {

Word without(const Word& w, std::size_t pos) {
  Word out;
  out.reserve(w.size() - 1);
  for (std::size_t t = 0; t < w.size(); ++t)
    if (t != pos) out.push_back(w[t]);
  return out;
}

Scalar sign_power(int sign, std::size_t k) { return (sign < 0 && k % 2 == 1) ? Scalar(-1) : Scalar(1); }

void contract_para(const AlgebraSpec& spec, Mode i, const Word& w, ContractionResult& out) {
  const int minus_q = -spec.para_sign();
  const Scalar& two_over_p = spec.two_over_p();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != i) continue;
    out.terms.push_back({sign_power(minus_q, k), without(w, k)});
    // Drop the hit letter and move the letter from slot l into its place.
    for (std::size_t l = 0; l < k; ++l) {
      Word moved;
      moved.reserve(w.size() - 1);
      for (std::size_t t = 0; t < l; ++t) moved.push_back(w[t]);
      for (std::size_t t = l + 1; t < k; ++t) moved.push_back(w[t]);
      moved.push_back(w[l]);
      for (std::size_t t = k + 1; t < w.size(); ++t) moved.push_back(w[t]);
      out.terms.push_back({-(two_over_p * sign_power(minus_q, l + 1)), std::move(moved)});
    }
  }
}

void contract_govorkov(const AlgebraSpec& spec, Mode i, const Word& w, ContractionResult& out) {
  if (w[0] == i) out.terms.push_back({spec.one(), without(w, 0)});
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] != i) continue;
    Word moved;
    moved.reserve(w.size() - 1);
    for (std::size_t t = 1; t < k; ++t) moved.push_back(w[t]);
    moved.push_back(w[0]);
    for (std::size_t t = k + 1; t < w.size(); ++t) moved.push_back(w[t]);
    out.terms.push_back({-spec.govorkov_y(), std::move(moved)});
  }
}

void contract_custom(const AlgebraSpec& spec, Mode i, const Word& w, ContractionResult& out) {
  const std::size_t n = w.size();
  const auto& entries = spec.table().entries;
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] != i) continue;
    Word rest = without(w, k);
    if (n == 1) {
      out.terms.push_back({spec.one(), rest});
      continue;
    }
    auto it = entries.lower_bound({n, k + 1, {}});
    for (; it != entries.end() && std::get<0>(it->first) == n && std::get<1>(it->first) == k + 1;
         ++it) {
      const auto& perm = std::get<2>(it->first);
      Word arranged(rest.size());
      for (std::size_t t = 0; t < rest.size(); ++t) arranged[t] = rest[perm[t]];
      out.terms.push_back({it->second, std::move(arranged)});
    }
  }
}

}  // namespace

ContractionResult apply_annihilator(const AlgebraSpec& spec, Mode i, const Word& w) {
  spec.mode_index(i);
  ContractionResult out;
  if (w.empty()) return out;

  switch (spec.family()) {
    case Family::Bose:
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] == i) out.terms.push_back({Scalar(1), without(w, k)});
      break;
    case Family::Fermi:
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] == i) out.terms.push_back({sign_power(-1, k), without(w, k)});
      break;
    case Family::Quon: {
      // Passing a_i through a†_{w_b} for b < k picks up q_{i w_b}.
      Scalar prefix = spec.one();
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == i) out.terms.push_back({prefix, without(w, k)});
        prefix *= spec.q(i, w[k]);
      }
      break;
    }
    case Family::Para:
      contract_para(spec, i, w, out);
      break;
    case Family::Govorkov:
      contract_govorkov(spec, i, w, out);
      break;
    case Family::Custom:
      contract_custom(spec, i, w, out);
      break;
  }
  return out;
}

FockVector annihilate(const AlgebraSpec& spec, Mode i, const FockVector& v) {
  FockVector out;
  for (const auto& [w, c] : v.terms())
    for (const auto& t : apply_annihilator(spec, i, w).terms) out.add(t.word, c * t.coeff);
  return out;
}

FockVector annihilate_string(const AlgebraSpec& spec, const Word& operator_order,
                             const FockVector& v) {
  FockVector out = v;
  for (auto it = operator_order.rbegin(); it != operator_order.rend() && !out.empty(); ++it)
    out = annihilate(spec, *it, out);
  return out;
}

}  // namespace fockalg
