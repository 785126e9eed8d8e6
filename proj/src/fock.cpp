#include "fockalg/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace fockalg {

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) return w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed word entry '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("malformed word entry '" + item + "'");
    w.push_back(v);
  }
  return w;
}

Word sorted_multiset(Word w) {
  std::sort(w.begin(), w.end());
  return w;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

bool same_multiset(const Word& a, const Word& b) {
  return a.size() == b.size() && std::is_permutation(a.begin(), a.end(), b.begin());
}

std::size_t total_number(const Word& w) { return w.size(); }

std::map<Mode, std::size_t> mode_counts(const Word& w) {
  std::map<Mode, std::size_t> counts;
  for (Mode m : w) ++counts[m];
  return counts;
}

SectorLimits SectorLimits::from_environment() {
  SectorLimits limits;
  if (const char* env = std::getenv("FOCKALG_MAX_BASIS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw std::invalid_argument(std::string("FOCKALG_MAX_BASIS is not a positive integer: ") + env);
    limits.max_basis = static_cast<std::size_t>(v);
  }
  return limits;
}

std::size_t multinomial(const Word& w) {
  // Build n!/prod(m!) incrementally as a product of binomials, each exact.
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t result = 1;
  std::size_t placed = 0;
  for (const auto& [mode, count] : mode_counts(w)) {
    for (std::size_t k = 1; k <= count; ++k) {
      ++placed;
      // result *= placed / k keeping exactness: result * placed is divisible by k.
      if (result > kMax / placed) return kMax;
      result = result * placed / k;
    }
  }
  return result;
}

std::size_t Sector::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw std::out_of_range("word (" + format_word(w) + ") not in sector " + label());
  return it->second;
}

bool Sector::contains(const Word& w) const { return index_.count(w) != 0; }

Sector enumerate_sector(const Word& multiset, const SectorLimits& limits) {
  if (multiset.empty()) throw std::invalid_argument("sector multiset must be non-empty");
  if (multiset.size() > limits.max_particles)
    throw CapError("sector {" + format_word(multiset) + "} has " + std::to_string(multiset.size()) +
                   " particles, cap is " + std::to_string(limits.max_particles));
  std::size_t count = multinomial(multiset);
  if (count > limits.max_basis)
    throw CapError("sector {" + format_word(multiset) + "} has basis size " + std::to_string(count) +
                   ", cap is " + std::to_string(limits.max_basis));

  Sector s;
  s.multiset_ = sorted_multiset(multiset);
  Word w = s.multiset_;
  do {
    s.index_.emplace(w, s.basis_.size());
    s.basis_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return s;
}

std::vector<Word> enumerate_multisets(const std::vector<Mode>& modes, std::size_t n) {
  std::vector<Mode> sorted = modes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Word> out;
  if (sorted.empty()) return out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Word w;
    for (std::size_t k : idx) w.push_back(sorted[k]);
    out.push_back(std::move(w));
    // next non-decreasing index tuple
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == sorted.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < n; ++k) idx[k] = idx[pos - 1];
  }
  return out;
}

void FockVector::add(const Word& w, const Scalar& coeff) {
  if (coeff.is_exact() && coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_exact() ? it->second.is_zero() : it->second.to_complex() == ComplexFloat(0, 0))
    terms_.erase(it);
}

Scalar FockVector::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<Word> FockVector::multisets() const {
  std::set<Word> seen;
  for (const auto& [w, c] : terms_) seen.insert(sorted_multiset(w));
  return {seen.begin(), seen.end()};
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& s) {
  if (s.is_exact() && s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")[" + format_word(w) + "]";
  }
  return out;
}

FockVector create(Mode j, const FockVector& v) {
  FockVector out;
  for (const auto& [w, c] : v.terms()) {
    Word nw;
    nw.reserve(w.size() + 1);
    nw.push_back(j);
    nw.insert(nw.end(), w.begin(), w.end());
    out.add(nw, c);
  }
  return out;
}

}  // namespace fockalg
