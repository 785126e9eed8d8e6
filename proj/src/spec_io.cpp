#include "fockalg/spec_io.hpp"

#include <cmath>
#include <fstream>

namespace fockalg {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecParseError(what); }

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

Json float_to_json(double v) { return Json(v); }

std::size_t as_size(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Sequence sequence_from_json(const Json& j, std::size_t length, const std::string& what) {
  if (j.is_array()) {
    Sequence s;
    for (const Json& e : j) s.push_back(scalar_from_json(e));
    if (s.size() < length) fail(what + " needs " + std::to_string(length) + " entries");
    return s;
  }
  return constant_sequence(scalar_from_json(j), length);
}

Sequence phi_preset(const Json& j, std::size_t n_max, const std::string& what) {
  if (j.is_string() && j.get<std::string>() == "bose") return bose_phi(n_max);
  if (j.is_object() && j.contains("q")) return q_phi(scalar_from_json(j.at("q")), n_max);
  if (j.is_array()) {
    Sequence s;
    for (const Json& e : j) s.push_back(scalar_from_json(e));
    if (s.size() < 2) fail(what + " table needs phi(0) and phi(1)");
    return s;
  }
  fail(what + " must be \"bose\", {\"q\": ..} or a table");
}

// A list of presets or tables, as opposed to a single value table.
bool is_per_mode_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& e : j) {
    bool preset = e.is_array() || (e.is_string() && e.get<std::string>() == "bose") ||
                  (e.is_object() && e.contains("q"));
    if (!preset) return false;
  }
  return true;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (const Rational* r = s.as_rational()) return Json(r->get_str());
  if (const ComplexRational* c = s.as_complex_rational())
    return Json{{"re", c->re.get_str()}, {"im", c->im.get_str()}};
  const ComplexFloat v = *s.as_complex_float();
  if (v.imag() == 0.0) return float_to_json(v.real());
  return Json{{"re", float_to_json(v.real())}, {"im", float_to_json(v.imag())}};
}

Scalar scalar_from_json(const Json& j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_number_float()) return Scalar::floating(j.get<double>());
    if (j.is_object() && j.contains("re")) {
      Scalar re = scalar_from_json(j.at("re"));
      Scalar im = j.contains("im") ? scalar_from_json(j.at("im")) : Scalar(0);
      if (re.is_exact() && im.is_exact()) {
        if (!re.as_rational() || !im.as_rational()) fail("complex parts must be real");
        return Scalar::complex(*re.as_rational(), *im.as_rational());
      }
      return Scalar::floating(re.to_double(), im.to_double());
    }
  } catch (const ScalarError& e) {
    fail(std::string("bad scalar: ") + e.what());
  }
  fail("bad scalar " + j.dump());
}

Json word_to_json(const Word& w) { return Json(w); }

Json vector_to_json(const FockVector& v) {
  Json out = Json::array();
  for (const auto& [w, c] : v.terms()) out.push_back({{"word", w}, {"coeff", scalar_to_json(c)}});
  return out;
}

AlgebraSpec algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("algebra spec must be a JSON object");
  std::vector<Mode> modes;
  const Json& jm = require(j, "modes", "algebra spec");
  if (!jm.is_array()) fail("\"modes\" must be a list of integers");
  for (const Json& m : jm) {
    if (!m.is_number_integer()) fail("\"modes\" must be a list of integers");
    modes.push_back(m.get<Mode>());
  }
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  try {
    const Json& jf = require(j, "family", "algebra spec");
    if (!jf.is_string()) fail("\"family\" must be a string");
    switch (parse_family(jf.get<std::string>())) {
      case Family::Bose: return AlgebraSpec::bose(modes);
      case Family::Fermi: return AlgebraSpec::fermi(modes);
      case Family::Quon: {
        const Json& q = require(params, "q", "quon params");
        if (!q.is_array()) return AlgebraSpec::quon_uniform(modes, scalar_from_json(q));
        if (q.size() != modes.size()) fail("quon q must be a d x d matrix");
        ScalarMatrix m(modes.size(), modes.size());
        for (std::size_t r = 0; r < modes.size(); ++r) {
          if (!q[r].is_array() || q[r].size() != modes.size()) fail("quon q must be a d x d matrix");
          for (std::size_t c = 0; c < modes.size(); ++c) m(r, c) = scalar_from_json(q[r][c]);
        }
        return AlgebraSpec::quon(modes, m);
      }
      case Family::Para: {
        const Json& q = params.contains("q") ? params.at("q") : require(params, "sign", "para params");
        if (!q.is_number_integer()) fail("para q must be +1 or -1");
        return AlgebraSpec::para(modes, q.get<int>(), scalar_from_json(require(params, "p", "para params")));
      }
      case Family::Govorkov:
        return AlgebraSpec::govorkov(modes, scalar_from_json(require(params, "y", "govorkov params")));
      case Family::Custom: {
        ContractionTable table;
        const Json& t = require(params, "table", "custom params");
        if (!t.is_array()) fail("custom table must be a list");
        for (const Json& e : t) {
          std::vector<std::size_t> perm;
          for (const Json& p : require(e, "perm", "table entry")) perm.push_back(as_size(p, "perm entry"));
          table.set(as_size(require(e, "n", "table entry"), "n"), as_size(require(e, "k", "table entry"), "k"),
                    std::move(perm), scalar_from_json(require(e, "coeff", "table entry")));
        }
        return AlgebraSpec::custom(modes, table);
      }
    }
  } catch (const AlgebraError& e) {
    fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
  fail("unreachable family");
}

Json algebra_to_json(const AlgebraSpec& spec) {
  Json params = Json::object();
  switch (spec.family()) {
    case Family::Bose:
    case Family::Fermi: break;
    case Family::Quon: {
      Json q = Json::array();
      const ScalarMatrix& m = spec.quon_matrix();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        q.push_back(row);
      }
      params["q"] = q;
      break;
    }
    case Family::Para:
      params["q"] = spec.para_sign();
      params["p"] = scalar_to_json(spec.para_p());
      break;
    case Family::Govorkov: params["y"] = scalar_to_json(spec.govorkov_y()); break;
    case Family::Custom: {
      Json t = Json::array();
      for (const auto& [key, coeff] : spec.table().entries)
        t.push_back({{"n", std::get<0>(key)}, {"k", std::get<1>(key)}, {"perm", std::get<2>(key)},
                     {"coeff", scalar_to_json(coeff)}});
      params["table"] = t;
      break;
    }
  }
  return Json{{"family", std::string(to_string(spec.family()))}, {"modes", spec.modes()}, {"params", params}};
}

JWSpec jw_from_json(const Json& j) {
  if (!j.is_object()) fail("JW spec must be a JSON object");
  try {
    const std::size_t d = as_size(require(j, "d", "JW spec"), "d");
    const std::size_t n_max = j.contains("n_max") ? as_size(j.at("n_max"), "n_max") : kDefaultTowerDepth;
    std::vector<Sequence> phi;
    const Json jp = j.contains("phi") ? j.at("phi") : Json("bose");
    if (is_per_mode_list(jp)) {
      if (jp.size() != d) fail("per-mode phi list must have d entries");
      for (std::size_t i = 0; i < d; ++i) phi.push_back(phi_preset(jp[i], n_max, "phi of mode " + std::to_string(i + 1)));
    } else {
      phi.assign(d, phi_preset(jp, n_max, "phi"));
    }

    JWSpec s;
    if (j.contains("haldane")) {
      s = haldane_preset(static_cast<long>(as_size(require(j.at("haldane"), "m", "haldane"), "m")), d, phi);
    } else {
      s = JWSpec::bose(d, n_max);
      s.phi = phi;
      if (j.contains("c")) {
        const Json& c = j.at("c");
        if (!c.is_array() || c.size() != d) fail("c must be a d x d matrix");
        for (std::size_t r = 0; r < d; ++r) {
          if (!c[r].is_array() || c[r].size() != d) fail("c must be a d x d matrix");
          for (std::size_t k = 0; k < d; ++k) s.c(r, k) = scalar_from_json(c[r][k]).to_complex();
        }
      }
    }
    s.validate();
    return s;
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json jw_to_json(const JWSpec& spec) {
  Json c = Json::array(), phi = Json::array();
  for (std::size_t r = 0; r < spec.d; ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < spec.d; ++k)
      row.push_back(scalar_to_json(Scalar::floating(spec.c(r, k).real(), spec.c(r, k).imag())));
    c.push_back(row);
    Json table = Json::array();
    for (const Scalar& v : spec.phi[r]) table.push_back(scalar_to_json(v));
    phi.push_back(table);
  }
  Json out{{"d", spec.d}, {"c", c}, {"phi", phi}};
  if (spec.haldane_m) out["haldane"] = {{"m", *spec.haldane_m}};
  return out;
}

SingleModeAlgebra single_from_json(const Json& j) {
  if (!j.is_object()) fail("single-mode spec must be a JSON object");
  try {
    const std::size_t n_max = j.contains("n_max") ? as_size(j.at("n_max"), "n_max") : kDefaultTowerDepth;
    if (j.contains("phi")) {
      Sequence phi = phi_preset(j.at("phi"), n_max, "phi");
      return SingleModeAlgebra::from_phi(std::move(phi));
    }
    Sequence F = sequence_from_json(require(j, "F", "single-mode spec"), n_max, "F");
    Sequence G = sequence_from_json(require(j, "G", "single-mode spec"), n_max, "G");
    return SingleModeAlgebra::from_FG(std::move(F), std::move(G), n_max);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace fockalg
