#ifndef FOCKALG_SPEC_IO_HPP
#define FOCKALG_SPEC_IO_HPP

#include <stdexcept>
#include <string>

#include "fockalg/algebra.hpp"
#include "fockalg/jordanwigner.hpp"
#include "fockalg/singlemode.hpp"
#include "json.hpp"

namespace fockalg {

using Json = nlohmann::ordered_json;

class SpecParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact values become strings ("3/4") or {"re": "..", "im": ".."}; floats
/// become numbers or {"re": x, "im": y}.
Json scalar_to_json(const Scalar& s);
/// Accepts strings, integers (exact), non-integer numbers (float) and
/// {"re", "im"} objects.
Scalar scalar_from_json(const Json& j);

Json word_to_json(const Word& w);
Json vector_to_json(const FockVector& v);

/// {"family": .., "modes": [..], "params": {..}}. Params per family:
/// quon {"q": scalar or matrix}, para {"q": +1|-1, "p": scalar},
/// govorkov {"y": scalar}, custom {"table": [{"n", "k", "perm", "coeff"}]}.
AlgebraSpec algebra_from_json(const Json& j);
Json algebra_to_json(const AlgebraSpec& spec);

/// {"d": .., "n_max": .., "c": [[..]], "phi": .., "haldane": {"m": ..}}.
/// phi is "bose", {"q": s}, or a per-mode list of those or of value tables.
JWSpec jw_from_json(const Json& j);
Json jw_to_json(const JWSpec& spec);

/// Either {"phi": ..} (table, "bose" or {"q": s}) or {"F": .., "G": ..}
/// with constants or tables; "n_max" defaults to 32.
SingleModeAlgebra single_from_json(const Json& j);

/// Reads and parses a JSON file; throws SpecParseError.
Json read_json_file(const std::string& path);

}  // namespace fockalg

#endif  // FOCKALG_SPEC_IO_HPP
