#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "monofol/blowup.hpp"
#include "monofol/presentation.hpp"
#include "monofol/verify.hpp"

namespace monofol {

using nlohmann::json;

// All file formats use 1-based indices and "p/q" rationals in lowest terms.
// Emission is canonical: sorted keys, two-space indent, trailing newline,
// so equal values serialize to identical bytes.

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);  // accepts "p/q" strings or plain integers

json subspace_to_json(const Subspace& v);
json presentation_to_json(const Presentation& p);
json change_to_json(const MonomialChange& change);
json localize_to_json(const LocalizeResult& result);
json atlas_to_json(const std::vector<std::pair<int, Presentation>>& charts);
json validation_to_json(const ValidationReport& report);
json verify_to_json(const VerifyReport& report);
json field_to_json(const VectorField& w);  // machine form: coeff/exponents/component

struct LoadedPresentation {
  Presentation value;
  // File-level findings (non-canonical basis rows); bounds problems are
  // reported by validate() on the value.
  ValidationReport issues;
};

// Throws ParseError on structural problems: missing n, malformed rationals,
// rows of the wrong length. Out-of-range divisor indices and non-canonical
// bases load fine and surface as validation issues instead.
LoadedPresentation presentation_from_json(const json& j);

LoadedPresentation load_presentation_file(const std::string& path);

std::string canonical_dump(const json& j);

}  // namespace monofol
