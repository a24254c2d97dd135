#pragma once

// JSON encodings:
//   FieldSpec       {"p": int, "k": int, "modulus": [int, ...]}
//   FieldElement    [int, ...]                  (low-to-high coefficients)
//   BiPoly          [[i, j, coeff], ...]        (canonical term order)
//   EndoPair        {"field": FieldSpec, "f": poly, "g": poly}
//   NormalFormWord  {"alphas": [null | elem], "betas": [poly], "lambda": {...}}
//   DirichletSeries [{"n": int, "value": "decimal-string"}, ...]
//
// Decoders throw InvalidArgument on malformed input.

#include "json.hpp"

#include "autcount/automorphism.hpp"
#include "autcount/dirichlet.hpp"

namespace autcount {

using Json = nlohmann::json;

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json to_json(const FieldElement& e);
// Accepts a coefficient list, or a bare integer for prime fields.
FieldElement element_from_json(const FieldSpec& field, const Json& j);

Json to_json(const BiPoly& p);
BiPoly poly_from_json(const FieldSpec& field, const Json& j);

Json to_json(const EndoPair& e);
EndoPair endo_from_json(const Json& j);

Json to_json(const AffineParams& p);
AffineParams affine_from_json(const FieldSpec& field, const Json& j);

Json to_json(const NormalFormWord& w);
NormalFormWord word_from_json(const FieldSpec& field, const Json& j);

Json to_json(const DirichletSeries& s);

// "a" for integers, "a/b" otherwise.
std::string format_rational(const BigRational& r);

}  // namespace autcount
