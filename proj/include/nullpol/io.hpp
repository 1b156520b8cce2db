#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nullpol/factorize.hpp"
#include "nullpol/lie.hpp"

// JSON and text forms. Scalars are strings ("p/q", "a+bi"); integers are
// accepted on input. Malformed input throws ParseError.
namespace nullpol::io {

using json = nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// [{"mask": 3, "coeff": "2"}, ...]
json to_json(const Multivector& m);
/// Accepts the term list or, for vectors, a plain coordinate array.
Multivector multivector_from_json(const json& j, const AlgebraPtr& algebra);

json to_json(const klein::ProjTransform4& t);
/// "kind" and "action" default to collineation / points unless overridden.
klein::ProjTransform4 transform_from_json(const json& j, std::optional<klein::TransformKind> kind = std::nullopt,
                                          std::optional<klein::Action> action = std::nullopt);

json to_json(const klein::NullPolarity& p);
klein::NullPolarity polarity_from_json(const json& j);

json to_json(const klein::FactorizationResult& r);
klein::FactorizationResult factorization_from_json(const json& j);

json to_json(const lie::LieElement& e);
lie::LieElement lie_element_from_json(const json& j);
json to_json(const lie::LieCoordinate& c);

/// Versor coefficients in the table layout, keyed "g1".."g32" or "h1".."h32".
json table_json(const klein::TableCoords& c, Parity parity);

/// Right-aligned columns of exact scalars.
std::string matrix_text(const Matrix& m, const std::string& indent = "  ");

/// Parses text, mapping nlohmann errors to ParseError.
json parse(const std::string& text);

}  // namespace nullpol::io
