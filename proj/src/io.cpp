#include "nullpol/io.hpp"

#include <algorithm>

#include "nullpol/errors.hpp"

namespace nullpol::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return f.get<std::string>();
}

lie::Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected three coordinates");
  return {scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2])};
}

json vec3_json(const lie::Vec3& v) { return json::array({v[0].str(), v[1].str(), v[2].str()}); }

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalars must be strings or integers, got " + j.dump());
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

json to_json(const Multivector& m) {
  json out = json::array();
  for (const auto& [mask, c] : m.terms()) out.push_back({{"mask", mask}, {"coeff", to_json(c)}});
  return out;
}

Multivector multivector_from_json(const json& j, const AlgebraPtr& algebra) {
  if (!j.is_array()) throw ParseError("multivector must be an array");
  if (j.empty() || j[0].is_object()) {
    Multivector m(algebra);
    for (const auto& t : j) {
      const json& mask = field(t, "mask");
      if (!mask.is_number_unsigned() || mask.get<unsigned long>() > algebra->full_mask())
        throw ParseError("blade mask out of range: " + mask.dump());
      m += Multivector::blade(algebra, mask.get<BladeMask>(), scalar_from_json(field(t, "coeff")));
    }
    return m;
  }
  if (j.size() != algebra->dim()) throw ParseError("vector needs " + std::to_string(algebra->dim()) + " coordinates");
  std::vector<Scalar> c;
  for (const auto& x : j) c.push_back(scalar_from_json(x));
  return Multivector::vector(algebra, c);
}

json to_json(const klein::ProjTransform4& t) {
  return {{"matrix", to_json(t.matrix)}, {"kind", klein::to_string(t.kind)}, {"action", klein::to_string(t.action)}};
}

klein::ProjTransform4 transform_from_json(const json& j, std::optional<klein::TransformKind> kind,
                                          std::optional<klein::Action> action) {
  klein::ProjTransform4 t;
  t.matrix = matrix_from_json(j.is_array() ? j : field(j, "matrix"));
  if (j.is_object() && j.contains("kind")) t.kind = klein::parse_kind(string_field(j, "kind"));
  if (j.is_object() && j.contains("action")) t.action = klein::parse_action(string_field(j, "action"));
  if (kind) t.kind = *kind;
  if (action) t.action = *action;
  if (t.matrix.rows() != 4 || t.matrix.cols() != 4) throw ParseError("transform matrix must be 4x4");
  return t;
}

json to_json(const klein::NullPolarity& p) {
  return {{"matrix", to_json(p.matrix)}, {"action", klein::to_string(p.action)},
          {"skew", p.matrix.is_skew_symmetric()}};
}

klein::NullPolarity polarity_from_json(const json& j) {
  klein::NullPolarity p;
  p.matrix = matrix_from_json(field(j, "matrix"));
  p.action = klein::parse_action(string_field(j, "action"));
  p.singular = p.matrix.is_square() && determinant(p.matrix).is_zero();
  return p;
}

json to_json(const klein::FactorizationResult& r) {
  json factors = json::array(), polarities = json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(f));
  for (const auto& p : r.polarities) polarities.push_back(to_json(p));
  return {{"factors", factors}, {"polarities", polarities}, {"scale", to_json(r.scale)}, {"verified", r.verified}};
}

klein::FactorizationResult factorization_from_json(const json& j) {
  klein::FactorizationResult r;
  if (j.contains("factors")) {
    if (!j.at("factors").is_array()) throw ParseError("'factors' must be an array");
    for (const auto& f : j.at("factors")) r.factors.push_back(multivector_from_json(f, klein::algebra()));
  }
  const json& pols = field(j, "polarities");
  if (!pols.is_array()) throw ParseError("'polarities' must be an array");
  for (const auto& p : pols) r.polarities.push_back(polarity_from_json(p));
  if (j.contains("scale")) r.scale = scalar_from_json(j.at("scale"));
  if (j.contains("verified")) r.verified = j.at("verified").get<bool>();
  return r;
}

json to_json(const lie::LieElement& e) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, lie::Point>) {
          return {{"variant", "point"}, {"u", vec3_json(v.u)}};
        } else if constexpr (std::is_same_v<T, lie::Infinity>) {
          return {{"variant", "infinity"}};
        } else if constexpr (std::is_same_v<T, lie::Sphere>) {
          return {{"variant", "sphere"}, {"center", vec3_json(v.center)}, {"radius", to_json(v.radius)}};
        } else {
          return {{"variant", "plane"}, {"normal", vec3_json(v.normal)}, {"offset", to_json(v.offset)}};
        }
      },
      e);
}

lie::LieElement lie_element_from_json(const json& j) {
  const std::string variant = string_field(j, "variant");
  if (variant == "point") return lie::Point{vec3_from_json(field(j, "u"))};
  if (variant == "infinity") return lie::Infinity{};
  if (variant == "sphere") return lie::Sphere{vec3_from_json(field(j, "center")), scalar_from_json(field(j, "radius"))};
  if (variant == "plane") return lie::Plane{vec3_from_json(field(j, "normal")), scalar_from_json(field(j, "offset"))};
  throw ParseError("unknown Lie element variant '" + variant + "'");
}

json to_json(const lie::LieCoordinate& c) {
  json out = json::array();
  for (const auto& x : c.coords) out.push_back(to_json(x));
  return out;
}

json table_json(const klein::TableCoords& c, Parity parity) {
  json out = json::object();
  const char prefix = parity == Parity::even ? 'g' : 'h';
  for (std::size_t i = 1; i <= 32; ++i)
    if (!c[i].is_zero()) out[prefix + std::to_string(i)] = to_json(c[i]);
  return out;
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m(r, c).str().size());
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).str();
      out += std::string(width[c] - s.size() + (c ? 2 : 0), ' ') + s;
    }
    out += '\n';
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace nullpol::io
