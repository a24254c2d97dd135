#include "autcount/serialization.hpp"

namespace autcount {

namespace {

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("bad JSON for ") + what + ": " + ex.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("JSON object lacks key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const FieldSpec& field) {
  return {{"p", field.characteristic()}, {"k", field.degree()}, {"modulus", field.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  const auto p = get_as<std::uint32_t>(member(j, "p"), "p");
  const auto k = get_as<unsigned>(member(j, "k"), "k");
  if (!j.contains("modulus")) return FieldSpec::make(p, k);
  auto modulus = get_as<std::vector<std::uint32_t>>(j.at("modulus"), "modulus");
  if (modulus.size() != std::size_t{k} + 1) throw InvalidArgument("modulus length does not match k");
  return FieldSpec::with_modulus(p, std::move(modulus));
}

Json to_json(const FieldElement& e) { return e.coeffs(); }

FieldElement element_from_json(const FieldSpec& field, const Json& j) {
  if (j.is_number_integer()) {
    if (field.degree() != 1) throw InvalidArgument("bare integer coefficients need a prime field");
    const auto v = get_as<std::int64_t>(j, "element");
    if (v < 0 || static_cast<std::uint64_t>(v) >= field.characteristic())
      throw InvalidArgument("element out of range [0, p)");
    return {field, static_cast<FieldSpec::Code>(v)};
  }
  const auto coeffs = get_as<std::vector<std::uint32_t>>(j, "element");
  return FieldElement::from_coeffs(field, coeffs);
}

Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back({t.m.x, t.m.y, p.field().coeffs(t.c)});
  return out;
}

BiPoly poly_from_json(const FieldSpec& field, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array of [i, j, coeff]");
  std::vector<BiPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw InvalidArgument("polynomial term must be [i, j, coeff]");
    const auto i = get_as<std::uint32_t>(t[0], "exponent");
    const auto e = get_as<std::uint32_t>(t[1], "exponent");
    terms.push_back({{i, e}, element_from_json(field, t[2]).code()});
  }
  return BiPoly::from_terms(field, std::move(terms));
}

Json to_json(const EndoPair& e) { return {{"field", to_json(e.field())}, {"f", to_json(e.f)}, {"g", to_json(e.g)}}; }

EndoPair endo_from_json(const Json& j) {
  const auto field = field_from_json(member(j, "field"));
  return {poly_from_json(field, member(j, "f")), poly_from_json(field, member(j, "g"))};
}

Json to_json(const AffineParams& p) {
  return {{"a1", to_json(p.a1)}, {"b1", to_json(p.b1)}, {"c1", to_json(p.c1)},
          {"a2", to_json(p.a2)}, {"b2", to_json(p.b2)}, {"c2", to_json(p.c2)}};
}

AffineParams affine_from_json(const FieldSpec& field, const Json& j) {
  auto el = [&](const char* key) { return element_from_json(field, member(j, key)); };
  return AffineParams::make(el("a1"), el("b1"), el("c1"), el("a2"), el("b2"), el("c2"));
}

Json to_json(const NormalFormWord& w) {
  Json alphas = Json::array(), betas = Json::array();
  for (const auto& a : w.alphas) alphas.push_back(a.is_identity() ? Json(nullptr) : to_json(*a.a));
  for (const auto& h : w.betas) betas.push_back(to_json(h));
  return {{"alphas", alphas}, {"betas", betas}, {"lambda", to_json(w.lambda)}};
}

NormalFormWord word_from_json(const FieldSpec& field, const Json& j) {
  NormalFormWord w{{}, {}, affine_from_json(field, member(j, "lambda"))};
  for (const auto& a : member(j, "alphas"))
    w.alphas.push_back(a.is_null() ? A0Element::iota() : A0Element::alpha(element_from_json(field, a)));
  for (const auto& h : member(j, "betas")) w.betas.push_back(poly_from_json(field, h));
  w.validate();
  return w;
}

std::string format_rational(const BigRational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Json to_json(const DirichletSeries& s) {
  Json out = Json::array();
  for (std::uint64_t n = 1; n <= s.horizon(); ++n) out.push_back({{"n", n}, {"value", format_rational(s[n])}});
  return out;
}

}  // namespace autcount
