#include "qlink/qalgebra/poly_json.hpp"

#include "qlink/errors.hpp"

namespace qlink {

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.get_str();
  Json j;
  j["var"] = std::string(1, p.var());
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.contains("var") || !j.contains("coeffs"))
    throw ArgumentError("polynomial JSON needs 'var' and 'coeffs'");
  std::string var = j.at("var").get<std::string>();
  if (var.size() != 1) throw ArgumentError("polynomial variable must be one letter");
  std::vector<LaurentPoly::Term> ts;
  for (const auto& [k, v] : j.at("coeffs").items()) {
    BigInt c;
    if (v.is_string())
      c = BigInt(v.get<std::string>());
    else
      c = BigInt(v.get<long>());
    ts.emplace_back(std::stoi(k), c);
  }
  return LaurentPoly(var[0], std::move(ts));
}

Json to_json(const BiLaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back(Json::array({k.first, k.second, c.get_str()}));
  Json j;
  j["vars"] = Json::array({std::string(1, p.var1()), std::string(1, p.var2())});
  j["terms"] = std::move(terms);
  return j;
}

std::string rational_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qlink
