#include "confspace/poly_json.hpp"

#include <stdexcept>

namespace confspace {

nlohmann::ordered_json poly_to_json(const MultiPoly& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] != 0) exps[p.variables()[i]] = t.exps[i];
    }
    out.push_back(nlohmann::ordered_json::array({t.coeff.get_str(), exps}));
  }
  return out;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  MultiPoly out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) {
      throw std::invalid_argument("polynomial term must be [coefficient, exponents]");
    }
    BigInt c;
    if (c.set_str(term[0].get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad coefficient " + term[0].dump());
    }
    std::map<std::string, std::uint32_t> exps;
    for (const auto& [v, e] : term[1].items()) exps[v] = e.get<std::uint32_t>();
    out += MultiPoly::monomial(c, exps);
  }
  return out;
}

}  // namespace confspace
