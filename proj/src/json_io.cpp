#include "brl/json_io.hpp"

#include <json.hpp>

namespace brl {

using nlohmann::json;
using nlohmann::ordered_json;

namespace detail {

ordered_json poly_to_obj(const ZRing& ring, const Poly& p) {
  ordered_json obj;
  obj["N"] = ring.N();
  ordered_json terms = ordered_json::array();
  for (const auto& t : p.terms()) {
    ordered_json term;
    ordered_json exps = ordered_json::array();
    for (int v = 0; v < ring.nvars(); ++v) exps.push_back(static_cast<int>(t.first[v]));
    term["exp"] = std::move(exps);
    term["coeff"] = t.second.str();
    terms.push_back(std::move(term));
  }
  obj["terms"] = std::move(terms);
  return obj;
}

Poly poly_from_obj(const ZRing& ring, const json& obj) {
  if (!obj.is_object() || !obj.contains("N") || !obj.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs N and terms");
  if (obj["N"].get<int>() != ring.N())
    throw std::invalid_argument("polynomial JSON has mismatched N");
  std::vector<Poly::Term> raw;
  for (const auto& term : obj["terms"]) {
    const auto& exps = term["exp"];
    if (static_cast<int>(exps.size()) != ring.nvars())
      throw std::invalid_argument("exponent vector has wrong length");
    Monomial m;
    for (int v = 0; v < ring.nvars(); ++v) m.set(v, exps[static_cast<size_t>(v)].get<int>());
    raw.emplace_back(m, Int(term["coeff"].get<std::string>()));
  }
  return Poly::from_terms(ring.nvars(), std::move(raw));
}

}  // namespace detail

std::string poly_to_json(const ZRing& ring, const Poly& p, bool pretty) {
  ordered_json obj = detail::poly_to_obj(ring, p);
  return pretty ? obj.dump(2) : obj.dump();
}

Poly poly_from_json(const ZRing& ring, const std::string& text) {
  return detail::poly_from_obj(ring, json::parse(text));
}

}  // namespace brl
