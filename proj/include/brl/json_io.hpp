#pragma once

// JSON forms. Polynomials serialize as {"N": n, "terms": [{"exp": [...],
// "coeff": "decimal"}, ...]} with terms in canonical (descending) order and
// exponents listed as [e_A, e_B, e_z1, ..., e_zN]. Table/file-level wrappers
// carry a schema tag "v": 1.

#include <string>

#include "brl/poly.hpp"
#include "brl/zring.hpp"

namespace brl {

std::string poly_to_json(const ZRing& ring, const Poly& p, bool pretty = false);
Poly poly_from_json(const ZRing& ring, const std::string& text);

}  // namespace brl
