#pragma once

// JSON (de)serialization of structure-constant algebras:
//   {"dim": n, "field": {"kind": "Q"} | {"kind": "Fp", "p": 2},
//    "table": [{"i": 1, "j": 2, "k": 3, "c": "1/2"}, ...]}
// Indices are 1-based; omitted entries are zero; coefficients are decimal
// integers or "a/b" strings (numbers are also accepted on input).

#include <string>

#include "lienil/structure_algebra.hpp"

namespace lienil {

// Deterministic rendering (sorted keys, ascending (i,j,k), coefficients as
// strings); loaded algebras come back with flavor plain.
std::string algebra_to_json(const StructureAlgebra& alg);
StructureAlgebra algebra_from_json(const std::string& text);

}  // namespace lienil
