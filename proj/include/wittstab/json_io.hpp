#pragma once

// JSON encodings.
//
//   Integer     JSON number when it fits in 64 bits, decimal string otherwise
//   Rational    [num, den] with den > 0, reduced
//   RingSpec    tag string ("q", "dyadic", "fp:7", "laurent2", "trunc(q,3)")
//   RingElem    {"ring": tag, "value": payload}
//               payload: q/dyadic -> [num, den]; fp -> [residue, 1];
//                        laurent2 -> [[t_exp, z_exp, [num, den]], ...] sorted by exponents;
//                        trunc -> [payload_0, ..., payload_{k-1}]
//   Matrix      {"ring": tag, "rows": r, "cols": c, "entries": [[payload, ...], ...]}
//   FgAbGroup   {"rank": r, "torsion": [t...]} or {"generators": n, "relations": [[...], ...]}

#include "json.hpp"
#include "wittstab/abelian.hpp"
#include "wittstab/matrix.hpp"

namespace wittstab {

using Json = nlohmann::json;

Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json rational_to_json(const Rational& q);
/// Accepts [num, den], an integer, or a string "a" / "a/b".
Rational rational_from_json(const Json& j);

Json payload_to_json(const RingElem& e);
RingElem payload_from_json(const RingSpec& spec, const Json& j);

Json ring_elem_to_json(const RingElem& e);
RingElem ring_elem_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json int_matrix_to_json(const IntMatrix& m);
/// Rows of integers; an empty or missing matrix is accepted when either dimension is zero.
IntMatrix int_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

}  // namespace wittstab
