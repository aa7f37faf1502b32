#pragma once

// The explicit Bott element data over Z[1/2][t, 1/t, z, 1/z] and its matrix-level identities.

#include <optional>
#include <string>
#include <vector>

#include "wittstab/matrix.hpp"

namespace wittstab {

/// p0 = [[1,0],[0,0]], u = [[lb z + l, l lb (z-1)], [z-1, l z + lb]] with l = lb = 1/2,
/// p = u p0 u^-1 = [[a, b], [c, d]], M = [[b(t + 1/t - 2), a + (1-a)t], [-(1 - d + d/t), -c]].
struct BottData {
  Rational lambda{1, 2};
  Rational lambda_bar{1, 2};
  Matrix p0;
  Matrix u;
  Matrix u_inverse;
  Matrix p;
  RingElem a, b, c, d;
  Matrix M;
};

/// Builds the data symbolically and asserts its defining identities.
/// Throws InvalidInput unless lambda = lambda_bar = 1/2.
BottData build_bott(const Rational& lambda = Rational(1, 2), const Rational& lambda_bar = Rational(1, 2));

/// Values for t and z. Unassigned variables stay symbolic, which requires the assigned values to lie
/// in Laurent2; when both are assigned they may lie in any ring (F_p, Q, Z[1/2], Laurent2).
struct Assignment {
  std::optional<RingElem> t;
  std::optional<RingElem> z;
};

/// Entrywise substitution into a Laurent2 matrix. Throws NonUnitAssignment for non-unit values,
/// SpecMismatch for values in different rings or non-Laurent values with a variable left free.
Matrix specialize(const Matrix& m, const Assignment& assignment);
Matrix specialize(const BottData& bd, const Assignment& assignment);

/// Units of Laurent2: +-2^k t^i z^j.
bool is_laurent_unit(const RingElem& a);

struct BottCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A relation that was computed and reported without being required.
struct BottRelation {
  std::string name;
  bool holds = false;
};

struct BottReport {
  std::vector<BottCheck> checks;
  std::vector<BottRelation> relations;
  bool all_passed() const;
};

/// Recomputes every identity from the fields of bd, so corrupted data fails the relevant checks.
BottReport verify_bott_suite(const BottData& bd);

}  // namespace wittstab
