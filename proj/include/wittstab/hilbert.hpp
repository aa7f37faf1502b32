#pragma once

// Hilbert symbols over Q and the local-global isotropy test for rational diagonal forms.

#include <optional>
#include <string>
#include <vector>

#include "wittstab/ring.hpp"

namespace wittstab {

/// A place of Q: a prime p, or the real place.
struct Place {
  bool infinite = true;
  Integer prime = 0;

  static Place real() { return {}; }
  static Place at(const Integer& p) { return {false, p}; }
  std::string to_string() const { return infinite ? "inf" : prime.get_str(); }
  friend bool operator==(const Place& a, const Place& b) { return a.infinite == b.infinite && a.prime == b.prime; }
};

/// (a, b)_v in {+1, -1}; a, b nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where some symbol (a, b) can be -1: the real place, 2, and odd primes dividing a or b.
std::vector<Place> relevant_places(const std::vector<Rational>& values);

bool is_local_square(const Rational& a, const Place& v);

/// Product over i < j of (a_i, a_j)_v.
int hasse_invariant(const std::vector<Rational>& diag, const Place& v);

/// Isotropy of the diagonal form over the completion Q_v.
bool locally_isotropic(const std::vector<Rational>& diag, const Place& v);

/// Isotropy over Q by Hasse-Minkowski.
bool rationally_isotropic(const std::vector<Rational>& diag);

}  // namespace wittstab

namespace wittstab {

/// Nonzero rational x with sum a_i x_i^2 = 0, or nullopt when the form is anisotropic over Q.
/// Ternary forms are solved by Lagrange descent on Legendre's equation; larger forms split as
/// <a_1, a_2> + <a_3, ...> along a common represented value found by searching |t| <= t_bound.
/// Throws OracleInconclusive if that search is exhausted.
std::optional<std::vector<Rational>> rational_isotropic_vector(const std::vector<Rational>& diag, long t_bound = 200000);

}  // namespace wittstab
