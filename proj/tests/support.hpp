#pragma once

// Random generators and independent oracles shared by the unit suites.

#include <random>
#include <vector>

#include "wittstab/matrix.hpp"

namespace wittstab::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_dyadic(Rng& rng) { return Rational(uniform(rng, -6, 6), 1L << uniform(rng, 0, 2)); }

inline Rational small_rational(Rng& rng) { return Rational(uniform(rng, -6, 6), uniform(rng, 1, 5)); }

inline RingElem random_elem(const RingSpec& spec, Rng& rng) {
  switch (spec.kind()) {
    case RingKind::PrimeField: return RingElem::from_integer(spec, uniform(rng, 0, spec.prime() - 1));
    case RingKind::Rationals: {
      Rational q = small_rational(rng);
      q.canonicalize();
      return RingElem::from_rational(spec, q);
    }
    case RingKind::Dyadic: return RingElem::from_rational(spec, small_dyadic(rng));
    case RingKind::Laurent2: {
      RingElem::LaurentTerms terms;
      const long count = uniform(rng, 0, 3);
      for (long i = 0; i < count; ++i)
        terms[{static_cast<int>(uniform(rng, -2, 2)), static_cast<int>(uniform(rng, -2, 2))}] += small_dyadic(rng);
      return RingElem::laurent(terms);
    }
    case RingKind::TruncNil: {
      RingElem::TruncCoeffs cs;
      for (int i = 0; i < spec.nilpotency(); ++i) cs.push_back(random_elem(spec.base(), rng));
      return RingElem::trunc(spec, cs);
    }
  }
  return RingElem::zero(spec);
}

inline RingElem random_unit(const RingSpec& spec, Rng& rng) {
  for (;;) {
    switch (spec.kind()) {
      case RingKind::Dyadic:
        return RingElem::from_rational(spec, Rational(uniform(rng, 0, 1) ? 1 : -1) * Rational(1L << uniform(rng, 0, 3), 1L << uniform(rng, 0, 3)));
      case RingKind::Laurent2:
        return RingElem::monomial(Rational(uniform(rng, 0, 1) ? 2 : -1, 1L << uniform(rng, 0, 2)), static_cast<int>(uniform(rng, -2, 2)),
                                  static_cast<int>(uniform(rng, -2, 2)));
      default: {
        auto e = random_elem(spec, rng);
        if (e.is_unit()) return e;
      }
    }
  }
}

inline Matrix random_matrix(const RingSpec& spec, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_elem(spec, rng);
  return m;
}

/// Laplace expansion along the first row. Exponential, used only as an oracle on small inputs.
inline RingElem cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return RingElem::one(m.ring());
  if (n == 1) return m(0, 0);
  RingElem acc = RingElem::zero(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(m.ring(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    RingElem term = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace wittstab::testing
