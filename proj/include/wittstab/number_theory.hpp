#pragma once

// Elementary number theory used by the form deciders.

#include <utility>
#include <vector>

#include "wittstab/ring.hpp"

namespace wittstab {

/// Prime factorization of |n| (trial division, then Pollard rho), primes increasing.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// Squarefree integer in the square class of a nonzero rational.
Integer squarefree_part(const Rational& q);

/// Integer in the square class of q: num * den.
Integer integral_square_class(const Rational& q);

bool is_rational_square(const Rational& q);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, const Integer& p);

/// Legendre symbol (a/p), p an odd prime, a not divisible by p.
int legendre(const Integer& a, const Integer& p);

long smallest_nonresidue(long p);

/// Square root modulo an odd prime (Tonelli-Shanks); a must be a nonzero residue.
long sqrt_mod(long a, long p);

}  // namespace wittstab
