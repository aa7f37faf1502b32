#include "wittstab/number_theory.hpp"

#include <algorithm>
#include <map>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of an odd composite n.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    auto step = [&](const Integer& x) -> Integer { return Integer((x * x + c) % n); };
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          y = step(y);
          q = Integer(q * abs(x - y) % n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += 128;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = rho_factor(n);
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n_in) {
  Integer n = abs(n_in);
  std::map<Integer, unsigned> found;
  for (unsigned long d = 2; d < 1000 && Integer(d) * d <= n; d += (d == 2 ? 1 : 2))
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++found[Integer(d)];
    }
  split(n, found);
  return {found.begin(), found.end()};
}

Integer integral_square_class(const Rational& q) {
  if (q == 0) fail(ErrorCode::InvalidInput, "square class of zero");
  return q.get_num() * q.get_den();
}

Integer squarefree_part(const Rational& q) {
  const Integer n = integral_square_class(q);
  Integer out = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) out *= p;
  return out;
}

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t());
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) fail(ErrorCode::InvalidInput, "valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

namespace {

long pow_mod(long b, long e, long p) {
  __int128 result = 1, base = ((b % p) + p) % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<long>(result);
}

}  // namespace

long smallest_nonresidue(long p) {
  for (long n = 2; n < p; ++n)
    if (pow_mod(n, (p - 1) / 2, p) == p - 1) return n;
  fail(ErrorCode::InvalidInput, "no quadratic non-residue modulo " + std::to_string(p));
}

long sqrt_mod(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0 || pow_mod(a, (p - 1) / 2, p) != 1) fail(ErrorCode::InvalidInput, "not a nonzero square modulo p");
  long q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  const long z = smallest_nonresidue(p);
  long m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0;
    for (__int128 t2 = t; t2 != 1; t2 = t2 * t2 % p) ++i;
    long b = c;
    for (long j = 0; j < m - i - 1; ++j) b = static_cast<long>(static_cast<__int128>(b) * b % p);
    m = i;
    c = static_cast<long>(static_cast<__int128>(b) * b % p);
    t = static_cast<long>(static_cast<__int128>(t) * c % p);
    r = static_cast<long>(static_cast<__int128>(r) * b % p);
  }
  return r;
}

}  // namespace wittstab
