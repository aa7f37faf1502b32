#include "wittstab/hilbert.hpp"

#include <algorithm>
#include <array>

#include "wittstab/errors.hpp"
#include "wittstab/number_theory.hpp"

namespace wittstab {

namespace {

// a = p^alpha * u with u prime to p
std::pair<unsigned, Integer> split(const Integer& a, const Integer& p) {
  Integer u = a;
  unsigned alpha = 0;
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    u /= p;
    ++alpha;
  }
  return {alpha, u};
}

int sign_power(bool odd) { return odd ? -1 : 1; }

// epsilon(u) = (u - 1)/2 mod 2, omega(u) = (u^2 - 1)/8 mod 2 for odd u
bool eps2(const Integer& u) {
  Integer r = u % 4;
  if (r < 0) r += 4;
  return r == 3;
}
bool omega2(const Integer& u) {
  Integer r = u % 8;
  if (r < 0) r += 8;
  return r == 3 || r == 5;
}

}  // namespace

int hilbert_symbol(const Rational& a_in, const Rational& b_in, const Place& v) {
  if (a_in == 0 || b_in == 0) fail(ErrorCode::InvalidInput, "Hilbert symbol of zero");
  const Integer a = integral_square_class(a_in), b = integral_square_class(b_in);
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = v.prime;
  const auto [alpha, u] = split(a, p);
  const auto [beta, w] = split(b, p);
  if (p == 2) return sign_power((eps2(u) && eps2(w)) ^ ((alpha & 1) && omega2(w)) ^ ((beta & 1) && omega2(u)));
  const Integer half = (p - 1) / 2;
  int out = sign_power((alpha & 1) && (beta & 1) && mpz_odd_p(half.get_mpz_t()));
  if (beta & 1) out *= legendre(u, p);
  if (alpha & 1) out *= legendre(w, p);
  return out;
}

std::vector<Place> relevant_places(const std::vector<Rational>& values) {
  std::vector<Integer> primes{2};
  for (const auto& q : values)
    for (const auto& [p, e] : factorize(integral_square_class(q)))
      if (p != 2) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back(Place::at(p));
  return out;
}

bool is_local_square(const Rational& a_in, const Place& v) {
  const Integer a = integral_square_class(a_in);
  if (v.infinite) return a > 0;
  const auto [alpha, u] = split(a, v.prime);
  if (alpha % 2 == 1) return false;
  if (v.prime == 2) {
    Integer r = u % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  return legendre(u, v.prime) == 1;
}

int hasse_invariant(const std::vector<Rational>& diag, const Place& v) {
  int out = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) out *= hilbert_symbol(diag[i], diag[j], v);
  return out;
}

bool locally_isotropic(const std::vector<Rational>& diag, const Place& v) {
  const std::size_t n = diag.size();
  if (n <= 1) return false;
  if (v.infinite)
    return std::any_of(diag.begin(), diag.end(), [](const Rational& a) { return a > 0; }) &&
           std::any_of(diag.begin(), diag.end(), [](const Rational& a) { return a < 0; });
  Rational d = 1;
  for (const auto& a : diag) d *= a;
  if (n == 2) return is_local_square(-d, v);
  const int eps = hasse_invariant(diag, v);
  if (n == 3) return hilbert_symbol(-1, -d, v) == eps;
  if (n == 4) return !is_local_square(d, v) || eps == hilbert_symbol(-1, -1, v);
  return true;
}

bool rationally_isotropic(const std::vector<Rational>& diag) {
  if (diag.size() == 2) return is_rational_square(-diag[0] * diag[1]);
  for (const auto& v : relevant_places(diag))
    if (!locally_isotropic(diag, v)) return false;
  return diag.size() >= 2;
}

}  // namespace wittstab

namespace wittstab {

namespace {

Rational rsqrt(const Rational& q) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(n, d);
}

// t with t^2 = a mod |b|, |t| <= |b|/2, b squarefree; nullopt if a is not a square modulo b
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& b) {
  Integer t = 0, modulus = 1;
  for (const auto& [p, e] : factorize(b)) {
    Integer r = a % p;
    if (r < 0) r += p;
    Integer root;
    if (r == 0 || p == 2) {
      root = r;
    } else {
      if (legendre(r, p) != 1) return std::nullopt;
      if (!mpz_fits_slong_p(p.get_mpz_t()) || p > (Integer(1) << 31)) fail(ErrorCode::UnsupportedRing, "prime too large for a modular square root");
      root = sqrt_mod(r.get_si(), p.get_si());
    }
    // CRT: t = t mod modulus, root mod p
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    Integer k = ((root - t) % p) * inv % p;
    if (k < 0) k += p;
    t += modulus * k;
    modulus *= p;
  }
  if (2 * t > modulus) t -= modulus;
  return t;
}

// (x, y, z) != 0 with x^2 = a y^2 + b z^2, a and b squarefree; nullopt if none exists
std::optional<std::array<Rational, 3>> legendre_solve(Integer a, Integer b) {
  if (a == 1) return std::array<Rational, 3>{1, 1, 0};
  if (b == 1) return std::array<Rational, 3>{1, 0, 1};
  if (abs(a) > abs(b)) {
    auto s = legendre_solve(b, a);
    if (!s) return std::nullopt;
    return std::array<Rational, 3>{(*s)[0], (*s)[2], (*s)[1]};
  }
  if (abs(b) == 1) {
    // a, b in {-1}: x^2 = -y^2 - z^2 has no solution; a = 1 handled above
    return std::nullopt;
  }
  const auto t = sqrt_mod_squarefree(a, b);
  if (!t) return std::nullopt;
  const Integer k = (*t * *t - a) / b;
  if (k == 0) return std::nullopt;  // a square and squarefree means a = 1, handled above
  // k = k1 * m^2, k1 squarefree
  Integer k1 = sgn(k) < 0 ? -1 : 1, m = 1;
  for (const auto& [p, e] : factorize(k)) {
    if (e % 2 == 1) k1 *= p;
    for (unsigned i = 0; i < e / 2; ++i) m *= p;
  }
  auto s = legendre_solve(a, k1);
  if (!s) return std::nullopt;
  const auto& [X, Y, Z] = *s;
  // N(t + sqrt a) N(X + Y sqrt a) = b k1^2 m^2 Z^2
  return std::array<Rational, 3>{Rational(*t) * X + Rational(a) * Y, X + Rational(*t) * Y, Rational(k1 * m) * Z};
}

std::vector<Rational> solve_ternary(const std::vector<Rational>& d) {
  // a1 x^2 + a2 y^2 + a3 z^2 = 0  <=>  (a1 x)^2 = (-a1 a2) y^2 + (-a1 a3) z^2
  const Rational A = -d[0] * d[1], B = -d[0] * d[2];
  const Integer As = squarefree_part(A), Bs = squarefree_part(B);
  const Rational sa = rsqrt(A / Rational(As)), sb = rsqrt(B / Rational(Bs));  // A = As sa^2
  auto s = legendre_solve(As, Bs);
  ensure_identity(s.has_value(), "Legendre equation unsolvable for a locally isotropic form");
  const auto& [X, Y, Z] = *s;
  return {X / d[0], Y / sa, Z / sb};
}

}  // namespace

std::optional<std::vector<Rational>> rational_isotropic_vector(const std::vector<Rational>& diag, long t_bound) {
  const std::size_t n = diag.size();
  if (n < 2 || !rationally_isotropic(diag)) return std::nullopt;
  std::vector<Rational> out;
  if (n == 2) {
    out = {rsqrt(-diag[1] / diag[0]), 1};
  } else if (n == 3) {
    out = solve_ternary(diag);
  } else {
    // a smaller leading subform may already be isotropic
    const std::vector<Rational> head(diag.begin(), diag.end() - 1);
    if (auto v = rational_isotropic_vector(head, t_bound)) {
      out = *v;
      out.push_back(0);
    } else {
      const std::vector<Rational> pair(diag.begin(), diag.begin() + 2);
      const std::vector<Rational> rest(diag.begin() + 2, diag.end());
      for (long k = 1; k <= t_bound && out.empty(); ++k) {
        for (long t : {k, -k}) {
          auto left = pair;
          left.push_back(-t);
          auto right = rest;
          right.push_back(t);
          if (!rationally_isotropic(left) || !rationally_isotropic(right)) continue;
          const auto x = *rational_isotropic_vector(left, t_bound);   // a1 x1^2 + a2 x2^2 = t s1^2
          const auto y = *rational_isotropic_vector(right, t_bound);  // sum a_i y_i^2 = -t s2^2
          const Rational s1 = x.back(), s2 = y.back();
          if (s2 == 0) {
            out.assign(2, 0);
            out.insert(out.end(), y.begin(), y.end() - 1);
          } else if (s1 == 0) {
            out.assign(x.begin(), x.end() - 1);
            out.resize(n, 0);
          } else {
            for (std::size_t i = 0; i < 2; ++i) out.push_back(x[i] * s2);
            for (std::size_t i = 0; i + 1 < y.size(); ++i) out.push_back(y[i] * s1);
          }
          break;
        }
      }
      if (out.empty()) fail(ErrorCode::OracleInconclusive, "no common represented value with |t| <= " + std::to_string(t_bound));
    }
  }
  Rational q = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    q += diag[i] * out[i] * out[i];
    nonzero = nonzero || out[i] != 0;
  }
  ensure_identity(nonzero && q == 0, "constructed vector is not isotropic");
  return out;
}

}  // namespace wittstab
