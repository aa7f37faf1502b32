#pragma once

// Exact coefficient rings with involution. Every supported ring has 2 invertible.
//
//   PrimeField   F_p, p an odd prime below 2^31, trivial involution
//   Rationals    Q, trivial involution
//   Dyadic       Z[1/2] (rationals with power-of-two denominators), trivial involution
//   Laurent2     Z[1/2][t, 1/t, z, 1/z] with t -> 1/t, z -> 1/z
//   TruncNil     B[x]/(x^k) over a non-truncated base B, with x fixed by the involution

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wittstab {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { PrimeField, Rationals, Dyadic, Laurent2, TruncNil };

class RingSpec {
 public:
  RingSpec() = default;  // Rationals

  static RingSpec prime_field(long p);
  static RingSpec rationals();
  static RingSpec dyadic();
  static RingSpec laurent2();
  static RingSpec trunc_nil(const RingSpec& base, int k);

  /// Accepts the tags produced by tag(): "q", "dyadic", "fp:<p>", "laurent2", "trunc(<base>,<k>)".
  static RingSpec parse(std::string_view tag);

  RingKind kind() const noexcept { return kind_; }
  long prime() const;
  int nilpotency() const;
  const RingSpec& base() const;

  bool is_field() const noexcept { return kind_ == RingKind::PrimeField || kind_ == RingKind::Rationals; }
  /// Rationals and Dyadic share the reduced-fraction payload.
  bool is_rational_like() const noexcept { return kind_ == RingKind::Rationals || kind_ == RingKind::Dyadic; }

  std::string tag() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingKind kind_ = RingKind::Rationals;
  long p_ = 0;
  int k_ = 0;
  std::shared_ptr<const RingSpec> base_;
};

class RingElem {
 public:
  using Residue = std::int64_t;
  /// (exponent of t, exponent of z)
  using Monomial = std::pair<int, int>;
  using LaurentTerms = std::map<Monomial, Rational>;
  using TruncCoeffs = std::vector<RingElem>;

  RingElem() : RingElem(zero(RingSpec::rationals())) {}

  static RingElem zero(const RingSpec& spec);
  static RingElem one(const RingSpec& spec);
  static RingElem from_integer(const RingSpec& spec, const Integer& n);
  static RingElem from_integer(const RingSpec& spec, long n) { return from_integer(spec, Integer(n)); }
  /// Throws InvalidInput when q has no image in spec (e.g. 1/3 in Dyadic, 1/p in F_p).
  static RingElem from_rational(const RingSpec& spec, const Rational& q);

  static RingElem laurent(LaurentTerms terms);
  static RingElem monomial(const Rational& coeff, int t_exp, int z_exp);
  static RingElem t() { return monomial(1, 1, 0); }
  static RingElem z() { return monomial(1, 0, 1); }

  /// Coefficients 0..k-1 over spec.base(); shorter lists are zero-padded, longer ones rejected.
  static RingElem trunc(const RingSpec& spec, TruncCoeffs coeffs);
  static RingElem nil_generator(const RingSpec& spec);

  const RingSpec& spec() const noexcept { return spec_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const Rational& rational() const;
  Residue residue() const;
  const LaurentTerms& terms() const;
  const TruncCoeffs& coeffs() const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a);
  RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
  RingElem& operator-=(const RingElem& b) { return *this = *this - b; }
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }

  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  using Payload = std::variant<Rational, Residue, LaurentTerms, TruncCoeffs>;
  RingElem(RingSpec spec, Payload value) : spec_(std::move(spec)), value_(std::move(value)) {}

  RingSpec spec_;
  Payload value_;
};

enum class ArithOp { Add, Mul, Neg, Inv };

RingElem ring_arith(const RingElem& a, const RingElem& b, ArithOp op);

/// Throws NonUnit.
RingElem inverse(const RingElem& a);
RingElem involute(const RingElem& a);
RingElem power(const RingElem& a, long e);

std::string to_string(const RingElem& a);

// Dyadic helpers shared by several modules.
bool is_power_of_two(const Integer& n);
bool is_dyadic(const Rational& q);
/// 2-adic valuation of a nonzero rational.
long two_adic_valuation(const Rational& q);

}  // namespace wittstab
