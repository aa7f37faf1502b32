#include "wittstab/ring.hpp"

#include <charconv>
#include <sstream>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_same(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) fail(ErrorCode::SpecMismatch, "ring mismatch: " + a.tag() + " vs " + b.tag());
}

RingElem::Residue mod_p(const Integer& n, long p) {
  Integer r = n % p;
  if (r < 0) r += p;
  return static_cast<RingElem::Residue>(r.get_si());
}

RingElem::Residue mod_inverse(RingElem::Residue a, long p) {
  // a^(p-2) mod p
  RingElem::Residue result = 1, base = a % p;
  long e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

long parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(ErrorCode::InvalidInput, "bad integer in ring tag: " + std::string(s));
  return v;
}

void trim_laurent(RingElem::LaurentTerms& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::prime_field(long p) {
  if (!is_odd_prime(p)) fail(ErrorCode::InvalidInput, "prime field needs an odd prime, got " + std::to_string(p));
  if (p >= (1L << 31)) fail(ErrorCode::InvalidInput, "prime field modulus must be below 2^31");
  RingSpec s;
  s.kind_ = RingKind::PrimeField;
  s.p_ = p;
  return s;
}

RingSpec RingSpec::rationals() { return RingSpec{}; }

RingSpec RingSpec::dyadic() {
  RingSpec s;
  s.kind_ = RingKind::Dyadic;
  return s;
}

RingSpec RingSpec::laurent2() {
  RingSpec s;
  s.kind_ = RingKind::Laurent2;
  return s;
}

RingSpec RingSpec::trunc_nil(const RingSpec& base, int k) {
  if (base.kind() == RingKind::TruncNil) fail(ErrorCode::InvalidInput, "truncated base ring may not itself be truncated");
  if (k < 1) fail(ErrorCode::InvalidInput, "nilpotency order k must be >= 1");
  RingSpec s;
  s.kind_ = RingKind::TruncNil;
  s.k_ = k;
  s.base_ = std::make_shared<const RingSpec>(base);
  return s;
}

RingSpec RingSpec::parse(std::string_view tag) {
  if (tag == "q" || tag == "Q" || tag == "rationals") return rationals();
  if (tag == "dyadic" || tag == "z[1/2]" || tag == "Z[1/2]") return dyadic();
  if (tag == "laurent2") return laurent2();
  if (tag.rfind("fp:", 0) == 0) return prime_field(parse_long(tag.substr(3)));
  if (tag.rfind("trunc(", 0) == 0 && tag.back() == ')') {
    auto inner = tag.substr(6, tag.size() - 7);
    auto comma = inner.rfind(',');
    if (comma == std::string_view::npos) fail(ErrorCode::InvalidInput, "bad truncated ring tag: " + std::string(tag));
    return trunc_nil(parse(inner.substr(0, comma)), static_cast<int>(parse_long(inner.substr(comma + 1))));
  }
  fail(ErrorCode::InvalidInput, "unknown ring tag: " + std::string(tag));
}

long RingSpec::prime() const {
  if (kind_ != RingKind::PrimeField) fail(ErrorCode::SpecMismatch, "prime() on non prime field " + tag());
  return p_;
}

int RingSpec::nilpotency() const {
  if (kind_ != RingKind::TruncNil) fail(ErrorCode::SpecMismatch, "nilpotency() on non truncated ring " + tag());
  return k_;
}

const RingSpec& RingSpec::base() const {
  if (kind_ != RingKind::TruncNil) fail(ErrorCode::SpecMismatch, "base() on non truncated ring " + tag());
  return *base_;
}

std::string RingSpec::tag() const {
  switch (kind_) {
    case RingKind::PrimeField: return "fp:" + std::to_string(p_);
    case RingKind::Rationals: return "q";
    case RingKind::Dyadic: return "dyadic";
    case RingKind::Laurent2: return "laurent2";
    case RingKind::TruncNil: return "trunc(" + base_->tag() + "," + std::to_string(k_) + ")";
  }
  return "?";
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingKind::PrimeField: return a.p_ == b.p_;
    case RingKind::TruncNil: return a.k_ == b.k_ && *a.base_ == *b.base_;
    default: return true;
  }
}

// ---------------------------------------------------------------- helpers

bool is_power_of_two(const Integer& n) {
  if (n <= 0) return false;
  return mpz_scan1(n.get_mpz_t(), 0) == mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

bool is_dyadic(const Rational& q) { return is_power_of_two(q.get_den()); }

long two_adic_valuation(const Rational& q) {
  if (q == 0) fail(ErrorCode::InvalidInput, "2-adic valuation of zero");
  Integer num = abs(q.get_num());
  long vn = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
  long vd = static_cast<long>(mpz_scan1(q.get_den_mpz_t(), 0));
  return vn - vd;
}

// ---------------------------------------------------------------- RingElem

RingElem RingElem::zero(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::PrimeField: return RingElem(spec, Residue{0});
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem(spec, Rational(0));
    case RingKind::Laurent2: return RingElem(spec, LaurentTerms{});
    case RingKind::TruncNil:
      return RingElem(spec, TruncCoeffs(static_cast<std::size_t>(spec.nilpotency()), zero(spec.base())));
  }
  return RingElem(spec, Rational(0));
}

RingElem RingElem::one(const RingSpec& spec) { return from_integer(spec, Integer(1)); }

RingElem RingElem::from_integer(const RingSpec& spec, const Integer& n) {
  switch (spec.kind()) {
    case RingKind::PrimeField: return RingElem(spec, mod_p(n, spec.prime()));
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem(spec, Rational(n));
    case RingKind::Laurent2: {
      LaurentTerms terms;
      if (n != 0) terms.emplace(Monomial{0, 0}, Rational(n));
      return RingElem(spec, std::move(terms));
    }
    case RingKind::TruncNil: {
      RingElem r = zero(spec);
      std::get<TruncCoeffs>(r.value_)[0] = from_integer(spec.base(), n);
      return r;
    }
  }
  return zero(spec);
}

RingElem RingElem::from_rational(const RingSpec& spec, const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  switch (spec.kind()) {
    case RingKind::PrimeField: {
      long p = spec.prime();
      Residue den = mod_p(q.get_den(), p);
      if (den == 0) fail(ErrorCode::InvalidInput, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
      return RingElem(spec, mod_p(q.get_num(), p) * mod_inverse(den, p) % p);
    }
    case RingKind::Rationals: return RingElem(spec, q);
    case RingKind::Dyadic:
      if (!is_dyadic(q)) fail(ErrorCode::InvalidInput, q.get_str() + " is not in Z[1/2]");
      return RingElem(spec, q);
    case RingKind::Laurent2:
      if (!is_dyadic(q)) fail(ErrorCode::InvalidInput, q.get_str() + " is not in Z[1/2]");
      return monomial(q, 0, 0);
    case RingKind::TruncNil: {
      RingElem r = zero(spec);
      std::get<TruncCoeffs>(r.value_)[0] = from_rational(spec.base(), q);
      return r;
    }
  }
  return zero(spec);
}

RingElem RingElem::laurent(LaurentTerms terms) {
  for (auto& [mono, c] : terms) {
    c.canonicalize();
    if (!is_dyadic(c)) fail(ErrorCode::InvalidInput, "Laurent coefficient " + c.get_str() + " is not in Z[1/2]");
  }
  trim_laurent(terms);
  return RingElem(RingSpec::laurent2(), std::move(terms));
}

RingElem RingElem::monomial(const Rational& coeff, int t_exp, int z_exp) {
  LaurentTerms terms;
  terms.emplace(Monomial{t_exp, z_exp}, coeff);
  return laurent(std::move(terms));
}

RingElem RingElem::trunc(const RingSpec& spec, TruncCoeffs coeffs) {
  const auto k = static_cast<std::size_t>(spec.nilpotency());
  if (coeffs.size() > k) fail(ErrorCode::InvalidInput, "too many coefficients for " + spec.tag());
  for (const auto& c : coeffs) require_same(c.spec(), spec.base());
  coeffs.resize(k, zero(spec.base()));
  return RingElem(spec, std::move(coeffs));
}

RingElem RingElem::nil_generator(const RingSpec& spec) {
  RingElem r = zero(spec);
  if (spec.nilpotency() > 1) std::get<TruncCoeffs>(r.value_)[1] = one(spec.base());
  return r;
}

bool RingElem::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) return v == 0;
        else if constexpr (std::is_same_v<T, Residue>) return v == 0;
        else if constexpr (std::is_same_v<T, LaurentTerms>) return v.empty();
        else {
          for (const auto& c : v)
            if (!c.is_zero()) return false;
          return true;
        }
      },
      value_);
}

bool RingElem::is_one() const { return *this == one(spec_); }

bool RingElem::is_unit() const {
  switch (spec_.kind()) {
    case RingKind::PrimeField:
    case RingKind::Rationals: return !is_zero();
    case RingKind::Dyadic: {
      const auto& q = rational();
      return q != 0 && is_power_of_two(abs(q.get_num()));
    }
    case RingKind::Laurent2: {
      const auto& t = terms();
      return t.size() == 1 && is_power_of_two(abs(t.begin()->second.get_num()));
    }
    case RingKind::TruncNil: return coeffs()[0].is_unit();
  }
  return false;
}

const Rational& RingElem::rational() const {
  if (!spec_.is_rational_like()) fail(ErrorCode::SpecMismatch, "rational() on " + spec_.tag());
  return std::get<Rational>(value_);
}

RingElem::Residue RingElem::residue() const {
  if (spec_.kind() != RingKind::PrimeField) fail(ErrorCode::SpecMismatch, "residue() on " + spec_.tag());
  return std::get<Residue>(value_);
}

const RingElem::LaurentTerms& RingElem::terms() const {
  if (spec_.kind() != RingKind::Laurent2) fail(ErrorCode::SpecMismatch, "terms() on " + spec_.tag());
  return std::get<LaurentTerms>(value_);
}

const RingElem::TruncCoeffs& RingElem::coeffs() const {
  if (spec_.kind() != RingKind::TruncNil) fail(ErrorCode::SpecMismatch, "coeffs() on " + spec_.tag());
  return std::get<TruncCoeffs>(value_);
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same(a.spec_, b.spec_);
  switch (a.spec_.kind()) {
    case RingKind::PrimeField:
      return RingElem(a.spec_, (a.residue() + b.residue()) % a.spec_.prime());
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem(a.spec_, Rational(a.rational() + b.rational()));
    case RingKind::Laurent2: {
      auto terms = a.terms();
      for (const auto& [mono, c] : b.terms()) terms[mono] += c;
      trim_laurent(terms);
      return RingElem(a.spec_, std::move(terms));
    }
    case RingKind::TruncNil: {
      auto coeffs = a.coeffs();
      const auto& other = b.coeffs();
      for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = coeffs[i] + other[i];
      return RingElem(a.spec_, std::move(coeffs));
    }
  }
  return a;
}

RingElem operator-(const RingElem& a) {
  switch (a.spec_.kind()) {
    case RingKind::PrimeField: {
      const long p = a.spec_.prime();
      return RingElem(a.spec_, (p - a.residue()) % p);
    }
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem(a.spec_, Rational(-a.rational()));
    case RingKind::Laurent2: {
      auto terms = a.terms();
      for (auto& [mono, c] : terms) c = -c;
      return RingElem(a.spec_, std::move(terms));
    }
    case RingKind::TruncNil: {
      auto coeffs = a.coeffs();
      for (auto& c : coeffs) c = -c;
      return RingElem(a.spec_, std::move(coeffs));
    }
  }
  return a;
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same(a.spec_, b.spec_);
  switch (a.spec_.kind()) {
    case RingKind::PrimeField:
      return RingElem(a.spec_, a.residue() * b.residue() % a.spec_.prime());
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem(a.spec_, Rational(a.rational() * b.rational()));
    case RingKind::Laurent2: {
      RingElem::LaurentTerms terms;
      for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) terms[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
      trim_laurent(terms);
      return RingElem(a.spec_, std::move(terms));
    }
    case RingKind::TruncNil: {
      const auto& ca = a.coeffs();
      const auto& cb = b.coeffs();
      const std::size_t k = ca.size();
      RingElem::TruncCoeffs out(k, RingElem::zero(a.spec_.base()));
      for (std::size_t i = 0; i < k; ++i) {
        if (ca[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < k; ++j) out[i + j] += ca[i] * cb[j];
      }
      return RingElem(a.spec_, std::move(out));
    }
  }
  return a;
}

bool operator==(const RingElem& a, const RingElem& b) { return a.spec_ == b.spec_ && a.value_ == b.value_; }

RingElem inverse(const RingElem& a) {
  if (!a.is_unit()) fail(ErrorCode::NonUnit, to_string(a) + " is not a unit in " + a.spec().tag());
  const auto& spec = a.spec();
  switch (spec.kind()) {
    case RingKind::PrimeField: {
      return RingElem::from_integer(spec, Integer(static_cast<long>(mod_inverse(a.residue(), spec.prime()))));
    }
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem::from_rational(spec, Rational(1) / a.rational());
    case RingKind::Laurent2: {
      const auto& [mono, c] = *a.terms().begin();
      return RingElem::monomial(Rational(1) / c, -mono.first, -mono.second);
    }
    case RingKind::TruncNil: {
      // b_0 = a_0^{-1}, b_m = -a_0^{-1} * sum_{i=1..m} a_i b_{m-i}
      const auto& ca = a.coeffs();
      const std::size_t k = ca.size();
      const RingElem a0_inv = inverse(ca[0]);
      RingElem::TruncCoeffs b(k, RingElem::zero(spec.base()));
      b[0] = a0_inv;
      for (std::size_t m = 1; m < k; ++m) {
        RingElem acc = RingElem::zero(spec.base());
        for (std::size_t i = 1; i <= m; ++i) acc += ca[i] * b[m - i];
        b[m] = -(a0_inv * acc);
      }
      return RingElem::trunc(spec, std::move(b));
    }
  }
  return a;
}

RingElem involute(const RingElem& a) {
  switch (a.spec().kind()) {
    case RingKind::Laurent2: {
      RingElem::LaurentTerms terms;
      for (const auto& [mono, c] : a.terms()) terms.emplace(RingElem::Monomial{-mono.first, -mono.second}, c);
      return RingElem::laurent(std::move(terms));
    }
    case RingKind::TruncNil: {
      auto coeffs = a.coeffs();
      for (auto& c : coeffs) c = involute(c);
      return RingElem::trunc(a.spec(), std::move(coeffs));
    }
    default: return a;
  }
}

RingElem power(const RingElem& a, long e) {
  if (e < 0) return power(inverse(a), -e);
  RingElem result = RingElem::one(a.spec());
  RingElem base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RingElem ring_arith(const RingElem& a, const RingElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return inverse(a);
  }
  return a;
}

std::string to_string(const RingElem& a) {
  switch (a.spec().kind()) {
    case RingKind::PrimeField: return std::to_string(a.residue());
    case RingKind::Rationals:
    case RingKind::Dyadic: return rational_text(a.rational());
    case RingKind::Laurent2: {
      if (a.terms().empty()) return "0";
      std::ostringstream os;
      bool first = true;
      for (const auto& [mono, c] : a.terms()) {
        if (!first) os << " + ";
        first = false;
        os << rational_text(c);
        if (mono.first != 0) os << "*t^" << mono.first;
        if (mono.second != 0) os << "*z^" << mono.second;
      }
      return os.str();
    }
    case RingKind::TruncNil: {
      std::ostringstream os;
      bool first = true;
      const auto& cs = a.coeffs();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(cs[i]) << ")";
        if (i > 0) os << "*x^" << i;
      }
      return first ? "0" : os.str();
    }
  }
  return "?";
}

}  // namespace wittstab
