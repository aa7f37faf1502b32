#include "wittstab/nilpotent.hpp"

#include <random>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

RingElem half(const RingSpec& r) { return inverse(RingElem::from_integer(r, 2)); }

bool is_base_ring(const RingSpec& r) { return r.kind() == RingKind::Rationals || r.kind() == RingKind::PrimeField; }

bool truncated(const RingSpec& r) { return r.kind() == RingKind::TruncNil; }

void require_truncated(const Matrix& m, const char* what) {
  if (!truncated(m.ring())) fail(ErrorCode::SpecMismatch, std::string(what) + " must be over a truncated ring, got " + m.ring().tag());
}

using Engine = std::mt19937_64;

RingElem random_base(const RingSpec& b, Engine& rng) {
  if (b.kind() == RingKind::PrimeField)
    return RingElem::from_integer(b, std::uniform_int_distribution<long>(0, b.prime() - 1)(rng));
  const long num = std::uniform_int_distribution<long>(-3, 3)(rng);
  const long den = std::uniform_int_distribution<long>(1, 3)(rng);
  Rational q(num, den);
  q.canonicalize();
  return RingElem::from_rational(b, q);
}

Matrix random_base_matrix(const RingSpec& b, std::size_t n, Engine& rng) {
  Matrix m(b, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_base(b, rng);
  return m;
}

// A random lift of m: m + x N_1 + ... + x^(k-1) N_(k-1).
Matrix random_lift(const Matrix& m, const RingSpec& truncated_ring, Engine& rng) {
  const RingSpec& b = m.ring();
  const int k = truncated_ring.nilpotency();
  std::vector<Matrix> layers{m};
  for (int i = 1; i < k; ++i) layers.push_back(random_base_matrix(b, m.rows(), rng));
  Matrix out(truncated_ring, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      RingElem::TruncCoeffs c;
      for (const auto& layer : layers) c.push_back(layer(i, j));
      out(i, j) = RingElem::trunc(truncated_ring, c);
    }
  return out;
}

Matrix random_symmetric_involution(const RingSpec& b, std::size_t n, Engine& rng) {
  Matrix o = Matrix::identity(b, n);
  const RingElem two = RingElem::from_integer(b, 2);
  for (std::size_t step = 0; step < n + 1; ++step) {
    Matrix v(b, n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = random_base(b, rng);
    const RingElem norm = (v.transpose() * v)(0, 0);
    if (norm.is_zero()) continue;
    const Matrix h = Matrix::identity(b, n) - (two * inverse(norm)) * (v * v.transpose());
    o = o * h;
  }
  std::vector<RingElem> signs;
  for (std::size_t i = 0; i < n; ++i) signs.push_back(RingElem::from_integer(b, std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1));
  return o * Matrix::diagonal(b, signs) * o.transpose();
}

}  // namespace

SelfAdjInvolution::SelfAdjInvolution(Matrix j) : j_(std::move(j)) {
  if (!j_.is_square()) fail(ErrorCode::InvalidInput, "involution must be square");
  if (!(j_ * j_ == Matrix::identity(j_.ring(), j_.rows()))) fail(ErrorCode::InvalidInput, "J^2 != I");
  if (!(conj_transpose(j_) == j_)) fail(ErrorCode::InvalidInput, "J is not self-adjoint");
}

Matrix reduce_mod_I(const Matrix& m) {
  if (!truncated(m.ring())) return m;
  return map_entries(m, m.ring().base(), [](const RingElem& e) { return e.coeffs()[0]; });
}

SelfAdjInvolution reduce_mod_I(const SelfAdjInvolution& j) { return SelfAdjInvolution(reduce_mod_I(j.matrix())); }

Matrix embed(const Matrix& m, const RingSpec& truncated_ring) {
  if (!truncated(truncated_ring) || !(truncated_ring.base() == m.ring()))
    fail(ErrorCode::SpecMismatch, "cannot embed " + m.ring().tag() + " matrices into " + truncated_ring.tag());
  return map_entries(m, truncated_ring, [&](const RingElem& e) { return RingElem::trunc(truncated_ring, {e}); });
}

InvolutionLift lift_involution_steps(const SelfAdjInvolution& jbar, const Matrix& r) {
  require_truncated(r, "lift");
  if (!(r.ring().base() == jbar.ring())) fail(ErrorCode::SpecMismatch, "lift over " + r.ring().tag() + " of an involution over " + jbar.ring().tag());
  if (!(reduce_mod_I(r) == jbar.matrix())) fail(ErrorCode::NotALift, "R does not reduce to the given involution");
  const RingSpec& ring = r.ring();
  const std::size_t n = r.rows();
  const Matrix eta = conj_transpose(r) - r;
  const Matrix s = r + half(ring) * eta;
  const Matrix gamma = s * s - Matrix::identity(ring, n);
  ensure_identity(conj_transpose(gamma) == gamma && gamma * s == s * gamma, "gamma is self-adjoint and commutes with S");
  const Matrix u = inv_sqrt_one_plus(gamma);
  SelfAdjInvolution lifted(s * u);
  ensure_identity(reduce_mod_I(lifted.matrix()) == jbar.matrix(), "lift reduces to the involution");
  return {eta, s, gamma, u, std::move(lifted)};
}

SelfAdjInvolution lift_involution(const SelfAdjInvolution& jbar, const Matrix& r) { return lift_involution_steps(jbar, r).lifted; }

Matrix associated_projection(const SelfAdjInvolution& j) {
  const RingSpec& r = j.ring();
  const Matrix p = half(r) * (Matrix::identity(r, j.dim()) - j.matrix());
  ensure_identity(p * p == p && conj_transpose(p) == p, "projection is idempotent and self-adjoint");
  return p;
}

Matrix lift_unitary(const Matrix& alpha, const Matrix& beta) {
  require_truncated(beta, "lift");
  if (!alpha.is_square() || !beta.is_square()) fail(ErrorCode::InvalidInput, "unitary lifts need square matrices");
  if (!(beta.ring().base() == alpha.ring())) fail(ErrorCode::SpecMismatch, "lift over " + beta.ring().tag() + " of a matrix over " + alpha.ring().tag());
  const std::size_t n = alpha.rows();
  if (!(alpha * conj_transpose(alpha) == Matrix::identity(alpha.ring(), n))) fail(ErrorCode::NotUnitaryMod, "alpha alpha* != I");
  if (!(reduce_mod_I(beta) == alpha)) fail(ErrorCode::NotALift, "beta does not reduce to alpha");
  const Matrix id = Matrix::identity(beta.ring(), n);
  // beta* beta rather than beta beta*: functions of beta* beta commute with it, so gamma* gamma = I
  const Matrix gamma = beta * inv_sqrt_one_plus(conj_transpose(beta) * beta - id);
  ensure_identity(gamma * conj_transpose(gamma) == id && conj_transpose(gamma) * gamma == id, "gamma is unitary");
  ensure_identity(reduce_mod_I(gamma) == alpha, "gamma reduces to alpha");
  return gamma;
}

Conjugator conjugating_unitary_steps(const SelfAdjInvolution& j1, const SelfAdjInvolution& j2) {
  if (!(j1.ring() == j2.ring())) fail(ErrorCode::SpecMismatch, "involutions over " + j1.ring().tag() + " and " + j2.ring().tag());
  if (j1.dim() != j2.dim()) fail(ErrorCode::SpecMismatch, "involutions of different sizes");
  if (!(reduce_mod_I(j1.matrix()) == reduce_mod_I(j2.matrix()))) fail(ErrorCode::NotCongruent, "J1 and J2 differ modulo the ideal");
  const RingSpec& r = j1.ring();
  const std::size_t n = j1.dim();
  const Matrix id = Matrix::identity(r, n);
  const Matrix& a = j1.matrix();
  const Matrix& b = j2.matrix();
  // (1 + J2 J1)/2 intertwines; the order J1 J2 does not in general
  const Matrix delta = half(r) * (id + b * a);
  ensure_identity(delta * a == b * delta, "delta J1 = J2 delta");
  const Matrix dd = delta * conj_transpose(delta);
  ensure_identity(dd * a == a * dd, "delta delta* commutes with J1");
  ensure_identity(dd == conj_transpose(delta) * delta, "delta is normal");
  const Matrix delta_prime = delta * inv_sqrt_one_plus(dd - id);
  const Matrix dp_star = conj_transpose(delta_prime);
  ensure_identity(delta_prime * dp_star == id, "delta' is unitary");
  ensure_identity(delta_prime * a * dp_star == b, "delta' conjugates J1 to J2");
  return {delta, delta_prime};
}

Matrix conjugating_unitary(const SelfAdjInvolution& j1, const SelfAdjInvolution& j2) { return conjugating_unitary_steps(j1, j2).delta_prime; }

Matrix random_symmetric_involution(const RingSpec& base, std::size_t n, std::uint64_t seed) {
  if (!is_base_ring(base)) fail(ErrorCode::InvalidInput, "base ring must be Q or F_p, got " + base.tag());
  Engine rng(seed);
  return random_symmetric_involution(base, n, rng);
}

RoundtripReport roundtrip_isomorphism_demo(const RingSpec& base, int k, std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (!is_base_ring(base)) fail(ErrorCode::InvalidInput, "base ring must be Q or F_p, got " + base.tag());
  if (k < 1 || k > 6) fail(ErrorCode::InvalidInput, "k must lie in 1..6");
  if (n < 1 || n > 8) fail(ErrorCode::InvalidInput, "n must lie in 1..8");
  RoundtripReport report;
  report.base = base;
  report.k = k;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  const RingSpec ring = RingSpec::trunc_nil(base, k);
  const Matrix id = Matrix::identity(ring, n);
  auto record = [&](const std::string& what) {
    if (report.failures.size() < 10) report.failures.push_back(what);
  };
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Engine rng(seed * 1000003ULL + trial);
    const SelfAdjInvolution jbar(random_symmetric_involution(base, n, rng));
    // surjectivity
    try {
      const SelfAdjInvolution j = lift_involution(jbar, random_lift(jbar.matrix(), ring, rng));
      const Matrix& m = j.matrix();
      if (m * m == id && conj_transpose(m) == m && reduce_mod_I(m) == jbar.matrix())
        ++report.surjectivity_ok;
      else
        record("trial " + std::to_string(trial) + ": lift fails a postcondition");
    } catch (const std::exception& e) {
      record("trial " + std::to_string(trial) + ": " + e.what());
    }
    // injectivity
    try {
      const SelfAdjInvolution j1 = lift_involution(jbar, random_lift(jbar.matrix(), ring, rng));
      const SelfAdjInvolution j2 = lift_involution(jbar, random_lift(jbar.matrix(), ring, rng));
      const Matrix d = conjugating_unitary(j1, j2);
      const Matrix ds = conj_transpose(d);
      if (d * ds == id && d * j1.matrix() * ds == j2.matrix() && reduce_mod_I(d) == Matrix::identity(base, n))
        ++report.injectivity_ok;
      else
        record("trial " + std::to_string(trial) + ": conjugator fails a postcondition");
    } catch (const std::exception& e) {
      record("trial " + std::to_string(trial) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace wittstab
