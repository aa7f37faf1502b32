#include "doctest.h"
#include "support.hpp"
#include "wittstab/errors.hpp"
#include "wittstab/nilpotent.hpp"

using namespace wittstab;
using namespace wittstab::testing;

namespace {

const RingSpec Q = RingSpec::rationals();
const RingSpec F5 = RingSpec::prime_field(5);
const RingSpec F7 = RingSpec::prime_field(7);

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

// sum_i x^i layers[i] over B[x]/(x^k)
Matrix from_layers(const RingSpec& truncated, const std::vector<Matrix>& layers) {
  const Matrix& m0 = layers.front();
  Matrix out(truncated, m0.rows(), m0.cols());
  for (std::size_t i = 0; i < m0.rows(); ++i)
    for (std::size_t j = 0; j < m0.cols(); ++j) {
      RingElem::TruncCoeffs c;
      for (const auto& l : layers) c.push_back(l(i, j));
      out(i, j) = RingElem::trunc(truncated, c);
    }
  return out;
}

Matrix random_lift(const Matrix& m, const RingSpec& truncated, Rng& rng) {
  std::vector<Matrix> layers{m};
  for (int i = 1; i < truncated.nilpotency(); ++i) layers.push_back(random_matrix(m.ring(), m.rows(), m.cols(), rng));
  return from_layers(truncated, layers);
}

// Product of reflections I - 2 v v^T / (v^T v): orthogonal over B.
Matrix random_orthogonal(const RingSpec& b, std::size_t n, Rng& rng) {
  Matrix o = Matrix::identity(b, n);
  for (int step = 0; step < 4; ++step) {
    const Matrix v = random_matrix(b, n, 1, rng);
    const RingElem norm = (v.transpose() * v)(0, 0);
    if (norm.is_zero()) continue;
    o = o * (Matrix::identity(b, n) - (RingElem::from_integer(b, 2) * inverse(norm)) * (v * v.transpose()));
  }
  return o;
}

Matrix scalar(const RingSpec& r, std::vector<RingElem::TruncCoeffs::value_type> c) {
  Matrix m(r, 1, 1);
  m(0, 0) = RingElem::trunc(r, std::move(c));
  return m;
}

}  // namespace

TEST_CASE("reduce_mod_I") {
  const RingSpec r = RingSpec::trunc_nil(Q, 3);
  Rng rng(3);
  const Matrix n = random_matrix(Q, 3, 3, rng);
  CHECK(reduce_mod_I(from_layers(r, {Matrix::identity(Q, 3), n})) == Matrix::identity(Q, 3));
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(r, 3, 3, rng), b = random_matrix(r, 3, 3, rng);
    CHECK(reduce_mod_I(a * b) == reduce_mod_I(a) * reduce_mod_I(b));
    CHECK(reduce_mod_I(a + b) == reduce_mod_I(a) + reduce_mod_I(b));
    CHECK(reduce_mod_I(conj_transpose(a)) == conj_transpose(reduce_mod_I(a)));
  }
  const SelfAdjInvolution jbar(random_symmetric_involution(F5, 4, 7));
  const SelfAdjInvolution j = lift_involution(jbar, random_lift(jbar.matrix(), RingSpec::trunc_nil(F5, 3), rng));
  CHECK(reduce_mod_I(j).matrix() == jbar.matrix());
  CHECK(embed(jbar.matrix(), RingSpec::trunc_nil(F5, 3)) * embed(jbar.matrix(), RingSpec::trunc_nil(F5, 3)) ==
        Matrix::identity(RingSpec::trunc_nil(F5, 3), 4));
}

TEST_CASE("SelfAdjInvolution validation") {
  CHECK(code_of([] { SelfAdjInvolution(Matrix::from_rationals(Q, {{1, 1}, {0, -1}})); }) == ErrorCode::InvalidInput);  // involution, not symmetric
  CHECK(code_of([] { SelfAdjInvolution(Matrix::from_rationals(Q, {{2}})); }) == ErrorCode::InvalidInput);
  CHECK_NOTHROW(SelfAdjInvolution(Matrix::from_rationals(Q, {{0, 1}, {1, 0}})));
}

TEST_CASE("lift_involution") {
  SUBCASE("1x1 over Q[x]/(x^2): R = 1 + c x") {
    const RingSpec r = RingSpec::trunc_nil(Q, 2);
    const SelfAdjInvolution jbar(Matrix::from_rationals(Q, {{1}}));
    for (long c : {1L, -3L, 5L}) {
      const RingElem cq = RingElem::from_integer(Q, c);
      const auto steps = lift_involution_steps(jbar, scalar(r, {RingElem::one(Q), cq}));
      CHECK(steps.eta.is_zero());
      CHECK(steps.s == scalar(r, {RingElem::one(Q), cq}));
      CHECK(steps.gamma == scalar(r, {RingElem::zero(Q), RingElem::from_integer(Q, 2 * c)}));
      CHECK(steps.u == scalar(r, {RingElem::one(Q), -cq}));
      CHECK(steps.lifted.matrix() == Matrix::identity(r, 1));
    }
  }
  SUBCASE("a self-adjoint involution is a fixed point") {
    Rng rng(5);
    const RingSpec r = RingSpec::trunc_nil(F5, 3);
    const SelfAdjInvolution jbar(random_symmetric_involution(F5, 3, 11));
    const SelfAdjInvolution j = lift_involution(jbar, random_lift(jbar.matrix(), r, rng));
    const auto steps = lift_involution_steps(jbar, j.matrix());
    CHECK(steps.eta.is_zero());
    CHECK(steps.gamma.is_zero());
    CHECK(steps.u == Matrix::identity(r, 3));
    CHECK(steps.lifted.matrix() == j.matrix());
  }
  SUBCASE("random 4x4 over F_5, k = 4") {
    Rng rng(7);
    const RingSpec r = RingSpec::trunc_nil(F5, 4);
    for (int trial = 0; trial < 20; ++trial) {
      const SelfAdjInvolution jbar(random_symmetric_involution(F5, 4, static_cast<std::uint64_t>(trial)));
      const Matrix m = lift_involution(jbar, random_lift(jbar.matrix(), r, rng)).matrix();
      CHECK(m * m == Matrix::identity(r, 4));
      CHECK(conj_transpose(m) == m);
      CHECK(reduce_mod_I(m) == jbar.matrix());
    }
  }
  SUBCASE("lifts from different starting points are conjugate by a unitary congruent to I") {
    Rng rng(13);
    const RingSpec r = RingSpec::trunc_nil(Q, 3);
    for (int trial = 0; trial < 10; ++trial) {
      const SelfAdjInvolution jbar(random_symmetric_involution(Q, 3, static_cast<std::uint64_t>(100 + trial)));
      const auto j1 = lift_involution(jbar, random_lift(jbar.matrix(), r, rng));
      const auto j2 = lift_involution(jbar, random_lift(jbar.matrix(), r, rng));
      const Matrix d = conjugating_unitary(j1, j2);
      CHECK(d * conj_transpose(d) == Matrix::identity(r, 3));
      CHECK(d * j1.matrix() * conj_transpose(d) == j2.matrix());
      CHECK(reduce_mod_I(d) == Matrix::identity(Q, 3));
    }
  }
  SUBCASE("errors") {
    const RingSpec r = RingSpec::trunc_nil(Q, 2);
    const SelfAdjInvolution jbar(Matrix::from_rationals(Q, {{1}}));
    CHECK(code_of([&] { lift_involution(jbar, scalar(r, {RingElem::from_integer(Q, -1)})); }) == ErrorCode::NotALift);
    CHECK(code_of([&] { lift_involution(jbar, Matrix::from_rationals(Q, {{1}})); }) == ErrorCode::SpecMismatch);
    CHECK(code_of([&] { lift_involution(jbar, Matrix::identity(RingSpec::trunc_nil(F5, 2), 1)); }) == ErrorCode::SpecMismatch);
  }
}

TEST_CASE("associated_projection") {
  CHECK(associated_projection(SelfAdjInvolution(Matrix::identity(Q, 3))).is_zero());
  CHECK(associated_projection(SelfAdjInvolution(Matrix::from_rationals(Q, {{-1, 0}, {0, -1}}))) == Matrix::identity(Q, 2));
  CHECK(associated_projection(SelfAdjInvolution(Matrix::from_rationals(Q, {{1, 0}, {0, -1}}))) == Matrix::from_rationals(Q, {{0, 0}, {0, 1}}));
  Rng rng(17);
  const RingSpec r = RingSpec::trunc_nil(F7, 3);
  const SelfAdjInvolution jbar(random_symmetric_involution(F7, 4, 3));
  const auto j = lift_involution(jbar, random_lift(jbar.matrix(), r, rng));
  const Matrix p = associated_projection(j);
  CHECK(p * p == p);
  CHECK(conj_transpose(p) == p);
  CHECK(j.matrix() * p == -p);  // image of P is the -1 eigenspace
  CHECK(reduce_mod_I(p) == associated_projection(jbar));
}

TEST_CASE("lift_unitary") {
  SUBCASE("beta = 1 + x over Q[x]/(x^2) gives 1") {
    const RingSpec r = RingSpec::trunc_nil(Q, 2);
    const Matrix beta = scalar(r, {RingElem::one(Q), RingElem::one(Q)});
    CHECK(lift_unitary(Matrix::identity(Q, 1), beta) == Matrix::identity(r, 1));
  }
  SUBCASE("a unitary beta is returned unchanged") {
    Rng rng(19);
    const RingSpec r = RingSpec::trunc_nil(F7, 3);
    const Matrix alpha = random_orthogonal(F7, 3, rng);
    const Matrix g = lift_unitary(alpha, random_lift(alpha, r, rng));
    CHECK(lift_unitary(alpha, g) == g);
  }
  SUBCASE("random 3x3 over F_7, k = 3") {
    Rng rng(23);
    const RingSpec r = RingSpec::trunc_nil(F7, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix alpha = random_orthogonal(F7, 3, rng);
      const Matrix g = lift_unitary(alpha, random_lift(alpha, r, rng));
      CHECK(g * conj_transpose(g) == Matrix::identity(r, 3));
      CHECK(reduce_mod_I(g) == alpha);
    }
  }
  SUBCASE("the polar factor must use beta* beta") {
    // beta = [[1, x], [0, 1]] over Q[x]/(x^3): beta (beta beta*)^(-1/2) is not unitary (mod x^2 it would be)
    const RingSpec r = RingSpec::trunc_nil(Q, 3);
    const Matrix beta = from_layers(r, {Matrix::identity(Q, 2), Matrix::from_rationals(Q, {{0, 1}, {0, 0}})});
    const Matrix id = Matrix::identity(r, 2);
    const Matrix other = beta * inv_sqrt_one_plus(beta * conj_transpose(beta) - id);
    const Matrix g = lift_unitary(Matrix::identity(Q, 2), beta);
    CHECK(g * conj_transpose(g) == id);
    CHECK_FALSE(other * conj_transpose(other) == id);
  }
  SUBCASE("errors") {
    const RingSpec r = RingSpec::trunc_nil(Q, 2);
    CHECK(code_of([&] { lift_unitary(Matrix::from_rationals(Q, {{2}}), scalar(r, {RingElem::from_integer(Q, 2)})); }) == ErrorCode::NotUnitaryMod);
    CHECK(code_of([&] { lift_unitary(Matrix::identity(Q, 1), scalar(r, {RingElem::from_integer(Q, -1)})); }) == ErrorCode::NotALift);
  }
}

TEST_CASE("conjugating_unitary") {
  SUBCASE("J1 = J2") {
    const RingSpec r = RingSpec::trunc_nil(Q, 2);
    const SelfAdjInvolution j(Matrix::identity(r, 1));
    const auto steps = conjugating_unitary_steps(j, j);
    CHECK(steps.delta == Matrix::identity(r, 1));
    CHECK(steps.delta_prime == Matrix::identity(r, 1));
    // over Q[x]/(x^2), (1 + a x)^2 = 1 forces a = 0: the only lift of [1] is [1]
    for (long a = -3; a <= 3; ++a) {
      const Matrix m = scalar(r, {RingElem::one(Q), RingElem::from_integer(Q, a)});
      CHECK((m * m == Matrix::identity(r, 1)) == (a == 0));
    }
  }
  SUBCASE("J2 = nu J1 nu^-1 with nu unitary and congruent to I, 4x4 over F_5, k = 3") {
    Rng rng(29);
    const RingSpec r = RingSpec::trunc_nil(F5, 3);
    for (int trial = 0; trial < 15; ++trial) {
      const SelfAdjInvolution jbar(random_symmetric_involution(F5, 4, static_cast<std::uint64_t>(200 + trial)));
      const auto j1 = lift_involution(jbar, random_lift(jbar.matrix(), r, rng));
      const Matrix nu = lift_unitary(Matrix::identity(F5, 4), random_lift(Matrix::identity(F5, 4), r, rng));
      const SelfAdjInvolution j2(nu * j1.matrix() * conj_transpose(nu));
      const auto steps = conjugating_unitary_steps(j1, j2);
      const Matrix& d = steps.delta_prime;
      CHECK(d * conj_transpose(d) == Matrix::identity(r, 4));
      CHECK(d * j1.matrix() * conj_transpose(d) == j2.matrix());
      CHECK(steps.delta * j1.matrix() == j2.matrix() * steps.delta);
    }
  }
  SUBCASE("the order (1 + J1 J2)/2 does not intertwine in general") {
    Rng rng(31);
    const RingSpec r = RingSpec::trunc_nil(Q, 3);
    int failures = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const SelfAdjInvolution jbar(random_symmetric_involution(Q, 3, static_cast<std::uint64_t>(300 + trial)));
      const Matrix a = lift_involution(jbar, random_lift(jbar.matrix(), r, rng)).matrix();
      const Matrix b = lift_involution(jbar, random_lift(jbar.matrix(), r, rng)).matrix();
      const Matrix printed = RingElem::from_rational(r, q(1, 2)) * (Matrix::identity(r, 3) + a * b);
      if (!(printed * a == b * printed)) ++failures;
    }
    CHECK(failures > 0);
  }
  SUBCASE("errors") {
    const RingSpec r = RingSpec::trunc_nil(Q, 2);
    const SelfAdjInvolution plus(Matrix::identity(r, 1)), minus(-Matrix::identity(r, 1));
    CHECK(code_of([&] { conjugating_unitary(plus, minus); }) == ErrorCode::NotCongruent);
    CHECK(code_of([&] { conjugating_unitary(plus, SelfAdjInvolution(Matrix::identity(RingSpec::trunc_nil(Q, 3), 1))); }) == ErrorCode::SpecMismatch);
  }
}

TEST_CASE("roundtrip_isomorphism_demo") {
  const auto q2 = roundtrip_isomorphism_demo(Q, 2, 2, 100);
  CHECK(q2.surjectivity_ok == 100);
  CHECK(q2.injectivity_ok == 100);
  CHECK(q2.all_ok());
  const auto f5 = roundtrip_isomorphism_demo(F5, 4, 4, 100);
  CHECK(f5.all_ok());
  const auto trivial = roundtrip_isomorphism_demo(Q, 1, 3, 20);
  CHECK(trivial.all_ok());
  CHECK(roundtrip_isomorphism_demo(Q, 3, 3, 5, 42).all_ok());
  CHECK(code_of([] { roundtrip_isomorphism_demo(Q, 7, 2, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { roundtrip_isomorphism_demo(Q, 2, 9, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { roundtrip_isomorphism_demo(RingSpec::dyadic(), 2, 2, 1); }) == ErrorCode::InvalidInput);
}
