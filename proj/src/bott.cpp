#include "wittstab/bott.hpp"

#include <algorithm>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

const RingSpec L = RingSpec::laurent2();

RingElem lit(const Rational& q) { return RingElem::from_rational(L, q); }

RingElem pow_signed(const RingElem& a, int e) { return e >= 0 ? power(a, e) : power(inverse(a), -e); }

// Entrywise conjugate transpose under t -> 1/t, z -> 1/z.
Matrix star(const Matrix& m) { return conj_transpose(m); }

Matrix symplectic(const RingSpec& r) {
  return Matrix::from_rows(r, {{RingElem::zero(r), RingElem::one(r)}, {RingElem::from_integer(r, -1), RingElem::zero(r)}});
}

void require_laurent(const Matrix& m) {
  if (m.ring().kind() != RingKind::Laurent2) fail(ErrorCode::SpecMismatch, "specialize needs a Laurent2 matrix, got " + m.ring().tag());
}

}  // namespace

bool is_laurent_unit(const RingElem& a) { return a.spec().kind() == RingKind::Laurent2 && a.is_unit(); }

BottData build_bott(const Rational& lambda, const Rational& lambda_bar) {
  if (lambda != Rational(1, 2) || lambda_bar != Rational(1, 2))
    fail(ErrorCode::InvalidInput, "the Bott data is defined for lambda = lambda_bar = 1/2 only");
  BottData bd;
  bd.lambda = lambda;
  bd.lambda_bar = lambda_bar;
  const RingElem one = RingElem::one(L), z = RingElem::z(), t = RingElem::t();
  const RingElem l = lit(lambda), lb = lit(lambda_bar);
  bd.p0 = Matrix::from_rows(L, {{one, RingElem::zero(L)}, {RingElem::zero(L), RingElem::zero(L)}});
  bd.u = Matrix::from_rows(L, {{lb * z + l, l * lb * (z - one)}, {z - one, l * z + lb}});
  const DetInverse di = det_and_inverse(bd.u);
  ensure_identity(di.inverse.has_value(), "u is not invertible");
  bd.u_inverse = *di.inverse;
  bd.p = bd.u * bd.p0 * bd.u_inverse;
  bd.a = bd.p(0, 0);
  bd.b = bd.p(0, 1);
  bd.c = bd.p(1, 0);
  bd.d = bd.p(1, 1);
  const RingElem t_inv = inverse(t);
  bd.M = Matrix::from_rows(L, {{bd.b * (t + t_inv - lit(2)), bd.a + (one - bd.a) * t}, {-(one - bd.d + bd.d * t_inv), -bd.c}});
  const BottReport report = verify_bott_suite(bd);
  for (const auto& c : report.checks) ensure_identity(c.passed, "Bott identity failed: " + c.name + " " + c.detail);
  return bd;
}

Matrix specialize(const Matrix& m, const Assignment& assignment) {
  require_laurent(m);
  for (const auto* v : {&assignment.t, &assignment.z})
    if (*v && !v->value().is_unit()) fail(ErrorCode::NonUnitAssignment, "assigned value " + to_string(v->value()) + " is not a unit");
  RingSpec target = L;
  if (assignment.t && assignment.z) {
    if (!(assignment.t->spec() == assignment.z->spec()))
      fail(ErrorCode::SpecMismatch, "t and z assigned in " + assignment.t->spec().tag() + " and " + assignment.z->spec().tag());
    target = assignment.t->spec();
  } else {
    for (const auto* v : {&assignment.t, &assignment.z})
      if (*v && v->value().spec().kind() != RingKind::Laurent2)
        fail(ErrorCode::SpecMismatch, "a free variable remains, so assigned values must lie in Laurent2");
  }
  const RingElem tv = assignment.t ? *assignment.t : RingElem::t();
  const RingElem zv = assignment.z ? *assignment.z : RingElem::z();
  return map_entries(m, target, [&](const RingElem& e) {
    RingElem acc = RingElem::zero(target);
    for (const auto& [mono, coeff] : e.terms())
      acc += RingElem::from_rational(target, coeff) * pow_signed(tv, mono.first) * pow_signed(zv, mono.second);
    return acc;
  });
}

Matrix specialize(const BottData& bd, const Assignment& assignment) { return specialize(bd.M, assignment); }

bool BottReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BottCheck& c) { return c.passed; });
}

BottReport verify_bott_suite(const BottData& bd) {
  BottReport r;
  auto check = [&](std::string name, auto&& body) {
    BottCheck c{std::move(name), false, ""};
    try {
      c.passed = body(c.detail);
    } catch (const Error& e) {
      c.detail = e.what();
    }
    r.checks.push_back(std::move(c));
  };
  const RingElem one = RingElem::one(L);
  check("det(u) = z", [&](std::string& detail) {
    const RingElem du = det(bd.u);
    detail = to_string(du);
    return du == RingElem::z();
  });
  check("u u^-1 = 1", [&](std::string&) { return bd.u * bd.u_inverse == Matrix::identity(L, 2); });
  check("p = u p0 u^-1", [&](std::string&) { return bd.p == bd.u * bd.p0 * bd.u_inverse; });
  check("p^2 = p", [&](std::string&) { return bd.p * bd.p == bd.p; });
  check("a + d = 1", [&](std::string& detail) {
    detail = to_string(bd.a + bd.d);
    return (bd.a + bd.d).is_one();
  });
  check("det(M) is a unit", [&](std::string& detail) {
    const RingElem dm = det(bd.M);
    detail = to_string(dm);
    return is_laurent_unit(dm);
  });
  check("M at z = 1 is [[0,1],[-1,0]]", [&](std::string& detail) {
    const Matrix s = specialize(bd.M, {std::nullopt, one});
    detail = to_string(s);
    return s == symplectic(L);
  });
  check("M at t = 1 has det 1", [&](std::string& detail) {
    const Matrix s = specialize(bd.M, {one, std::nullopt});
    detail = to_string(s);
    const Matrix expected = Matrix::from_rows(L, {{RingElem::zero(L), one}, {-one, -bd.c}});
    return s == expected && det(s).is_one();
  });
  check("M at t = z = 1 is [[0,1],[-1,0]]", [&](std::string&) {
    const RingSpec dy = RingSpec::dyadic();
    return specialize(bd.M, {RingElem::one(dy), RingElem::one(dy)}) == symplectic(dy);
  });
  // relations under the involution, reported as found
  auto relation = [&](std::string name, auto&& test) {
    BottRelation rel{std::move(name), false};
    try {
      rel.holds = test();
    } catch (const Error&) {
      rel.holds = false;
    }
    r.relations.push_back(std::move(rel));
  };
  relation("conj(a) = a", [&] { return involute(bd.a) == bd.a; });
  relation("conj(b) = -b", [&] { return involute(bd.b) == -bd.b; });
  relation("conj(c) = -c", [&] { return involute(bd.c) == -bd.c; });
  relation("conj(d) = d", [&] { return involute(bd.d) == bd.d; });
  relation("p* = p", [&] { return star(bd.p) == bd.p; });
  relation("M* = M", [&] { return star(bd.M) == bd.M; });
  relation("M* = -M", [&] { return star(bd.M) == -bd.M; });
  relation("det(M) = 1", [&] { return det(bd.M).is_one(); });
  return r;
}

}  // namespace wittstab
