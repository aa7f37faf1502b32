#include "wittstab/json_io.hpp"

#include <limits>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

}  // namespace

Json integer_to_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return Json(n.get_si());
  return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.dump());
    return n;
  }
  bad("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}); }

Rational rational_from_json(const Json& j) {
  Rational q;
  if (j.is_array()) {
    if (j.size() != 2) bad("fraction must be [num, den]: " + j.dump());
    Integer den = integer_from_json(j[1]);
    if (den == 0) bad("zero denominator: " + j.dump());
    q = Rational(integer_from_json(j[0]), den);
  } else if (j.is_number_integer()) {
    q = Rational(j.get<long>());
  } else if (j.is_string()) {
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) bad("not a rational: " + j.dump());
  } else {
    bad("expected a rational, got " + j.dump());
  }
  q.canonicalize();
  return q;
}

Json payload_to_json(const RingElem& e) {
  switch (e.spec().kind()) {
    case RingKind::PrimeField: return Json::array({e.residue(), 1});
    case RingKind::Rationals:
    case RingKind::Dyadic: return rational_to_json(e.rational());
    case RingKind::Laurent2: {
      Json out = Json::array();
      for (const auto& [mono, c] : e.terms()) out.push_back(Json::array({mono.first, mono.second, rational_to_json(c)}));
      return out;
    }
    case RingKind::TruncNil: {
      Json out = Json::array();
      for (const auto& c : e.coeffs()) out.push_back(payload_to_json(c));
      return out;
    }
  }
  return nullptr;
}

RingElem payload_from_json(const RingSpec& spec, const Json& j) {
  switch (spec.kind()) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::Dyadic: return RingElem::from_rational(spec, rational_from_json(j));
    case RingKind::Laurent2: {
      if (!j.is_array()) bad("Laurent payload must be an array of [t_exp, z_exp, coeff]");
      RingElem::LaurentTerms terms;
      for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) bad("bad Laurent term: " + term.dump());
        const long te = term[0].get<long>(), ze = term[1].get<long>();
        if (te < std::numeric_limits<int>::min() || te > std::numeric_limits<int>::max() || ze < std::numeric_limits<int>::min() ||
            ze > std::numeric_limits<int>::max())
          bad("Laurent exponent out of range: " + term.dump());
        terms[{static_cast<int>(te), static_cast<int>(ze)}] += rational_from_json(term[2]);
      }
      return RingElem::laurent(std::move(terms));
    }
    case RingKind::TruncNil: {
      if (!j.is_array()) bad("truncated payload must be an array of coefficients");
      RingElem::TruncCoeffs cs;
      for (const auto& c : j) cs.push_back(payload_from_json(spec.base(), c));
      return RingElem::trunc(spec, std::move(cs));
    }
  }
  bad("unsupported ring");
}

Json ring_elem_to_json(const RingElem& e) { return Json{{"ring", e.spec().tag()}, {"value", payload_to_json(e)}}; }

RingElem ring_elem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("value")) bad("ring element needs ring and value");
  return payload_from_json(RingSpec::parse(j.at("ring").get<std::string>()), j.at("value"));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(payload_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"ring", m.ring().tag()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) bad("matrix must be an object");
  const RingSpec spec = RingSpec::parse(j.at("ring").get<std::string>());
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) bad("matrix entries do not match rows");
  Matrix m(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) bad("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = payload_from_json(spec, entries[i][k]);
  }
  return m;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  if (j.is_null() || (j.is_array() && j.empty())) {
    if (rows == 0 || cols == 0) return m;
    bad("missing " + std::to_string(rows) + "x" + std::to_string(cols) + " integer matrix");
  }
  if (!j.is_array() || j.size() != rows) bad("integer matrix must have " + std::to_string(rows) + " rows: " + j.dump());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("integer matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

Json group_to_json(const FgAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.shape().torsion) torsion.push_back(integer_to_json(t));
  return Json{{"rank", g.shape().free_rank}, {"torsion", torsion}};
}

FgAbGroup group_from_json(const Json& j) {
  if (!j.is_object()) bad("group must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "rank" && key != "torsion" && key != "generators" && key != "relations") bad("unknown group field: " + key);
  if (j.contains("generators")) {
    const auto n = j.at("generators").get<std::size_t>();
    const Json rel = j.value("relations", Json::array());
    const std::size_t m = rel.empty() ? 0 : rel[0].size();
    return FgAbGroup(n, int_matrix_from_json(rel, n, m));
  }
  const auto rank = j.value("rank", std::size_t{0});
  std::vector<Integer> torsion;
  for (const auto& t : j.value("torsion", Json::array())) torsion.push_back(integer_from_json(t));
  return FgAbGroup::from_shape(rank, torsion);
}

}  // namespace wittstab
