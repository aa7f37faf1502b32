#include "wittstab/codecs.hpp"

#include <algorithm>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

void only_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) bad(what + " must be an object");
  for (const auto& [key, _] : j.items())
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
      bad("unknown " + what + " field: " + key);
}

Json integers(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_to_json(x));
  return out;
}

Json rational_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RingElem& e = m(i, j);
      row.push_back(e.spec().kind() == RingKind::PrimeField ? Json(e.residue()) : Json(e.spec().is_rational_like() ? e.rational().get_str() : to_string(e)));
    }
    rows.push_back(row);
  }
  return rows;
}

GroupHom hom_from_json(const FgAbGroup& source, const FgAbGroup& target, const Json& map) {
  return GroupHom(source, target, int_matrix_from_json(map, target.generators(), source.generators()));
}

}  // namespace

Matrix gram_from_json(const RingSpec& ring, const Json& rows) {
  if (!rows.is_array()) bad("gram must be an array of rows");
  const std::size_t n = rows.size();
  std::vector<std::vector<Rational>> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) bad("gram must be square");
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(rational_from_json(e));
    entries.push_back(std::move(r));
  }
  return n == 0 ? Matrix(ring, 0, 0) : Matrix::from_rationals(ring, entries);
}

Json form_to_json(const GramForm& f) {
  return Json{{"ring", f.ring().tag()}, {"epsilon", f.epsilon()}, {"gram", rational_rows(f.gram())}};
}

GramForm form_from_json(const Json& j) {
  only_fields(j, {"ring", "epsilon", "gram"}, "form");
  const RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
  const int eps = j.value("epsilon", 1);
  return GramForm(gram_from_json(ring, j.at("gram")), eps);
}

Json witt_class_to_json(const WittClass& c) {
  Json out{{"ring", c.ring.tag()}, {"epsilon", c.epsilon}, {"dim_mod2", c.dim_mod2}, {"disc", integer_to_json(c.disc)}, {"zero", c.is_zero()}};
  if (c.ring.kind() != RingKind::PrimeField) out["signature"] = integer_to_json(c.signature);
  if (c.ring.kind() == RingKind::Rationals) out["hasse_minus"] = integers(c.hasse_minus);
  if (c.ring.kind() == RingKind::Dyadic) out["parity"] = c.dyadic_parity;
  return out;
}

Json witt_table_to_json(const WittRingTable& t) {
  auto generator = [&](const WittGenerator& g, const char* kind) {
    return Json{{"kind", kind},
                {"order", integer_to_json(g.order)},
                {"coefficients", integers(g.coefficients)},
                {"class", witt_class_to_json(g.cls)},
                {"representative", form_to_json(g.representative)}};
  };
  Json gens = Json::array();
  for (const auto& g : t.free_generators) gens.push_back(generator(g, "free"));
  for (const auto& g : t.torsion_generators) gens.push_back(generator(g, "torsion"));
  Json classes = Json::array(), inputs = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i)
    classes.push_back(Json{{"class", witt_class_to_json(t.classes[i])}, {"representative", form_to_json(t.representatives[i])}});
  for (const auto& g : t.generators) inputs.push_back(form_to_json(g));
  Json out{{"ring", t.ring.tag()},
           {"group", t.group.describe()},
           {"shape", Json{{"rank", t.group.free_rank}, {"torsion", integers(t.group.torsion)}}},
           {"generators", gens},
           {"inputs", inputs},
           {"classes", classes},
           {"multiplication", t.multiplication}};
  if (t.addition) out["addition"] = *t.addition;
  return out;
}

Json colim_to_json(const ColimResult& c) {
  Json residual = Json::object();
  for (const auto& [p, r] : c.residual_ranks) residual[p.get_str()] = r;
  return Json{{"rank", c.free_rank},
              {"inverted_primes", integers(c.inverted_primes)},
              {"torsion", integers(c.torsion)},
              {"residual_ranks", residual},
              {"description", c.describe()}};
}

GroupSeq group_seq_from_json(const Json& j) {
  only_fields(j, {"prefix", "period"}, "sequence");
  const Json& period = j.at("period");
  only_fields(period, {"group", "map"}, "period");
  const FgAbGroup pg = group_from_json(period.at("group"));
  const GroupHom tail = hom_from_json(pg, pg, period.at("map"));
  const Json prefix = j.value("prefix", Json::array());
  if (!prefix.is_array()) bad("prefix must be an array");
  std::vector<FgAbGroup> groups;
  for (const auto& stage : prefix) {
    only_fields(stage, {"group", "map"}, "prefix stage");
    groups.push_back(group_from_json(stage.at("group")));
  }
  std::vector<GroupHom> maps;
  for (std::size_t i = 0; i < groups.size(); ++i)
    maps.push_back(hom_from_json(groups[i], i + 1 < groups.size() ? groups[i + 1] : pg, prefix[i].at("map")));
  return GroupSeq(std::move(maps), tail);
}

std::vector<GroupHom> chain_from_json(const Json& j) {
  only_fields(j, {"groups", "maps"}, "chain");
  std::vector<FgAbGroup> groups;
  for (const auto& g : j.at("groups")) groups.push_back(group_from_json(g));
  const Json& maps = j.at("maps");
  if (!maps.is_array() || maps.size() + 1 != groups.size()) bad("a chain of m + 1 groups needs m maps");
  std::vector<GroupHom> out;
  for (std::size_t i = 0; i < maps.size(); ++i) out.push_back(hom_from_json(groups[i], groups[i + 1], maps[i]));
  return out;
}

Json bott_report_to_json(const BottReport& r) {
  Json checks = Json::array(), relations = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  for (const auto& rel : r.relations) relations.push_back(Json{{"name", rel.name}, {"holds", rel.holds}});
  return Json{{"all_passed", r.all_passed()}, {"checks", checks}, {"relations", relations}};
}

Json bott_export_to_json(const BottData& bd) {
  Json entries = Json::object();
  const char* names[2][2] = {{"M11", "M12"}, {"M21", "M22"}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) entries[names[i][j]] = to_string(bd.M(i, j));
  return Json{{"lambda", rational_to_json(bd.lambda)},
              {"entries", entries},
              {"a", to_string(bd.a)},
              {"b", to_string(bd.b)},
              {"c", to_string(bd.c)},
              {"d", to_string(bd.d)},
              {"det_M", to_string(det(bd.M))},
              {"M", matrix_to_json(bd.M)},
              {"u", matrix_to_json(bd.u)},
              {"p", matrix_to_json(bd.p)},
              {"p0", matrix_to_json(bd.p0)}};
}

Json roundtrip_to_json(const RoundtripReport& r) {
  return Json{{"base", r.base.tag()},
              {"k", r.k},
              {"n", r.n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"surjectivity_ok", r.surjectivity_ok},
              {"injectivity_ok", r.injectivity_ok},
              {"all_ok", r.all_ok()},
              {"projection_convention", r.projection_convention},
              {"failures", r.failures}};
}

}  // namespace wittstab
