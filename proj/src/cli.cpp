#include "wittstab/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "wittstab/codecs.hpp"
#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad("invalid JSON: " + std::string(e.what()));
  }
}

std::vector<Rational> parse_diag(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) bad("empty entry in diagonal list '" + csv + "'");
    out.push_back(rational_from_json(Json(item.substr(b, e - b + 1))));
  }
  return out;
}

GramForm diag_form(const RingSpec& ring, const std::string& csv, int eps) {
  const auto entries = parse_diag(csv);
  if (entries.empty()) return zero_form(ring, eps);
  if (eps != 1) bad("diagonal forms are symmetric; use --gram for epsilon = -1");
  return GramForm::diagonal(ring, entries);
}

GramForm gram_form(const RingSpec& ring, const std::string& json_rows, int eps) { return GramForm(gram_from_json(ring, parse_json_text(json_rows)), eps); }

CatalogKey parse_catalog_key(const std::string& text) {
  // theory:degree:ring[:epsilon]
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4) bad("catalog key must be theory:degree:ring[:epsilon], got " + text);
  CatalogKey key;
  key.theory = parts[0];
  try {
    key.degree = std::stol(parts[1]);
    key.epsilon = parts.size() == 4 ? std::stoi(parts[3]) : 1;
  } catch (const std::exception&) {
    bad("catalog key has a non-integer degree or epsilon: " + text);
  }
  key.ring = parts[2];
  return key;
}

Json error_json(const std::string& code, const std::string& message) { return Json{{"error", Json{{"code", code}, {"message", message}}}}; }

struct Options {
  std::string ring;
  std::vector<std::string> diags;
  std::vector<std::string> grams;
  std::vector<std::string> form_files;
  int epsilon = 1;
  std::vector<std::string> generators;
  std::string file;
  std::string catalog_key;
  std::string base = "q";
  int k = 2;
  std::size_t n = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

std::vector<GramForm> collect_forms(const Options& o) {
  const RingSpec ring = RingSpec::parse(o.ring);
  std::vector<GramForm> forms;
  for (const auto& d : o.diags) forms.push_back(diag_form(ring, d, o.epsilon));
  for (const auto& g : o.grams) forms.push_back(gram_form(ring, g, o.epsilon));
  for (const auto& f : o.form_files) {
    GramForm form = form_from_json(read_json_file(f));
    if (!(form.ring() == ring)) fail(ErrorCode::SpecMismatch, f + " is over " + form.ring().tag() + ", expected " + ring.tag());
    forms.push_back(std::move(form));
  }
  return forms;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Witt groups, Bott data, stable colimits and nilpotent lifts with exact arithmetic", "wittstab"};
  app.require_subcommand(1);
  Options o;

  auto* witt = app.add_subcommand("witt", "Witt classes and Witt rings")->require_subcommand(1);
  auto add_form_options = [&](CLI::App* cmd) {
    cmd->add_option("--ring", o.ring, "q, dyadic or fp:<p>")->required();
    cmd->add_option("--diag", o.diags, "diagonal entries, comma separated (use --diag=-1,2 for a leading minus)")->allow_extra_args(false);
    cmd->add_option("--gram", o.grams, "Gram matrix as JSON rows, e.g. [[0,1],[1,0]]")->allow_extra_args(false);
    cmd->add_option("--form-file", o.form_files, "form JSON file {ring, epsilon, gram}");
    cmd->add_option("--epsilon", o.epsilon, "1 (symmetric) or -1 (skew)")->capture_default_str();
  };
  auto* wclass = witt->add_subcommand("class", "complete Witt invariants of one form");
  add_form_options(wclass);
  auto* wequiv = witt->add_subcommand("equiv", "Witt equivalence of two forms");
  add_form_options(wequiv);
  auto* wring = witt->add_subcommand("ring", "Witt ring table and additive group");
  wring->add_option("--ring", o.ring, "dyadic or fp:<p>")->required();
  wring->add_option("--gen", o.generators, "generator as diagonal entries (repeatable); defaults per ring");

  auto* bott = app.add_subcommand("bott", "the explicit Bott element data")->require_subcommand(1);
  auto* bverify = bott->add_subcommand("verify", "check every matrix-level identity");
  auto* bexport = bott->add_subcommand("export", "print M and its ingredients");

  auto* stab = app.add_subcommand("stab", "colimits and exactness of abelian group diagrams")->require_subcommand(1);
  auto* scolim = stab->add_subcommand("colim", "colimit of an eventually periodic sequence");
  auto* colim_src = scolim->add_option_group("source");
  colim_src->add_option("--file", o.file, "sequence JSON file");
  colim_src->add_option("--catalog", o.catalog_key, "theory:degree:ring[:epsilon] with a catalogued period map");
  colim_src->require_option(1);
  auto* sexact = stab->add_subcommand("exact", "locate failures of exactness in a chain");
  sexact->add_option("--file", o.file, "chain JSON file")->required();

  auto* lift = app.add_subcommand("lift", "lifting along nilpotent extensions")->require_subcommand(1);
  auto* ldemo = lift->add_subcommand("demo", "surjectivity and injectivity round trip");
  ldemo->add_option("--base", o.base, "q or fp:<p>")->capture_default_str();
  ldemo->add_option("--k", o.k, "nilpotency order, 1..6")->capture_default_str();
  ldemo->add_option("--n", o.n, "matrix size, 1..8")->capture_default_str();
  ldemo->add_option("--trials", o.trials, "trials per half")->capture_default_str();
  ldemo->add_option("--seed", o.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("Usage", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    Json result;
    if (wclass->parsed()) {
      const auto forms = collect_forms(o);
      if (forms.size() != 1) bad("witt class takes exactly one form");
      result = witt_class_to_json(witt_class(forms[0]));
    } else if (wequiv->parsed()) {
      const auto forms = collect_forms(o);
      if (forms.size() != 2) bad("witt equiv takes exactly two forms");
      result = Json{{"equivalent", witt_equiv(forms[0], forms[1])},
                    {"classes", Json::array({witt_class_to_json(witt_class(forms[0])), witt_class_to_json(witt_class(forms[1]))})}};
    } else if (wring->parsed()) {
      const RingSpec ring = RingSpec::parse(o.ring);
      std::vector<GramForm> gens;
      for (const auto& g : o.generators) gens.push_back(diag_form(ring, g, 1));
      result = witt_table_to_json(witt_ring_table(ring, gens));
    } else if (bverify->parsed()) {
      const BottReport report = verify_bott_suite(build_bott());
      out << bott_report_to_json(report).dump(2) << "\n";
      return report.all_passed() ? 0 : 1;
    } else if (bexport->parsed()) {
      result = bott_export_to_json(build_bott());
    } else if (scolim->parsed()) {
      if (!o.file.empty()) {
        result = colim_to_json(colimit(group_seq_from_json(read_json_file(o.file))));
      } else {
        const CatalogEntry& e = Catalog::shipped().lookup(parse_catalog_key(o.catalog_key));
        if (!e.period_map) fail(ErrorCode::NotCatalogued, "no period map catalogued for " + e.key.describe());
        result = colim_to_json(colimit_of_endomorphism(GroupHom(e.group, e.group, *e.period_map)));
        result["source"] = Json{{"key", e.key.describe()}, {"citation", e.period_citation}};
      }
    } else if (sexact->parsed()) {
      const auto failures = exactness_check(chain_from_json(read_json_file(o.file)));
      result = Json{{"exact", failures.empty()}, {"failures", failures}};
    } else if (ldemo->parsed()) {
      result = roundtrip_to_json(roundtrip_isomorphism_demo(RingSpec::parse(o.base), o.k, o.n, o.trials, o.seed));
    }
    out << result.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    out << error_json(std::string(to_string(e.code())), e.what()).dump(2) << "\n";
    return 2;
  } catch (const Json::exception& e) {
    out << error_json("InvalidInput", e.what()).dump(2) << "\n";
    return 2;
  } catch (const IdentityViolation& e) {
    out << error_json("IdentityViolation", e.what()).dump(2) << "\n";
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<const char*> argv{"wittstab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out);
}

}  // namespace wittstab
