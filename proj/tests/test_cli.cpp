#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wittstab/cli.hpp"

using wittstab::run_cli;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string text;
  Json json() const { return Json::parse(text); }
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  const int code = run_cli(args, out);
  return {code, out.str()};
}

std::string sample(const std::string& name) { return std::string(WITTSTAB_SAMPLES_DIR) + "/" + name; }

void expect_error(const std::vector<std::string>& args, const std::string& code) {
  const auto r = run(args);
  CHECK(r.code == 2);
  CHECK(r.json().at("error").at("code") == code);
  CHECK_FALSE(r.json().at("error").at("message").get<std::string>().empty());
}

}  // namespace

TEST_CASE("witt class") {
  SUBCASE("<1, 2> over Z[1/2] has signature 2 and odd parity") {
    const auto r = run({"witt", "class", "--ring", "dyadic", "--diag", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("signature") == 2);
    CHECK(r.json().at("parity") == 1);
    CHECK(r.json().at("zero") == false);
  }
  SUBCASE("negative entries via --diag=") {
    const auto r = run({"witt", "class", "--ring", "q", "--diag=-1,1"});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("zero") == true);
  }
  SUBCASE("Gram input over F_5") {
    const auto r = run({"witt", "class", "--ring", "fp:5", "--gram", "[[2,1],[1,2]]"});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("dim_mod2") == 0);
    CHECK_FALSE(r.json().contains("signature"));
  }
  SUBCASE("skew Gram input is Witt trivial") {
    const auto r = run({"witt", "class", "--ring", "q", "--epsilon", "-1", "--gram", "[[0,3],[-3,0]]"});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("zero") == true);
  }
  SUBCASE("form file") {
    const auto r = run({"witt", "class", "--ring", "q", "--form-file", sample("form_hyperbolic_q.json")});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("zero") == true);
  }
  SUBCASE("input errors") {
    expect_error({"witt", "class", "--ring", "q", "--diag", "1,x"}, "InvalidInput");
    expect_error({"witt", "class", "--ring", "q", "--diag", "1,0"}, "DegenerateForm");
    expect_error({"witt", "class", "--ring", "dyadic", "--diag", "3"}, "DegenerateForm");
    expect_error({"witt", "class", "--ring", "fp:6", "--diag", "1"}, "InvalidInput");
    expect_error({"witt", "class", "--ring", "q", "--gram", "[[1,2],[3,4]]"}, "InvalidInput");
    expect_error({"witt", "class", "--ring", "q", "--gram", "[[1,2]"}, "InvalidInput");
    expect_error({"witt", "class", "--ring", "q", "--diag", "1", "--diag", "2"}, "InvalidInput");
    expect_error({"witt", "class", "--ring", "q", "--form-file", sample("does_not_exist.json")}, "InvalidInput");
    expect_error({"witt", "class", "--diag", "1"}, "Usage");
  }
}

TEST_CASE("witt equiv") {
  const auto same = run({"witt", "equiv", "--ring", "q", "--diag", "2,2", "--diag", "1,1"});
  REQUIRE(same.code == 0);
  CHECK(same.json().at("equivalent") == true);
  const auto differ = run({"witt", "equiv", "--ring", "q", "--diag", "1,1", "--diag", "3,3"});
  REQUIRE(differ.code == 0);
  CHECK(differ.json().at("equivalent") == false);
  const auto mixed = run({"witt", "equiv", "--ring", "q", "--form-file", sample("form_hyperbolic_q.json"), "--diag=1,-1"});
  REQUIRE(mixed.code == 0);
  CHECK(mixed.json().at("equivalent") == true);
  expect_error({"witt", "equiv", "--ring", "q", "--diag", "1"}, "InvalidInput");
  expect_error({"witt", "equiv", "--ring", "dyadic", "--form-file", sample("form_hyperbolic_q.json"), "--diag", "1"}, "SpecMismatch");
}

TEST_CASE("witt ring") {
  const auto r = run({"witt", "ring", "--ring", "dyadic"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j.at("group") == "Z+Z/2");
  CHECK(j.at("shape").at("rank") == 1);
  CHECK(j.at("shape").at("torsion") == Json::array({2}));
  const auto f7 = run({"witt", "ring", "--ring", "fp:7"});
  REQUIRE(f7.code == 0);
  CHECK(f7.json().at("shape").at("torsion") == Json::array({4}));
  expect_error({"witt", "ring", "--ring", "q"}, "UnsupportedRing");
}

TEST_CASE("bott") {
  const auto v = run({"bott", "verify"});
  CHECK(v.code == 0);
  CHECK(v.json().at("all_passed") == true);
  CHECK(v.json().at("checks").size() == 9);
  const auto e = run({"bott", "export"});
  REQUIRE(e.code == 0);
  CHECK(e.json().at("lambda") == Json::array({1, 2}));
  CHECK(e.json().contains("M"));
}

TEST_CASE("stab") {
  SUBCASE("colimit of (Z, x8) from a file and from the catalog") {
    const auto f = run({"stab", "colim", "--file", sample("period_z_times8.json")});
    REQUIRE(f.code == 0);
    CHECK(f.json().at("description") == "Z[1/2]");
    const auto c = run({"stab", "colim", "--catalog", "Wtop:-8:R"});
    REQUIRE(c.code == 0);
    CHECK(c.json().at("rank") == 1);
    CHECK(c.json().at("inverted_primes") == Json::array({2}));
    CHECK(c.json().at("torsion") == Json::array());
  }
  SUBCASE("prefix stages") {
    const auto r = run({"stab", "colim", "--file", sample("sequence_with_prefix.json")});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("description") == "Z[1/2]+Z/2");
  }
  SUBCASE("exactness") {
    const auto ok = run({"stab", "exact", "--file", sample("chain_exact.json")});
    REQUIRE(ok.code == 0);
    CHECK(ok.json().at("exact") == true);
    const auto broken = run({"stab", "exact", "--file", sample("chain_broken.json")});
    REQUIRE(broken.code == 0);
    CHECK(broken.json().at("failures") == Json::array({2}));
  }
  SUBCASE("errors") {
    expect_error({"stab", "colim", "--catalog", "W:0:Z[1/2]"}, "NotCatalogued");
    expect_error({"stab", "colim", "--catalog", "Wtop:5:Q"}, "NotCatalogued");
    expect_error({"stab", "colim", "--catalog", "Wtop:x:R"}, "InvalidInput");
    expect_error({"stab", "colim"}, "Usage");
    expect_error({"stab", "exact", "--file", sample("period_z_times8.json")}, "InvalidInput");
  }
}

TEST_CASE("lift demo") {
  const auto r = run({"lift", "demo", "--base", "fp:5", "--k", "3", "--n", "3", "--trials", "5", "--seed", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.json().at("all_ok") == true);
  CHECK(r.json().at("surjectivity_ok") == 5);
  CHECK(r.json().at("injectivity_ok") == 5);
  CHECK(r.json().at("seed") == 7);
  expect_error({"lift", "demo", "--k", "9"}, "InvalidInput");
  expect_error({"lift", "demo", "--base", "dyadic"}, "InvalidInput");
  expect_error({"lift", "demo", "--trials", "many"}, "Usage");
}

TEST_CASE("usage") {
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.text.find("witt") != std::string::npos);
  expect_error({}, "Usage");
  expect_error({"frobnicate"}, "Usage");
  expect_error({"witt", "class", "--ring", "q", "--bogus"}, "Usage");
}
