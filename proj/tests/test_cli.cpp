#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toral/certificate.hpp"
#include "toral/cli.hpp"
#include "toral/error.hpp"
#include "toral/gaff.hpp"
#include "toral/parse.hpp"
#include "toral/problem.hpp"
#include "toral/report.hpp"

using namespace toral;
using report::Json;

namespace {

const std::string kData = TORAL_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "toral-aut");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return kData + "/" + name; }

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
  const auto p = std::filesystem::temp_directory_path() / ("toral_test_" + name);
  std::ofstream(p) << content;
  return p;
}

// Structural checks mirroring docs/schema.md.
bool is_int_vector(const Json &j) {
  if (!j.is_array()) return false;
  for (const auto &x : j)
    if (!x.is_number_integer()) return false;
  return true;
}

bool is_matrix(const Json &j) {
  if (!j.is_array()) return false;
  for (const auto &r : j)
    if (!is_int_vector(r)) return false;
  return true;
}

bool is_poly(const Json &j) {
  if (!j.is_object() || !j.at("text").is_string() || !j.at("terms").is_array()) return false;
  for (const auto &t : j.at("terms"))
    if (!is_int_vector(t.at("exponent")) || !t.at("coefficient").is_string()) return false;
  return true;
}

bool is_quasitorus(const Json &j) {
  return is_int_vector(j.at("finite_factors")) && j.at("torus_rank").is_number_unsigned() &&
         (j.at("order").is_null() || j.at("order").is_number_integer()) && j.at("description").is_string();
}

void check_envelope(const Json &doc, const std::string &command) {
  REQUIRE(doc.is_object());
  CHECK(doc.size() == 4);
  CHECK(doc.at("command") == command);
  CHECK(doc.at("argv").is_array());
  CHECK(doc.at("result").is_object());
  CHECK(doc.at("timing_ms").is_number());
}

Json json_run(const std::string &command, const std::string &file) {
  const Run r = cli({command, "--format", "json", file});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  check_envelope(doc, command);
  return doc;
}

} // namespace

TEST_CASE("problem files") {
  const ProblemInput p = parse_problem("# comment\nvars t1 t2\n\ngen t1*t2 - t1 - 1   # h\n");
  CHECK(p.rank() == 2);
  REQUIRE(p.generators.size() == 1);
  CHECK(p.to_string() == "vars t1 t2\ngen t1*t2 - t1 - 1\n");
  CHECK(parse_problem(p.to_string()).generators == p.generators);

  try {
    parse_problem("vars x y\ngen x + z\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(parse_problem("gen t\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars t\nvars s\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars t\nfoo t\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars t i\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars t\ngen t - t\n"), ParseError);
  CHECK_THROWS_AS(load_problem("/nonexistent/file.toral"), InputError);
}

TEST_CASE("parse subcommand") {
  const Run r = cli({"parse", data("ex1.toral")});
  CHECK(r.code == 0);
  CHECK(r.out == "vars t1 t2\ngen t1*t2 - t1 - 1\n");
  const Json doc = json_run("parse", data("ex1.toral"));
  const Json &res = doc.at("result");
  CHECK(res.at("variables") == Json::array({"t1", "t2"}));
  REQUIRE(res.at("generators").size() == 1);
  const Json &g = res.at("generators")[0];
  CHECK(is_poly(g));
  CHECK(g.at("terms").size() == 3);
  CHECK(g.at("terms")[0].at("exponent") == Json::array({1, 1}));
  CHECK(g.at("terms")[0].at("coefficient") == "1");
}

TEST_CASE("hx subcommand") {
  const Run r = cli({"hx", data("ex2.toral")});
  CHECK(r.code == 0);
  CHECK(r.out.find("≅ Z/2 × Z/2, torus rank 0") != std::string::npos);
  const Json res = json_run("hx", data("ex2.toral")).at("result");
  CHECK(is_quasitorus(res));
  CHECK(res.at("order") == 4);
  CHECK(res.at("mx_basis") == Json::parse("[[2,0,0],[0,2,0],[0,0,1]]"));
}

TEST_CASE("split subcommand") {
  const Json res = json_run("split", data("ex1_rank3.toral")).at("result");
  CHECK(res.at("torus_rank") == 1);
  CHECK(is_matrix(res.at("change_of_basis")));
  CHECK(res.at("residual_variables") == Json::array({"y1", "y2"}));
  REQUIRE(res.at("residual_generators").size() == 1);
  CHECK(is_poly(res.at("residual_generators")[0]));
  CHECK(res.at("is_torus") == false);
}

TEST_CASE("gaff subcommand") {
  const Run r = cli({"gaff", data("ex1.toral")});
  CHECK(r.code == 0);
  CHECK(r.out.find("GAff order: 6") != std::string::npos);
  const Json res = json_run("gaff", data("ex1.toral")).at("result");
  CHECK(res.at("order") == 6);
  CHECK(res.at("abelian") == false);
  CHECK(res.at("element_orders") == Json::array({1, 2, 2, 2, 3, 3}));
  REQUIRE(res.at("elements").size() == 6);
  for (const auto &e : res.at("elements")) {
    CHECK(is_matrix(e.at("linear")));
    CHECK(is_int_vector(e.at("translation")));
    CHECK(is_int_vector(e.at("permutation")));
    CHECK(e.at("cycles").is_string());
  }
  CHECK(res.at("elements")[0].at("cycles") == "()");

  const Run scope = cli({"gaff", data("torus2.toral")});
  CHECK(scope.code == kExitScopeError);
  CHECK(cli({"gaff", "--max-support", "2", data("ex1.toral")}).code == kExitScopeError);
  CHECK(cli({"gaff", "--threads", "3", data("ex1.toral")}).out == r.out);
}

TEST_CASE("aut subcommand") {
  const Json res = json_run("aut", data("ex2.toral")).at("result");
  CHECK(res.at("torus_rank_s") == 0);
  CHECK(is_quasitorus(res.at("h_y")));
  CHECK(res.at("gaff_order") == 6);
  CHECK(res.at("aut_y_order") == 24);
  CHECK(res.at("formula").at("text") == "Aut(Y)");
  const Run r = cli({"aut", data("ex1_rank3.toral")});
  CHECK(r.code == 0);
  CHECK(r.out.find("Aut(X) ≅ Aut(Y) ⋉ (GL₁(ℤ) ⋉ (ℤ² × K*)¹)") != std::string::npos);
  const Json torus = json_run("aut", data("torus2.toral")).at("result");
  CHECK(torus.at("is_torus") == true);
  CHECK(torus.at("formula").at("text") == "T₂ ⋊ GL₂(ℤ)");
}

TEST_CASE("lift and verify round trip") {
  const Json res = json_run("lift", data("ex2.toral")).at("result");
  REQUIRE(res.at("certificates").size() == 6);
  const LaurentPoly h = load_problem(data("ex2.toral")).generators.front();
  for (const auto &entry : res.at("certificates")) {
    const Json &cert = entry.at("certificate");
    const AutoCertificate c = report::certificate_from_json(cert, h);
    CHECK(report::to_json(c) == cert);
    const auto path = temp_file("cert.json", cert.dump());
    const Run v = cli({"verify", data("ex2.toral"), path.string()});
    CHECK(v.code == 0);
    CHECK(v.out == "true\n");
  }
  const Run one = cli({"lift", "--element", "2", data("ex1.toral")});
  CHECK(one.code == 0);
  CHECK(cli({"lift", "--element", "7", data("ex1.toral")}).code == kExitInputError);
}

TEST_CASE("verify hand-written maps") {
  CHECK(cli({"verify", data("ex1.toral"), data("ex1_psi1.json")}).out == "true\n");
  CHECK(cli({"verify", data("ex1.toral"), data("ex1_psi2.json")}).out == "true\n");
  CHECK(cli({"verify", data("ex2.toral"), data("ex2_psi2.json")}).out == "true\n");

  Json cert = report::to_json(certificate_from_monomial_map(
      load_problem(data("ex2.toral")).generators.front(),
      MonomialMap{IntMatrix{{0, -1, 0}, {1, -1, 0}, {0, 2, 1}},
                  ScalarTuple({GaussianRational(-1), GaussianRational::imaginary_unit(), GaussianRational(-1)})}));
  cert["constraint_values"][0] = "2";
  const auto path = temp_file("bad_cert.json", cert.dump());
  const Run bad = cli({"verify", "--format", "json", data("ex2.toral"), path.string()});
  CHECK(bad.code == 0);
  CHECK(Json::parse(bad.out).at("result").at("valid") == false);
}

TEST_CASE("input errors") {
  CHECK(cli({"parse", "/nonexistent.toral"}).code == kExitInputError);
  const auto bad = temp_file("bad.toral", "vars t1 t2\ngen t1 + + t2\n");
  const Run r = cli({"parse", bad.string()});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(cli({"frobnicate"}).code == kExitInputError);
  CHECK(cli({"parse", "--format", "xml", data("ex1.toral")}).code == kExitInputError);
  const auto junk = temp_file("junk.json", "{not json");
  CHECK(cli({"verify", data("ex1.toral"), junk.string()}).code == kExitInputError);
}

TEST_CASE("output is deterministic apart from timing") {
  for (const char *cmd : {"parse", "hx", "split", "gaff", "aut", "lift"}) {
    Json a = json_run(cmd, data("ex2.toral"));
    Json b = json_run(cmd, data("ex2.toral"));
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);
    CHECK(cli({cmd, data("ex2.toral")}).out == cli({cmd, data("ex2.toral")}).out);
  }
}
