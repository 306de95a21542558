#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pfaff_cli/commands.hpp"
#include "pfaff_cli/documents.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kData = PFAFF_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run pfaff_cmd(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pfaff::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pfaff_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string system_file(const std::string& name) { return (kData / "systems" / (name + ".json")).string(); }

fs::path write_text(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("solve Euler to order 6") {
  const fs::path out = scratch("euler6.json");
  const Run r = pfaff_cmd({"solve", system_file("euler"), "--order", "6", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "status: Solved"));
  const json doc = pfaff::cli::read_json_file(out);
  CHECK(doc["order"] == 6);
  std::vector<std::string> coeffs;
  for (const auto& e : doc["coefficients"]) coeffs.push_back(e["c"][0].get<std::string>());
  CHECK(coeffs == std::vector<std::string>{"1", "1", "2", "6", "24", "120"});
}

TEST_CASE("solve reports resonance") {
  const Run r = pfaff_cmd({"solve", system_file("resonant")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "k=(1)"));
  CHECK(contains(r.out, "0 = 1"));
  const Run j = pfaff_cmd({"solve", system_file("resonant"), "--emit", "json"});
  const json doc = json::parse(j.out);
  CHECK(doc["report"]["inconsistency"]["row"] == "0 = 1");
  CHECK(doc["report"]["inconsistency"]["k"] == json::array({1}));
  CHECK_FALSE(doc.contains("solution"));
}

TEST_CASE("malformed expression") {
  const fs::path bad = write_text("bad.json", R"({"m": 1, "n": 1, "p": [1], "f": [["x1 y1"]]})");
  const Run r = pfaff_cmd({"solve", bad.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "syntax error at column 4"));
}

TEST_CASE("invalid inputs exit with 2") {
  CHECK(pfaff_cmd({"solve", scratch("missing.json").string()}).code == 2);
  const fs::path constant = write_text("constant.json", R"({"m": 1, "n": 1, "p": [1], "f": [["1 + y1"]]})");
  const Run r = pfaff_cmd({"solve", constant.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "constant term"));
  CHECK(pfaff_cmd({"solve", system_file("euler"), "--order", "0"}).code == 2);
  CHECK(pfaff_cmd({"solve", system_file("euler"), "--free-policy", "maybe"}).code == 2);
  CHECK(pfaff_cmd({"frobnicate"}).code == 2);
  const fs::path broken = write_text("broken.json", "{not json");
  CHECK(pfaff_cmd({"integrability", broken.string()}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Run r = pfaff_cmd({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "solve"));
}

TEST_CASE("free policies") {
  const Run aborted = pfaff_cmd({"solve", system_file("e5"), "--order", "4", "--free-policy", "fail"});
  CHECK(aborted.code == 1);
  CHECK(contains(aborted.out, "Aborted"));

  const std::string policy = "value:" + (kData / "policies" / "e2_diagonal.json").string();
  const Run r = pfaff_cmd({"solve", system_file("e2"), "--order", "6", "--free-policy", policy});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "phi[1] = x1*x2 + x1^2*x2^2 + x1^3*x2^3"));
}

TEST_CASE("check certifies E5 through Theorem 4") {
  const fs::path sol = scratch("e5.json");
  REQUIRE(pfaff_cmd({"solve", system_file("e5"), "--order", "8", "--out", sol.string()}).code == 0);
  const Run r = pfaff_cmd({"check", system_file("e5"), sol.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "residual verified through degree 8 of 8"));
  CHECK(contains(r.out, "Theorem 4: Holds"));
  CHECK(contains(r.out, "Theorem C: Fails"));
  CHECK(contains(r.out, "overall: convergence certified via Theorem 4"));

  const Run j = pfaff_cmd({"check", system_file("e5"), sol.string(), "--emit", "json"});
  const json doc = json::parse(j.out);
  CHECK(doc["convergence_certified"] == true);
  CHECK(doc["certified_by"] == json::array({"Theorem 4"}));
}

TEST_CASE("check E3 with phi = x1") {
  const fs::path sol =
      write_text("e3_x1.json", R"({"m": 2, "n": 1, "order": 4, "coefficients": [{"k": [1, 0], "c": ["1"]}]})");
  const Run r = pfaff_cmd({"check", system_file("e3"), sol.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Theorem A: Holds"));
  CHECK(contains(r.out, "Theorem 2: Holds"));
  CHECK(contains(r.out, "Theorem 3: Holds"));
  CHECK(contains(r.out, "witness=-x1"));
}

TEST_CASE("check Euler: nothing applies") {
  const fs::path sol = scratch("euler10.json");
  REQUIRE(pfaff_cmd({"solve", system_file("euler"), "--order", "10", "--out", sol.string()}).code == 0);
  const Run r = pfaff_cmd({"check", system_file("euler"), sol.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "overall: no criterion applies"));
}

TEST_CASE("check rejects a wrong solution") {
  const fs::path sol =
      write_text("euler_bad.json", R"({"m": 1, "n": 1, "order": 3, "coefficients": [{"k": [1], "c": ["1"]}]})");
  const Run r = pfaff_cmd({"check", system_file("euler"), sol.string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "residual verified through degree 1 of 3"));
  CHECK(contains(r.out, "rejected"));
  CHECK_FALSE(contains(r.out, "Theorem"));

  const fs::path shape =
      write_text("shape.json", R"({"m": 2, "n": 1, "order": 3, "coefficients": []})");
  CHECK(pfaff_cmd({"check", system_file("euler"), shape.string()}).code == 2);
  const fs::path above =
      write_text("above.json", R"({"m": 1, "n": 1, "order": 1, "coefficients": [{"k": [2], "c": ["1"]}]})");
  CHECK(pfaff_cmd({"check", system_file("euler"), above.string()}).code == 2);
  const fs::path zero_index =
      write_text("zero_index.json", R"({"m": 1, "n": 1, "order": 1, "coefficients": [{"k": [0], "c": ["1"]}]})");
  CHECK(pfaff_cmd({"check", system_file("euler"), zero_index.string()}).code == 2);
}

TEST_CASE("eigenvalue bound override") {
  const fs::path sol = scratch("e2_check.json");
  REQUIRE(pfaff_cmd({"solve", system_file("e2"), "--order", "4", "--out", sol.string()}).code == 0);
  const Run wide = pfaff_cmd({"check", system_file("e2"), sol.string()});
  CHECK(contains(wide.out, "Theorem B[1]: Fails"));
  const Run narrow = pfaff_cmd({"check", system_file("e2"), sol.string(), "--eig-bound", "0"});
  CHECK(contains(narrow.out, "Theorem B[1]: Holds"));
}

TEST_CASE("integrability reports") {
  CHECK(pfaff_cmd({"integrability", system_file("e2")}).out == "completely integrable; F_12 = 0\n");
  CHECK(pfaff_cmd({"defect", system_file("e3")}).out == "not integrable; F_12 = x1*y1 - y1^2\n");
  CHECK(pfaff_cmd({"integrability", system_file("euler")}).out == "vacuously integrable\n");
  const json doc = json::parse(pfaff_cmd({"integrability", system_file("e3"), "--emit", "json"}).out);
  CHECK(doc["integrable"] == false);
  CHECK(doc["defects"][0]["F"][0] == "x1*y1 - y1^2");
}

TEST_CASE("diagnose Euler at order 25") {
  const fs::path sol = scratch("euler25.json");
  REQUIRE(pfaff_cmd({"solve", system_file("euler"), "--order", "25", "--out", sol.string()}).code == 0);
  const Run r = pfaff_cmd({"diagnose", sol.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: factorial-type growth: likely divergent"));
  const json doc = json::parse(pfaff_cmd({"diagnose", sol.string(), "--emit", "json", "--ray", "axis_1"}).out);
  CHECK(doc["fit"]["s"].get<double>() > 0.8);
  CHECK(doc["fit"]["s"].get<double>() < 1.2);
  CHECK(doc["radius"]["estimate"].get<double>() < 0.15);
}

TEST_CASE("diagnose E2 at order 24") {
  const fs::path sol = scratch("e2_24.json");
  const std::string policy = "value:" + (kData / "policies" / "e2_diagonal.json").string();
  REQUIRE(pfaff_cmd({"solve", system_file("e2"), "--order", "24", "--free-policy", policy, "--out", sol.string()})
              .code == 0);
  const json doc = json::parse(pfaff_cmd({"diagnose", sol.string(), "--emit", "json", "--ray", "diagonal"}).out);
  CHECK(std::abs(doc["fit"]["s"].get<double>()) < 0.2);
  CHECK(std::abs(doc["radius"]["estimate"].get<double>() - 1.0) < 0.1);
  CHECK(doc["zero_degrees"].size() == 12);
}

TEST_CASE("diagnose warns on too little data") {
  const fs::path sol =
      write_text("x1.json", R"({"m": 2, "n": 1, "order": 5, "coefficients": [{"k": [1, 0], "c": ["1"]}]})");
  const Run r = pfaff_cmd({"diagnose", sol.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning: InsufficientData"));
  const Run csv = pfaff_cmd({"diagnose", sol.string(), "--emit", "csv"});
  CHECK(csv.out == "degree,max_abs_coeff\n1,1\n2,0\n3,0\n4,0\n5,0\n");
}

TEST_CASE("solve output re-checks on every bundled system") {
  for (const auto& entry : fs::directory_iterator(kData / "systems")) {
    const std::string name = entry.path().stem().string();
    const fs::path sol = scratch("roundtrip_" + name + ".json");
    const Run solved = pfaff_cmd({"solve", entry.path().string(), "--order", "8", "--out", sol.string()});
    if (solved.code != 0) {
      CHECK_MESSAGE((name == "resonant" || name == "euler2"), name);
      continue;
    }
    const Run checked = pfaff_cmd({"check", entry.path().string(), sol.string()});
    CHECK_MESSAGE(checked.code == 0, name);
    CHECK_MESSAGE(contains(checked.out, "residual verified through degree 8 of 8"), name);
  }
}

TEST_CASE("reports are deterministic") {
  const Run a = pfaff_cmd({"solve", system_file("e5"), "--order", "6", "--emit", "json"});
  const Run b = pfaff_cmd({"solve", system_file("e5"), "--order", "6", "--emit", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("documents round trip") {
  const auto sys = pfaff::cli::system_from_json(pfaff::cli::read_json_file(system_file("e3")));
  const auto again = pfaff::cli::system_from_json(pfaff::cli::system_to_json(sys));
  CHECK(again.rhs() == sys.rhs());
  CHECK(again.orders() == sys.orders());
}
