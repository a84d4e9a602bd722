#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rackbench/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"rackbench"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rackbench::run_cli(static_cast<int>(argv.size()), argv.data(),
                                      out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) {
  return std::string(RACKBENCH_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("census by family") {
  const CliRun r = run({"census", "--family", "complete", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mu_rack"] == 13);
  CHECK(j["mu_qnd"] == 5);
  CHECK(j["total_markings"] == 216);
  CHECK(j.contains("elapsed_ms"));

  const CliRun table = run({"census", "--family", "complete", "--n", "3"});
  CHECK(table.code == 0);
  CHECK(table.out.find("mu_rack:        13") != std::string::npos);
  CHECK(table.out.find("mu_qnd:         5") != std::string::npos);
}

TEST_CASE("census from a file") {
  const CliRun r = run({"census", fixture("graph_c5.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mu_rack"] == 41);
  CHECK(j["mu_qnd"] == 7);

  const CliRun star = run({"census", "--family", "star", "--n", "4", "--format", "json"});
  REQUIRE(star.code == 0);
  CHECK(json::parse(star.out)["mu_rack"] == 31);
  CHECK(json::parse(star.out)["mu_qnd"] == 13);
}

TEST_CASE("check") {
  const CliRun r = run({"check", fixture("rq3_nonrack.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["order"] == 3);
  CHECK(j["right_quasigroup"] == true);
  CHECK(j["rack"] == false);
  CHECK(j["quandle"] == false);

  const CliRun kei = run({"check", fixture("quandle3_dihedral.json"), "--format", "json"});
  const json k = json::parse(kei.out);
  CHECK(k["rack"] == true);
  CHECK(k["quandle"] == true);
  CHECK(k["involutory"] == true);
  CHECK(k["kei"] == true);

  const CliRun table = run({"check", fixture("rack3_cyclic.json")});
  CHECK(table.code == 0);
  CHECK(table.out.find("rack                yes") != std::string::npos);
  CHECK(table.out.find("quandle             no") != std::string::npos);
}

TEST_CASE("classify") {
  const CliRun r =
      run({"classify", fixture("labeled_trivial_quandle2.txt"), "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["in_q"] == true);
  CHECK(j["first_rack_cond"] == true);
  CHECK(j["second_rack_cond"] == true);
  const auto realizes = j["realizes"].get<std::vector<std::string>>();
  CHECK(std::find(realizes.begin(), realizes.end(), "kei") != realizes.end());

  const CliRun table = run({"classify", fixture("labeled_kei3.json")});
  CHECK(table.code == 0);
  CHECK(table.out.find("class Q           yes") != std::string::npos);
  CHECK(table.out.find("realizes:") != std::string::npos);
  CHECK(table.out.find("kei") != std::string::npos);
}

TEST_CASE("cayley") {
  SUBCASE("directed, default 1-based rendering") {
    const CliRun r =
        run({"cayley", fixture("rack3_cyclic.json"), "--subset", "0", "--mode", "directed"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1 -> 2\n2 -> 3\n3 -> 1\n");
  }
  SUBCASE("zero-based rendering") {
    const CliRun r = run({"cayley", fixture("rack3_cyclic.json"), "--subset", "0",
                          "--mode", "directed", "--zero-based"});
    CHECK(r.out == "0 -> 1\n1 -> 2\n2 -> 0\n");
  }
  SUBCASE("undirected json") {
    const CliRun r = run({"cayley", fixture("rack3_cyclic.json"), "--subset", "0",
                          "--mode", "undirected", "--format", "json"});
    const json j = json::parse(r.out);
    CHECK(j["kind"] == "graph");
    CHECK(j["order"] == 3);
    CHECK(j["edges"].size() == 3);
  }
  SUBCASE("labeled text") {
    const CliRun r = run({"cayley", fixture("quandle3_dihedral.json"), "--subset", "0",
                          "--mode", "labeled"});
    CHECK(r.out == "1 --1--> 1\n2 --1--> 3\n3 --1--> 2\n");
  }
  SUBCASE("full subset by default") {
    const CliRun r = run({"cayley", fixture("quandle3_dihedral.json"), "--mode",
                          "undirected", "--format", "json"});
    CHECK(json::parse(r.out)["edges"].size() == 3);  // K_3
  }
  SUBCASE("empty subset") {
    const CliRun r = run({"cayley", fixture("quandle3_dihedral.json"), "--subset", "none",
                          "--mode", "directed", "--format", "json"});
    CHECK(json::parse(r.out)["edges"].empty());
  }
}

TEST_CASE("aut") {
  const CliRun r = run({"aut", "--family", "path", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["degree"] == 4);
  CHECK(j["order"] == 2);
  CHECK(j["elements"].size() == 2);

  const CliRun table = run({"aut", "--family", "path", "--n", "4"});
  CHECK(table.out.find("order:  2") != std::string::npos);
  CHECK(table.out.find("id") != std::string::npos);
  CHECK(table.out.find("(1 4)(2 3)") != std::string::npos);

  const CliRun zero = run({"aut", "--family", "path", "--n", "4", "--zero-based"});
  CHECK(zero.out.find("(0 3)(1 2)") != std::string::npos);
}

TEST_CASE("reflections") {
  const CliRun r = run({"reflections", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["reflections"].size() == 5);
  CHECK(j["marking_count"] == 7);  // sigma(5) + 1
  CHECK(j["markings"].size() == 7);

  const CliRun table = run({"reflections", "6"});
  CHECK(table.code == 0);
  CHECK(table.out.find("quandle markings of C_6: 13") != std::string::npos);
  // even cycle: edge-axis reflections fix no vertex
  CHECK(table.out.find("axis: (none)") != std::string::npos);
}

TEST_CASE("table1") {
  const CliRun r = run({"table1"});
  REQUIRE(r.code == 0);
  // frozen cells of the three families
  CHECK(r.out.find("(13,5)") != std::string::npos);     // K_3 and C_3
  CHECK(r.out.find("(114,36)") != std::string::npos);   // K_4
  CHECK(r.out.find("(390,114)") != std::string::npos);  // K_{1,4}
  CHECK(r.out.find("(108,13)") != std::string::npos);   // C_6
  CHECK(r.out.find("(113,9)") != std::string::npos);    // C_7
  CHECK(r.out.find("n/a") != std::string::npos);
  CHECK(r.out.find("?") != std::string::npos);

  // the table is deterministic and independent of the worker split
  const CliRun again = run({"table1", "--jobs", "2"});
  CHECK(again.out == r.out);

  const CliRun j = run({"table1", "--format", "json"});
  const json parsed = json::parse(j.out);
  CHECK(parsed["complete"][4]["mu_rack"] == 114);
  CHECK(parsed["star"][0]["cell"] == "n/a");
  CHECK(parsed["cycle"][7]["mu_qnd"] == 9);
}

TEST_CASE("exit codes") {
  SUBCASE("parse failures exit 2") {
    CHECK(run({"census", "--bogus-flag"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"classify"}).code == 2);  // missing required source
    CHECK(run({"check", "/nonexistent/magma.json"}).code == 2);
    CHECK(run({"census", "--family", "complete", "--n", "3",
               fixture("graph_c5.json")}).code == 2);  // both sources
    CHECK(run({"census"}).code == 2);  // no source at all
    CHECK(run({"cayley", fixture("rq3_nonrack.json"), "--mode", "sideways"}).code == 2);
  }
  SUBCASE("domain failures exit 1") {
    const CliRun budget = run({"census", "--family", "complete", "--n", "4",
                               "--budget-seconds", "0"});
    CHECK(budget.code == 1);
    CHECK(budget.err.find("partial") != std::string::npos);
    CHECK(run({"census", "--family", "star", "--n", "1"}).code == 1);
    CHECK(run({"census", "--family", "cycle", "--n", "2"}).code == 1);
  }
  SUBCASE("help exits 0") {
    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("census") != std::string::npos);
    CHECK(run({"census", "--help"}).code == 0);
  }
}

TEST_CASE("every command emits valid json") {
  const std::vector<std::vector<std::string>> cases = {
      {"census", "--family", "cycle", "--n", "4", "--format", "json"},
      {"check", fixture("quandle5_s3xz2.json"), "--format", "json"},
      {"classify", fixture("labeled_kei3.json"), "--format", "json"},
      {"cayley", fixture("rq4_nonrack_d4.json"), "--format", "json"},
      {"cayley", fixture("rq4_nonrack_d4.json"), "--mode", "labeled", "--format", "json"},
      {"aut", fixture("graph_c5.json"), "--format", "json"},
      {"reflections", "4", "--format", "json"},
      {"table1", "--format", "json"},
  };
  for (const auto& args : cases) {
    const CliRun r = run(args);
    CHECK(r.code == 0);
    CHECK(json::accept(r.out));
    CHECK(r.err.empty());
  }
}
