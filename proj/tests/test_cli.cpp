#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "perihall/cli/catalog_file.hpp"
#include "perihall/cli/quiver_spec.hpp"
#include "perihall/cli/run.hpp"
#include "perihall/error.hpp"

using namespace perihall;
using namespace perihall::cli;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run_job(JobSpec job) {
  std::ostringstream out, err;
  const int s = run(job, out, err);
  return {s, out.str(), err.str()};
}

JobSpec job(std::string command, std::vector<std::string> args, std::string quiver = "A1") {
  JobSpec j;
  j.quiver = std::move(quiver);
  j.command = std::move(command);
  j.args = std::move(args);
  return j;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("perihall_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("quiver spec files") {
  const auto a2 = parse_quiver_spec("# A2\nvertices 1 2\narrow a 1 2\n", "a2");
  CHECK(a2.quiver->num_vertices() == 2);
  CHECK(a2.quiver->arrows().size() == 1);
  CHECK(!a2.p);

  // vertices come out in topological order, arrows sorted
  const auto r = parse_quiver_spec("vertices c b a\narrow y b c\narrow x a b\np 3\n", "r");
  CHECK(r.quiver->labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(r.quiver->arrows()[0].name == "x");
  CHECK(r.p == 3u);
  CHECK(r.quiver->canonical_text() == "vertices a b c\narrow x a b\narrow y b c\n");

  try {
    parse_quiver_spec("vertices 1 2\narrow a 1 3\n", "f");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
    CHECK(std::string(e.what()).find("unknown vertex '3'") != std::string::npos);
  }
  try {
    parse_quiver_spec("vertices 1\np 4\n", "f");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("not prime") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quiver_spec("vertices 1 2\narrow a 1 2\narrow b 2 1\n", "f"), ContractViolation);
  CHECK_THROWS_AS(parse_quiver_spec("arrow a 1 2\n", "f"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("vertices 1 1\n", "f"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("vertex 1\n", "f"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("", "f"), ParseError);
  CHECK_THROWS_AS(parse_quiver_spec("vertices 1\np x\n", "f"), ParseError);

  CHECK(load_quiver_spec("A3").quiver->num_vertices() == 3);
  CHECK_THROWS_AS(load_quiver_spec("/nonexistent/quiver.txt"), ContractViolation);
}

TEST_CASE("computation commands") {
  auto r = run_job(job("hall", {"S1", "S1", "S1+S1"}));
  CHECK(r.status == 0);
  CHECK(r.out == "(3/2)·√2\n");

  r = run_job(job("mult", {"0", "S1[1]"}));
  CHECK(r.out == "1\tu_S1[1]\n");
  r = run_job(job("mult", {"S1", "0"}));
  CHECK(r.out == "1\tu_S1\n");
  r = run_job(job("mult", {"S1", "S1[1]"}));
  CHECK(r.out == "√2\tu_0\n(1/2)·√2\tu_S1+S1[1]\n");

  r = run_job(job("cone", {"S1", "S1+S1"}));
  CHECK(r.out == "count\tcone\n3\tS1\n1\tS1+S1+S1[1]\n");

  r = run_job(job("hom", {"S1", "S1[1]+S1"}));
  CHECK(r.status == 0);
  CHECK(r.out.find("dim\t1\ncovering_dim\t1\n") != std::string::npos);

  r = run_job(job("pbw", {"S1+S1[1]"}));
  CHECK(r.status == 0);
  CHECK(r.out == "u_S1+S1[1] = ((1/2)·√2) · u^[1]_S1 · u^[0]_S1\nround trip: ok\n");

  r = run_job(job("objects", {}));
  CHECK(r.out.rfind("index\tname\t|Aut|\n0\t0\t1\n", 0) == 0);

  auto j = job("hall", {"S1", "S1[1]", "0"});
  j.p = 3;
  CHECK(run_job(j).out == "(1/2)·√3\n");
}

TEST_CASE("json output is exact and deterministic") {
  auto j = job("mult", {"S1", "S1[1]"});
  j.format = Format::Json;
  const auto a = run_job(j), b = run_job(j);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"b\": [\n   1,\n   2\n  ]") != std::string::npos);
  // no decimal points anywhere
  CHECK(!std::regex_search(a.out, std::regex("[0-9]\\.[0-9]")));
  j = job("verify", {"lemma"});
  j.format = Format::Json;
  CHECK(!std::regex_search(run_job(j).out, std::regex("[0-9]\\.[0-9]")));
}

TEST_CASE("verify subcommands") {
  auto r = run_job(job("verify", {"assoc"}));
  CHECK(r.status == 0);
  CHECK(r.out.find("associativity: 512/512 passed") != std::string::npos);
  CHECK(r.out.find("unit: 16/16 passed") != std::string::npos);

  for (const char* what : {"lemma", "orbit", "symmetry", "classical"}) {
    r = run_job(job("verify", {what}));
    CHECK_MESSAGE(r.status == 0, what);
  }
  // the literal relations (2) and (3) fail where <K,C> != 0
  r = run_job(job("verify", {"presentation"}));
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL      relation (2) n=0 X = S1, Y = S1") != std::string::npos);
  CHECK(r.out.find("FAIL      relation (1)") == std::string::npos);

  auto f = job("verify", {"assoc"});
  f.samples = 100;
  f.fault = "S1,S1,S1+S1";
  r = run_job(f);
  CHECK(r.status == 1);
  CHECK(r.err == "fault injected: F(S1, S1, S1+S1) + 1\n");
  CHECK(r.out.find("FAIL") != std::string::npos);
  f.fault = "auto";
  CHECK(run_job(f).status == 1);

  CHECK(run_job(job("verify", {"everything"})).status == 2);
}

TEST_CASE("errors") {
  auto r = run_job(job("hall", {"S1", "S7", "S1"}));
  CHECK(r.status == 2);
  CHECK(r.err == "error: unknown class 'S7'\n");
  auto j = job("cone", {"S1+S1", "S1+S1"});
  j.budget = 3;
  r = run_job(j);
  CHECK(r.status == 2);
  CHECK(r.err.find("dimension 4 exceeds cap 3") != std::string::npos);
  j = job("objects", {});
  j.p = 4;
  CHECK(run_job(j).err == "error: 4 is not prime\n");
  j.p = std::nullopt;
  j.max_dim = {1, 1};
  CHECK(run_job(j).status == 2);
  CHECK(run_job(job("hall", {"S1"})).status == 2);
}

TEST_CASE("catalog round trips") {
  const CatalogFile empty;
  CHECK(to_json(from_json(to_json(empty), "empty")) == to_json(empty));
  CHECK(from_json(to_json(empty), "empty").classes.empty());

  const auto c1 = temp_path("c1.json"), c2 = temp_path("c2.json"), c3 = temp_path("c3.json");
  auto e = job("catalog", {"export"});
  e.out = c1;
  REQUIRE(run_job(e).status == 0);
  const std::string bytes = slurp(c1);
  CHECK(bytes.find("\"version\": 1") != std::string::npos);

  auto i = job("catalog", {"import", c1});
  auto r = run_job(i);
  CHECK(r.status == 0);
  CHECK(r.out.find("1 classes, 125 constants, q = 2") != std::string::npos);
  i.out = c2;
  REQUIRE(run_job(i).status == 0);
  CHECK(slurp(c2) == bytes);

  // same job, same bytes
  e.out = c3;
  REQUIRE(run_job(e).status == 0);
  CHECK(slurp(c3) == bytes);

  r = run_job(job("catalog", {"check", c1}));
  CHECK(r.status == 0);
  CHECK(r.out.find("catalog check: 125/125 passed") != std::string::npos);
  auto bad = job("catalog", {"check", c1});
  bad.fault = "S1,S1,S1+S1";
  CHECK(run_job(bad).status == 1);

  std::string bumped = bytes;
  bumped.replace(bumped.find("\"version\": 1"), 12, "\"version\": 2");
  {
    std::ofstream f(c3, std::ios::binary);
    f << bumped;
  }
  r = run_job(job("catalog", {"import", c3}));
  CHECK(r.status == 2);
  CHECK(r.err.find("schema version 2 is not supported") != std::string::npos);
  CHECK_THROWS_AS(from_json(bumped, "bumped"), ContractViolation);
  CHECK_THROWS_AS(from_json("{", "broken"), ParseError);
  CHECK_THROWS_AS(from_json("{\"schema\": \"perihall-catalog\", \"version\": 1}", "short"), ParseError);

  // A2 catalogs carry the arrow matrices and reseed to the same ids
  auto a2 = job("catalog", {"export"}, "A2");
  a2.samples = 3;
  a2.out = c1;
  REQUIRE(run_job(a2).status == 0);
  const auto f = from_json(slurp(c1), c1);
  CHECK(f.classes.size() == 3);
  CHECK(f.classes[2].maps == std::vector<std::vector<std::vector<std::int64_t>>>{{{1}}});
  CHECK(run_job(job("catalog", {"check", c1})).status == 0);
  for (const auto& p : {c1, c2, c3}) std::filesystem::remove(p);
}
