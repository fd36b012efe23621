#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "qm/json_io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QMOD_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/qmod_test_" + name + ".json";
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli analyze") {
  const std::string path = write_temp(
      "sigma",
      R"({"type":"sigma","n":1,"m":1,"p":1,"A":[["0"]],"B":[["1"]],"C":[["1"]],"D":[["0"]]})");
  const RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  const qm::Json j = qm::parse_json(r.out);
  CHECK(j["controllable"] == true);
  CHECK(j["observable"] == true);

  // Identical runs produce byte-identical output.
  CHECK(run_cli("analyze " + path).out == r.out);
}

TEST_CASE("cli analyze helmke includes the output-free reduction") {
  const std::string path = write_temp(
      "helmke",
      R"({"type":"helmke","n":1,"m":1,"p":1,"E":[["1"]],"A":[["0"]],"B":[["1"]],)"
      R"("C":[["0"]],"D":[["0"]],"F":[["1"]]})");
  const RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  const qm::Json j = qm::parse_json(r.out);
  CHECK(j["controllable"] == true);
  CHECK(j["observable"].is_null());
  CHECK(j["stabilizer_lie_dim"] == 0);
  CHECK(j["forget_output"]["controllable"] == true);
}

TEST_CASE("cli stability verdicts and chambers") {
  const std::string sigma = write_temp(
      "sig2",
      R"({"type":"sigma","n":1,"m":1,"p":0,"A":[["0"]],"B":[["1"]],"C":[],"D":[]})");
  RunResult r = run_cli("stability --char=1 " + sigma);
  CHECK(r.exit_code == 0);
  CHECK(qm::parse_json(r.out)["verdict"] == "stable");

  const std::string lom = write_temp(
      "lom",
      R"({"type":"lomadze","n":1,"m":1,"p":0,"K":[["1"]],"L":[["0"]],"M":[["0"]]})");
  r = run_cli("stability --char=-1,3 " + lom);
  CHECK(r.exit_code == 0);
  qm::Json j = qm::parse_json(r.out);
  CHECK(j["verdict"] == "unstable");
  CHECK(j["chamber"]["kind"] == "interval");

  r = run_cli("stability --char=1,1 " + lom);
  CHECK(qm::parse_json(r.out)["verdict"] == "no_semistable_points");

  // Undecided wall: a successful run with an honest verdict.
  r = run_cli("stability --char=0,1 " + lom);
  CHECK(r.exit_code == 0);
  CHECK(qm::parse_json(r.out)["verdict"] == "unsupported");

  // Arity mismatch: three weights against a pencil system.
  r = run_cli("stability --char=1,1,1 " + lom);
  CHECK(r.exit_code == 3);
}

TEST_CASE("cli chambers") {
  const RunResult r = run_cli("chambers -n 2 -p 1");
  CHECK(r.exit_code == 0);
  const qm::Json j = qm::parse_json(r.out);
  CHECK(j["lambda"] == qm::Json::array({"0", "1/2", "1", "3/2", "2", "3", "inf"}));
  CHECK(j["walls"].size() == 7);
  CHECK(j["intervals"].size() == 6);
  // Sample characters land where claimed.
  CHECK(j["intervals"][1]["lower"] == "1/2");
  CHECK(j["intervals"][1]["upper"] == "1");
}

TEST_CASE("cli quiver subcommands") {
  const qm::Json qj = qm::quiver_to_json(qm::sigma_quiver(2, 1, 1));
  const std::string path = write_temp("quiver", qj.dump());

  RunResult r = run_cli("quiver projective " + path);
  CHECK(r.exit_code == 0);
  CHECK(qm::parse_json(r.out)["projective"] == false);

  r = run_cli("quiver invariants --max-len 2 " + path);
  CHECK(r.exit_code == 0);
  qm::Json inv = qm::parse_json(r.out);
  CHECK(inv["truncated"] == true);
  CHECK(inv["count"] == 4);
  CHECK(inv["generators"][0]["kind"] == "trace");
  CHECK(inv["generators"][0]["word"] == "A");

  r = run_cli("quiver reduce --char=1 " + path);
  CHECK(r.exit_code == 0);
  qm::Json red = qm::parse_json(r.out);
  CHECK(red["stripped_edges"] == qm::Json::array({3}));
  CHECK(red["extended_character"] == qm::Json::array({1, -2}));
  // The reduced quiver JSON parses back.
  CHECK(qm::quiver_from_json(red["reduced"]).quiver.vertices == 2);
}

TEST_CASE("cli chow subcommands") {
  RunResult r = run_cli("chow compare -n 1 -m 1 -p 1");
  CHECK(r.exit_code == 0);
  qm::Json j = qm::parse_json(r.out);
  CHECK(j["isomorphic"] == false);
  CHECK(j["rank_L"] == 4);
  CHECK(j["rank_H"] == 6);

  r = run_cli("chow rank -n 2 -m 2 -p 0");
  j = qm::parse_json(r.out);
  CHECK(j["rank_L"] == 10);
  CHECK(j["rank_H"] == 10);

  r = run_cli("chow presentation -n 1 -m 1 -p 1");
  CHECK(r.exit_code == 0);
  j = qm::parse_json(r.out);
  CHECK(j["rank"]["total"] == 6);
  CHECK(j["rank"]["per_degree"] == qm::Json::array({1, 2, 2, 1}));
  CHECK(qm::presentation_from_json(j["presentation"]).top_degree == 3);

  // The pencil-side compactification is a projective space.
  r = run_cli("chow presentation -n 1 -m 1 -p 1 --space L");
  CHECK(r.exit_code == 0);
  j = qm::parse_json(r.out);
  CHECK(j["rank"]["total"] == 4);
  CHECK(j["presentation"]["variables"].size() == 1);

  // Multi-input presentations are unavailable by design.
  r = run_cli("chow presentation -n 1 -m 2 -p 1");
  CHECK(r.exit_code == 4);
}

TEST_CASE("cli oracle") {
  qm::Json rep;
  rep["quiver"] = qm::quiver_to_json(qm::sigma_quiver(1, 1, 0));
  rep["modulus"] = 2;
  rep["maps"] = qm::Json::array({qm::Json::array({qm::Json::array({"0"})}),
                                 qm::Json::array({qm::Json::array({"1"})}),
                                 qm::Json::array(), qm::Json::array()});
  const std::string path = write_temp("rep", rep.dump());
  RunResult r = run_cli("oracle --char=1 " + path);
  CHECK(r.exit_code == 0);
  CHECK(qm::parse_json(r.out)["verdict"] == "stable");

  rep["maps"][1] = qm::Json::array({qm::Json::array({"0"})});
  rep["character"] = qm::Json::array({1});
  const std::string path2 = write_temp("rep2", rep.dump());
  r = run_cli("oracle " + path2);
  CHECK(r.exit_code == 0);
  const qm::Json v = qm::parse_json(r.out);
  CHECK(v["verdict"] == "unstable");
  CHECK(v["witness"]["subspaces"][0]["dim"] == 0);
}

TEST_CASE("cli batch input emits one line per document") {
  const std::string line1 =
      R"({"type":"sigma","n":1,"m":1,"p":0,"A":[["0"]],"B":[["1"]],"C":[],"D":[]})";
  const std::string line2 =
      R"({"type":"sigma","n":1,"m":1,"p":0,"A":[["0"]],"B":[["0"]],"C":[],"D":[]})";
  const std::string path = write_temp("batch", line1 + "\n" + line2 + "\n");
  const RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  const std::size_t nl = r.out.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(qm::parse_json(r.out.substr(0, nl))["controllable"] == true);
  CHECK(qm::parse_json(r.out.substr(nl + 1))["controllable"] == false);
}

TEST_CASE("cli error exit codes") {
  const std::string bad = write_temp("bad", "this is not json");
  CHECK(run_cli("analyze " + bad).exit_code == 2);

  const std::string shape = write_temp(
      "shape",
      R"({"type":"sigma","n":2,"m":1,"p":0,"A":[["0"]],"B":[["1"]],"C":[],"D":[]})");
  CHECK(run_cli("analyze " + shape).exit_code == 3);

  // Oracle budget: a 13-dimensional lattice over F_2 exceeds the subspace
  // enumeration budget.
  qm::Json rep;
  qm::MarkedQuiver mq;
  mq.quiver.vertices = 1;
  mq.quiver.edges = {{0, 0}};
  mq.marked = {0};
  mq.dims = {13};
  rep["quiver"] = qm::quiver_to_json(mq);
  rep["modulus"] = 2;
  qm::Json zero13 = qm::Json::array();
  for (int i = 0; i < 13; ++i) {
    qm::Json row = qm::Json::array();
    for (int j = 0; j < 13; ++j) row.push_back("0");
    zero13.push_back(row);
  }
  rep["maps"] = qm::Json::array({zero13});
  const std::string big = write_temp("big", rep.dump());
  CHECK(run_cli("oracle --char=1 " + big).exit_code == 5);
}
