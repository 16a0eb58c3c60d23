// Copyright 2026 The catlower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catlower/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = catlower::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args, int expect_code) {
  args.push_back("--json");
  const Result r = invoke(args);
  INFO(r.out << r.err);
  CHECK(r.code == expect_code);
  return Json::parse(r.out);
}

std::string data(const std::string &name) { return std::string(CATLOWER_TEST_DATA) + "/" + name; }

std::string scratch(const std::string &name, const std::string &contents) {
  const fs::path dir = fs::path(CATLOWER_BUILD_DIR) / "cli_scratch";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << contents;
  return p.string();
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double metric(const Json &j, const std::string &name) { return j["metrics"][name].get<double>(); }

}  // namespace

TEST_CASE("verify command", "[cli]") {
  const Json j = invoke_json({"verify"}, 0);
  CHECK(j["command"] == "verify");
  CHECK(j["ok"] == true);
  CHECK(metric(j, "max_rz_error") <= 1e-12);
  CHECK(metric(j, "theta_steps") == 128);
  CHECK(std::abs(metric(j, "catalyst_flip_phase") - 0.78539816339744828) <= 1e-12);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "ok", "metrics", "artifacts"});

  CHECK(invoke_json({"verify", "--theta-steps", "1"}, 0)["ok"] == true);
  CHECK(invoke_json({"verify", "--tol", "1e-30"}, 1)["ok"] == false);
  CHECK(invoke({"verify", "--theta-steps", "0"}).code == 1);

  const Result text = invoke({"verify"});
  CHECK(text.code == 0);
  CHECK(text.out.find("verify: ok") != std::string::npos);
}

TEST_CASE("lower command", "[cli]") {
  const std::string cs = scratch("cs.txt", "qubits 2\nCS 0 1\n");
  const std::string out = (fs::path(CATLOWER_BUILD_DIR) / "cli_scratch" / "cs_low.txt").string();
  const Json j = invoke_json({"lower", cs, "--target", "HCCZ", "--out", out}, 0);
  CHECK(j["ok"] == true);
  CHECK(metric(j, "distance") <= 1e-12);
  CHECK(j["artifacts"][0] == out);
  CHECK(j["report"]["counts"]["H"] == 2);
  CHECK(j["report"]["counts"]["CCZ"] == 2);
  CHECK(j["report"]["ccz_per_cs"] == 2.0);
  CHECK(j["verification"] == "passed");
  CHECK(slurp(out) == "qubits 3\nH 2\nCCZ 0 1 2\nH 2\nCCZ 0 1 2\n");

  const std::string y = scratch("y.txt", "qubits 1\nH 0\nY 0\n");
  const Json bad = invoke_json({"lower", y, "--target", "REAL_O2_CCZ"}, 1);
  CHECK(bad["ok"] == false);
  CHECK(metric(bad, "gate_index") == 1);
  CHECK(bad["error"].get<std::string>().find("not lowerable") != std::string::npos);
  const Result bad_text = invoke({"lower", y});
  CHECK(bad_text.code == 1);
  CHECK(bad_text.err.find("gate 1 not lowerable") != std::string::npos);

  const std::string wide = scratch("wide.txt", "qubits 5\nS 0\n");
  const Json skipped = invoke_json({"lower", wide}, 0);
  CHECK(skipped["verification"].get<std::string>().rfind("skipped", 0) == 0);

  CHECK(invoke({"lower", scratch("garbage.txt", "qubits 1\nFOO 0\n")}).code == 1);
  CHECK(invoke({"lower", "/nonexistent/file.txt"}).code == 1);
  CHECK(invoke({"lower", cs, "--target", "NOPE"}).code == 1);
}

TEST_CASE("lower golden output", "[cli][golden]") {
  const Result a = invoke({"lower", data("mixed15.txt"), "--target", "REAL_O2_CCZ", "--json"});
  const Result b = invoke({"lower", data("mixed15.txt"), "--target", "REAL_O2_CCZ", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["ok"] == true);
  CHECK(metric(j, "distance") <= 1e-10);
  CHECK(a.out == slurp(data("mixed15_lower.json")));
}

TEST_CASE("synthesize command", "[cli]") {
  const std::string s = scratch("s.mat", "dim 2\n1,0 0,0\n0,0 0,1\n");
  const Json js = invoke_json({"synthesize", "--m", "1", "--matrix", s}, 0);
  CHECK(metric(js, "ccz_count") == 2);
  CHECK(metric(js, "distance") <= 1e-12);

  const std::string id = scratch("id.mat", "dim 2\n1,0 0,0\n0,0 1,0\n");
  const Json ji = invoke_json({"synthesize", "--m", "1", "--matrix", id}, 0);
  CHECK(metric(ji, "distance") <= 1e-7);
  CHECK(metric(ji, "gate_count") == 0);

  const Json j7 = invoke_json({"synthesize", "--m", "2", "--seed", "7"}, 0);
  CHECK(metric(j7, "distance") <= 1e-8);
  CHECK(metric(j7, "catalyst") == 1);
  CHECK(metric(j7, "ancilla") == 1);
  CHECK(invoke({"synthesize", "--m", "2", "--seed", "7", "--json"}).out ==
        invoke({"synthesize", "--m", "2", "--seed", "7", "--json"}).out);

  const std::string nonu = scratch("nonu.mat", "dim 2\n1,0 1,0\n0,0 1,0\n");
  const Json jn = invoke_json({"synthesize", "--matrix", nonu}, 1);
  CHECK(metric(jn, "unitarity_error") > 0.5);

  CHECK(invoke({"synthesize", "--m", "4", "--seed", "1"}).code == 1);
  CHECK(invoke({"synthesize", "--m", "1"}).code == 1);
  CHECK(invoke({"synthesize", "--m", "1", "--seed", "1", "--matrix", s}).code == 1);
  CHECK(invoke({"synthesize", "--matrix", scratch("bad.mat", "dim 2\n1,0\n")}).code == 1);
}

TEST_CASE("check-prep command", "[cli]") {
  const Json x = invoke_json({"check-prep", scratch("x.txt", "qubits 3\nX 0\n"), "--target-qubit", "0"}, 0);
  CHECK(x["passes"] == true);
  CHECK(x["gate_set_ok"] == false);
  CHECK(metric(x, "ccz_count") == 0);

  const Json e = invoke_json({"check-prep", scratch("e.txt", "qubits 3\n"), "--target-qubit", "0"}, 1);
  CHECK(e["passes"] == false);

  CHECK(invoke({"check-prep", scratch("x2.txt", "qubits 3\nX 0\n"), "--target-qubit", "3"}).code == 1);
}

TEST_CASE("counts command", "[cli]") {
  const Json f = invoke_json({"counts", data("fig1d.txt")}, 0);
  CHECK(f["counts"]["H"] == 2);
  CHECK(f["counts"]["CCZ"] == 2);
  CHECK(f["membership"]["HCCZ"] == true);
  CHECK(f["membership"]["HCS"] == false);
  CHECK(f["membership"]["REAL_O2_CCZ"] == true);

  const Json e = invoke_json({"counts", scratch("empty.txt", "qubits 2\n")}, 0);
  for (const auto &[k, v] : e["counts"].items()) CHECK(v == 0);

  const Json m = invoke_json({"counts", data("mixed15.txt")}, 0);
  CHECK(m["counts"]["CS"] == 2);
  CHECK(m["counts"]["S"] == 2);
  CHECK(m["counts"]["CZ"] == 2);
  CHECK(m["counts"]["H"] == 2);
  CHECK(m["counts"]["RY"] == 2);
  CHECK(metric(m, "gate_count") == 15);
}

TEST_CASE("simulate command", "[cli]") {
  const Json j = invoke_json({"simulate", data("fig1d.txt"), "--input", "+i,1,1"}, 0);
  // i |+i>|11> = (i|011> - |111>)/sqrt(2)
  const auto &amps = j["amplitudes"];
  REQUIRE(amps.size() == 2);
  const double r = 1 / std::sqrt(2.0);
  CHECK(amps[0]["bits"] == "011");
  CHECK(std::abs(amps[0]["re"].get<double>()) <= 1e-12);
  CHECK(std::abs(amps[0]["im"].get<double>() - r) <= 1e-12);
  CHECK(amps[1]["bits"] == "111");
  CHECK(std::abs(amps[1]["re"].get<double>() + r) <= 1e-12);
  CHECK(std::abs(amps[1]["im"].get<double>()) <= 1e-12);

  const std::string h = scratch("h.txt", "qubits 1\nH 0\n");
  const Json jh = invoke_json({"simulate", h, "--input", "0"}, 0);
  REQUIRE(jh["amplitudes"].size() == 2);
  for (const auto &a : jh["amplitudes"]) {
    CHECK(std::abs(a["re"].get<double>() - r) <= 1e-15);
    CHECK(a["im"].get<double>() == 0.0);
  }

  CHECK(invoke_json({"simulate", data("fig1d.txt"), "--input", "1,1", }, 1)["ok"] == false);
  CHECK(invoke({"simulate", data("fig1d.txt"), "--input", "011"}).code == 0);
  CHECK(invoke({"simulate", data("fig1d.txt"), "--input", "0,1,x"}).code == 1);
  const Json all = invoke_json({"simulate", h, "--input", "0", "--all"}, 0);
  CHECK(all["amplitudes"].size() == 2);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"bogus"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}
