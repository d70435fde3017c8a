// Copyright 2026 lctlab authors
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

// End-to-end checks of the command-line front end: exit-code contract,
// output layout and byte-level determinism. Spawns the real binary
// (path injected as LCT_BIN at compile time).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "lct_cli_test";

int run(const std::string& args) {
  const std::string cmd =
      std::string(LCT_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

fs::path write_config(const char* name, const std::string& text) {
  fs::create_directories(kWork);
  const fs::path p = kWork / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ostringstream buf;
  buf << std::ifstream(p).rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("transform: success layout and determinism") {
  const fs::path cfg = write_config("transform.json",
      R"({"kind":"frft","alpha":0.8,"seed":7,)"
      R"("fixture":{"name":"gaussian","grid":{"T":16,"N":1024}}})");
  const fs::path out1 = kWork / "t1";
  const fs::path out2 = kWork / "t2";
  CHECK(run("transform --config " + cfg.string() + " --out " +
            out1.string()) == 0);
  CHECK(run("transform --config " + cfg.string() + " --out " +
            out2.string()) == 0);
  for (const char* f : {"report.csv", "report.json", "transform.csv",
                        "transform.json", "run.log"}) {
    CHECK(fs::exists(out1 / f));
  }
  // same config + seed: byte-identical CSVs
  CHECK(slurp(out1 / "report.csv") == slurp(out2 / "report.csv"));
  CHECK(slurp(out1 / "transform.csv") == slurp(out2 / "transform.csv"));
  std::ifstream csv(out1 / "transform.csv");
  std::string header;
  while (std::getline(csv, header) && header.rfind("#", 0) == 0) {}
  CHECK(header == "t,re,im");
}

TEST_CASE("config echo lands in the sidecar") {
  const fs::path cfg = write_config("echo.json",
      R"({"kind":"frft","alpha":0.5,)"
      R"("fixture":{"name":"gaussian","grid":{"T":16,"N":1024}}})");
  const fs::path out = kWork / "echo_out";
  REQUIRE(run("transform --config " + cfg.string() + " --out " +
              out.string()) == 0);
  const std::string sidecar = slurp(out / "report.json");
  CHECK(sidecar.find("\"alpha\"") != std::string::npos);
  CHECK(sidecar.find("config") != std::string::npos);
}

TEST_CASE("exit code 2: schema violations") {
  const fs::path bad = write_config("bad.json", "{ not json");
  CHECK(run("transform --config " + bad.string() + " --out " +
            (kWork / "b1").string()) == 2);

  const fs::path missing_field = write_config("missing.json",
      R"({"kind":"frft","fixture":{"name":"gaussian","grid":{"T":16,"N":1024}}})");
  CHECK(run("transform --config " + missing_field.string() + " --out " +
            (kWork / "b2").string()) == 2);

  const fs::path bad_grid = write_config("badgrid.json",
      R"({"kind":"frft","alpha":0.5,)"
      R"("fixture":{"name":"gaussian","grid":{"T":16,"N":1000}}})");
  CHECK(run("transform --config " + bad_grid.string() + " --out " +
            (kWork / "b3").string()) == 2);

  CHECK(run("transform --config " + (kWork / "nonexistent.json").string() +
            " --out " + (kWork / "b4").string()) == 2);
}

TEST_CASE("exit code 3: aliasing guard") {
  // C = 400 chirp cannot be sampled on a 256-point grid over [-16, 16)
  const fs::path cfg = write_config("alias.json",
      R"({"kind":"lct","params":{"A":0.0,"B":1.0,"C":400.0},)"
      R"("fixture":{"name":"gaussian","grid":{"T":16,"N":256}}})");
  CHECK(run("transform --config " + cfg.string() + " --out " +
            (kWork / "a1").string()) == 3);
}

TEST_CASE("exit code 4: degenerate parameters") {
  const fs::path cfg = write_config("degenerate.json",
      R"({"a":0.0,"b":0.0,"N_limit":100.0})");
  CHECK(run("lemma-integral --config " + cfg.string() + " --out " +
            (kWork / "d1").string()) == 4);

  const fs::path zero_b = write_config("zerob.json",
      R"({"kind":"lct","params":{"A":0.0,"B":0.0,"C":0.0},)"
      R"("fixture":{"name":"gaussian","grid":{"T":16,"N":1024}}})");
  CHECK(run("transform --config " + zero_b.string() + " --out " +
            (kWork / "d2").string()) == 4);
}

TEST_CASE("verify-group command reports the residuals") {
  const fs::path cfg = write_config("group.json",
      R"({"subgroup":{"family":"I","omega":1.0,"lambda":1.0,"gamma":0.0},)"
      R"("alpha":0.4,"beta":0.3})");
  const fs::path out = kWork / "g1";
  REQUIRE(run("verify-group --config " + cfg.string() + " --out " +
              out.string()) == 0);
  const std::string sidecar = slurp(out / "report.json");
  CHECK(sidecar.find("group_law_ok") != std::string::npos);
  CHECK(sidecar.find("\"group_law_ok\": true") != std::string::npos);
}

TEST_CASE("sweep-l2 command emits rows and flags") {
  const fs::path cfg = write_config("sweep.json",
      R"({"profile":{"name":"linear_A"},"alpha0":0.0,"step_count":8,)"
      R"("fixture":{"name":"gaussian","grid":{"T":16,"N":1024}}})");
  const fs::path out = kWork / "s1";
  REQUIRE(run("sweep-l2 --config " + cfg.string() + " --out " +
              out.string()) == 0);
  const std::string csv = slurp(out / "report.csv");
  CHECK(csv.find("gap") != std::string::npos);
  CHECK(slurp(out / "report.json").find("gap_halving") != std::string::npos);
}

TEST_CASE("environment variable overrides the output directory") {
  const fs::path cfg = write_config("envout.json",
      R"({"a":1.0,"b":0.5,"N_limit":50.0})");
  const fs::path out = kWork / "env_out";
  const std::string cmd = "LCT_OUT_DIR=" + out.string() + " " + LCT_BIN +
                          " lemma-integral --config " + cfg.string() +
                          " > /dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(out / "report.csv"));
}
