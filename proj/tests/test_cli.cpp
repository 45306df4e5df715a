// Copyright 2026 The Amoebavol Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "amoeba/report_json.hpp"

using namespace amoeba;
namespace fs = std::filesystem;

namespace {

const fs::path kTmp = fs::temp_directory_path() / "amoeba-cli-test";

int run(const std::string& args, const std::string& env = "") {
  fs::create_directories(kTmp);
  const std::string cmd = env + " " + AMOEBA_CLI + " " + args + " > " + (kTmp / "stdout").string() + " 2> " +
                          (kTmp / "stderr").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string out() {
  std::ifstream in(kTmp / "stdout");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string config(const char* name) { return std::string(AMOEBA_SOURCE_DIR) + "/configs/" + name; }

}  // namespace

TEST_CASE("volume report and seed override") {
  REQUIRE(run("volume --spec " + config("real-line.json") + " --samples 20000 --seed 5") == 0);
  const Json a = Json::parse(out());
  CHECK(a["seed"] == 5);
  CHECK(a["samples"] == 20000);
  CHECK(a["multiplicity"] == 2);
  REQUIRE(run("volume --spec " + config("real-line.json") + " --samples 20000 --seed 5", "AMOEBA_SEED=6") == 0);
  const Json b = Json::parse(out());
  CHECK(b["seed"] == 6);
  CHECK(b["value"] != a["value"]);
  REQUIRE(run("volume --spec " + config("real-line.json") + " --samples 20000 --seed 6") == 0);
  CHECK(Json::parse(out()) == b);
}

TEST_CASE("expectation failures exit 1") {
  CHECK(run("volume --spec " + config("real-line.json") + " --samples 20000 --expect 4.9348") == 0);
  CHECK(run("volume --spec " + config("real-line.json") + " --samples 20000 --expect 7.0") == 1);
}

TEST_CASE("config errors exit 2") {
  CHECK(run("volume --spec " + config("missing.json")) == 2);
  std::ofstream(kTmp / "bad.json") << R"({"schema_version": 1, "k": 1, "n": 2, "components": ["t1", "t1"], "domain": [], "x": 0})";
  CHECK(run("volume --spec " + (kTmp / "bad.json").string()) == 2);
  CHECK(run("volume") == 2);
  CHECK(run("raster --spec " + config("real-line.json") + " --out x.pgm --bounds 1,2,3") == 2);
  CHECK(run("fibers --spec " + config("real-line.json") + " --target 0") == 2);
  CHECK(run("raster --poly 'exp(t1)+t2' --out " + (kTmp / "p.pgm").string()) == 2);
  CHECK(run("volume --spec " + config("real-line.json"), "AMOEBA_SEED=abc") == 2);
}

TEST_CASE("fibers, limitset, plane and jacobian-check") {
  REQUIRE(run("fibers --spec " + config("real-line.json") + " --target 0,0") == 0);
  CHECK(Json::parse(out())["count"] == 2);
  REQUIRE(run("fibers --spec " + config("real-line.json") + " --map arg --at 0.3,0.8") == 0);
  CHECK(Json::parse(out())["count"] == 1);
  REQUIRE(run("limitset --spec " + config("circle-curve.json") + " --samples 50000 --format csv") == 0);
  CHECK(out().rfind("d1,d2,weight,spread,rationality,arc_id\n", 0) == 0);
  REQUIRE(run("plane --plane " + config("real-line.plane.json") + " --samples 200000 --probes 5") == 0);
  const Json p = Json::parse(out());
  CHECK(p["fibers"]["p"] == "1/2");
  CHECK(p["volume_certificate"]["passed"] == true);
  REQUIRE(run("jacobian-check --samples 2000") == 0);
  CHECK(Json::parse(out()).size() == 6);
}

TEST_CASE("raster writes an image and --out redirects reports") {
  const fs::path img = kTmp / "line.pgm";
  REQUIRE(run("raster --spec " + config("real-line.json") + " --res 64 --samples 20000 --out " + img.string()) == 0);
  CHECK(Json::parse(out())["width"] == 64);
  std::ifstream in(img, std::ios::binary);
  std::string magic;
  std::getline(in, magic);
  CHECK(magic == "P5");
  const fs::path rep = kTmp / "report.json";
  REQUIRE(run("--out " + rep.string() + " volume --spec " + config("real-line.json") + " --samples 1000") == 0);
  CHECK(out().empty());
  CHECK(read_json_file(rep.string())["samples"] == 1000);
}
