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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amoeba/gallery.hpp"
#include "amoeba/parallel.hpp"

using namespace amoeba;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("quick gallery passes and is reproducible") {
  const fs::path root = fs::temp_directory_path() / "amoeba-gallery-test";
  fs::remove_all(root);
  const GalleryResult a = run_gallery((root / "a").string(), Profile::kQuick, 1);
  set_worker_threads(2);
  const GalleryResult b = run_gallery((root / "b").string(), Profile::kQuick, 1);
  set_worker_threads(0);

  CHECK(a.exit_code() == 0);
  for (const auto& c : a.cases) {
    CHECK(c.status == "ok");
    for (const auto& e : c.expectations) {
      INFO(c.name << ": " << e.check << " observed " << e.observed);
      if (e.required) CHECK(e.passed);
    }
  }
  CHECK(a.cases.size() == 6);
  const std::string ja = slurp(root / "a" / "results.json");
  CHECK_FALSE(ja.empty());
  CHECK(ja == slurp(root / "b" / "results.json"));
  CHECK(slurp(root / "a" / "exp-curve.pgm") == slurp(root / "b" / "exp-curve.pgm"));
  CHECK(slurp(root / "a" / "exp-curve.pgm").rfind("P5\n512 512\n255\n", 0) == 0);
  CHECK(fs::exists(root / "a" / "spatial-curve-13.pgm"));
  CHECK(fs::exists(root / "a" / "summary.txt"));
  fs::remove_all(root);
}

TEST_CASE("every expectation is tagged") {
  const fs::path root = fs::temp_directory_path() / "amoeba-gallery-tags";
  const GalleryResult r = run_gallery(root.string(), Profile::kQuick, 3);
  int literature = 0;
  for (const auto& c : r.cases) {
    for (const auto& e : c.expectations) {
      CHECK((e.basis == "literature" || e.basis == "derived" || e.basis == "construction"));
      literature += e.basis == "literature";
    }
  }
  CHECK(literature > 20);
  CHECK(r.table().find("exit code") != std::string::npos);
  fs::remove_all(root);
}

TEST_CASE("profiles") {
  CHECK(parse_profile("quick") == Profile::kQuick);
  CHECK(parse_profile("full") == Profile::kFull);
  CHECK_THROWS_AS(parse_profile("huge"), ConfigError);
}
