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

#include <set>

#include "amoeba/gallery.hpp"
#include "amoeba/report_json.hpp"

using namespace amoeba;

namespace {

Json base() {
  return Json::parse(R"({
    "schema_version": 1, "name": "line", "k": 1, "n": 2,
    "components": ["t1", "1+t1"],
    "domain": [{"kind": "annulus", "center": [0, 0], "log_radius": [-10, 10]}],
    "exclusions": [{"var": 1, "center": [-1, 0], "radius": 1e-9}],
    "multiplicity": {"log": 2, "arg": 1},
    "tags": ["algebraic"]
  })");
}

std::set<std::string> schema_keys(const std::string& file, const char* def = nullptr) {
  const Json schema = read_json_file(std::string(AMOEBA_SOURCE_DIR) + "/schemas/" + file);
  const Json& node = def ? schema["$defs"][def] : schema;
  std::set<std::string> keys;
  for (const auto& item : node["properties"].items()) keys.insert(item.key());
  return keys;
}

}  // namespace

TEST_CASE("variety config round trip") {
  const VarietySpec spec = variety_from_json(base());
  CHECK(spec.k == 1);
  CHECK(spec.n == 2);
  CHECK(spec.exclusions.size() == 1);
  CHECK(spec.exclusions[0].var == 0);
  CHECK(spec.multiplicity_log == 2);
  const Json again = to_json(spec);
  const VarietySpec back = variety_from_json(again);
  CHECK(to_json(back) == again);
  CHECK(back.domain == spec.domain);
  for (const VarietySpec& g : gallery_varieties()) {
    CHECK(to_json(variety_from_json(to_json(g))) == to_json(g));
  }
}

TEST_CASE("invalid configs are rejected") {
  auto rejects = [](const Json& j) { CHECK_THROWS_AS(variety_from_json(j), ConfigError); };
  Json j = base();
  j.erase("schema_version");
  rejects(j);
  j = base();
  j["schema_version"] = 2;
  rejects(j);
  j = base();
  j["colour"] = "red";
  rejects(j);
  j = base();
  j["n"] = 3;
  rejects(j);
  j = base();
  j["components"][1] = "1+t2";
  rejects(j);
  j = base();
  j["domain"][0]["kind"] = "disc";
  rejects(j);
  j = base();
  j["domain"][0]["log_radius"] = Json::array({3, -3});
  rejects(j);
  j = base();
  j["exclusions"][0]["var"] = 2;
  rejects(j);
  j = base();
  j["multiplicity"]["log"] = 0;
  rejects(j);
  j = base();
  j["k"] = 1.5;
  rejects(j);
}

TEST_CASE("loader and published schema list the same fields") {
  CHECK(schema_keys("variety.schema.json") ==
        std::set<std::string>{"schema_version", "name", "k", "n", "components", "domain", "exclusions", "multiplicity", "tags"});
  CHECK(schema_keys("variety.schema.json", "annulus") == std::set<std::string>{"kind", "center", "log_radius"});
  CHECK(schema_keys("variety.schema.json", "box") == std::set<std::string>{"kind", "re", "im"});
  CHECK(schema_keys("plane.schema.json") == std::set<std::string>{"schema_version", "name", "k", "s", "b", "a"});
  // every field the schema lists is accepted
  Json j = base();
  j["domain"][0] = Json::parse(R"({"kind": "box", "re": [0, 1], "im": [0, 1]})");
  CHECK_NOTHROW(variety_from_json(j));
}

TEST_CASE("shipped configs load") {
  const std::string dir = std::string(AMOEBA_SOURCE_DIR) + "/configs/";
  for (const char* f : {"exp-curve.json", "circle-curve.json", "spatial-curve.json", "real-line.json"}) {
    CHECK_NOTHROW(load_variety(dir + f));
  }
  for (const char* f : {"real-line.plane.json", "non-real-line.plane.json", "real-plane.plane.json"}) {
    CHECK_NOTHROW(load_plane(dir + f));
  }
  CHECK(to_json(load_plane(dir + "real-plane.plane.json")) == [] {
    Json j = to_json(real_2plane());
    return j;
  }());
  CHECK_THROWS_AS(load_variety(dir + "missing.json"), ConfigError);
}

TEST_CASE("plane configs") {
  const AffinePlaneSpec p = plane_from_json(Json::parse(R"({"schema_version": 1, "k": 1, "s": 2, "b": [1, [0, 1]], "a": [[1], [2]]})"));
  CHECK(p.b[1] == Complex(0, 1));
  CHECK_THROWS_AS(plane_from_json(Json::parse(R"({"schema_version": 1, "k": 1, "s": 2, "b": [1], "a": [[1], [2]]})")), ConfigError);
  CHECK_THROWS_AS(plane_from_json(Json::parse(R"({"schema_version": 1, "k": 1, "s": 1, "b": [1], "a": [[0]]})")), ConfigError);
}

TEST_CASE("volume report carries the documented fields") {
  VolumeEstimate v;
  v.value = 1.5;
  v.std_error = 0.1;
  v.samples = 10;
  v.multiplicity = 2;
  v.seed = 3;
  const Json j = to_json(v);
  for (const char* key : {"value", "stderr", "samples", "multiplicity", "box", "seed"}) CHECK(j.contains(key));
  CHECK(dump(j) == dump(to_json(v)));
  CHECK(dump(j).back() == '\n');
}
