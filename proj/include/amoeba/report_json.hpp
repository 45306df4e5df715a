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

// JSON configuration files and JSON reports.
//
// Variety config (schemas/variety.schema.json):
//   {"schema_version": 1, "name": "...", "k": 1, "n": 2,
//    "components": ["t1", "exp(t1)"],
//    "domain": [{"kind": "annulus", "center": [0, 0], "log_radius": [-10, 10]}
//             | {"kind": "box", "re": [a, b], "im": [c, d]}],
//    "exclusions": [{"var": 1, "center": [re, im], "radius": 1e-9}],
//    "multiplicity": {"log": 2, "arg": 1},
//    "tags": ["algebraic"]}
// Plane config (schemas/plane.schema.json):
//   {"schema_version": 1, "name": "...", "k": 1, "s": 1,
//    "b": [[1, 0]], "a": [[[1, 0]]]}
// Complex numbers are [re, im] pairs or plain reals.

#pragma once

#include <string>

#include "json.hpp"

#include "amoeba/fibers.hpp"
#include "amoeba/identity_check.hpp"
#include "amoeba/limit_sets.hpp"
#include "amoeba/linear_spaces.hpp"
#include "amoeba/measure.hpp"
#include "amoeba/raster.hpp"
#include "amoeba/variety.hpp"

namespace amoeba {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Both throw ConfigError naming the offending field.
VarietySpec variety_from_json(const Json& j);
AffinePlaneSpec plane_from_json(const Json& j);

// Reads and parses a file; also throws ConfigError on I/O or syntax errors.
Json read_json_file(const std::string& path);
VarietySpec load_variety(const std::string& path);
AffinePlaneSpec load_plane(const std::string& path);

Json complex_to_json(Complex c);

Json to_json(const VariableDomain& d);
Json to_json(const VarietySpec& spec);
Json to_json(const AffinePlaneSpec& plane);
Json to_json(const VolumeEstimate& v);
Json to_json(const FinitenessVerdict& v);
Json to_json(const FiberReport& r);
Json to_json(const PPEstimate& e);
Json to_json(const ComparisonReport& c);
Json to_json(const JacobianCheckReport& r);
Json to_json(const LimitSetReport& r);
Json to_json(const VolumeCheck& c);
Json to_json(const VolumeCertificate& c);
Json to_json(const RealityWitness& w);
Json to_json(const ExpectedCounts& c);
Json to_json(const RasterGrid& g);  // summary only, no pixels

// Two-space indent plus trailing newline.
std::string dump(const Json& j);

}  // namespace amoeba
