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

// Built-in example gallery: the exp, circle and spatial curves and three
// affine planes, each with its expected outcomes.
//
// Expectation basis:
//   literature    statements about the example taken from the literature
//   derived       consequences worked out by hand for this parametrization
//   construction  consistency between two routes through this library

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "amoeba/linear_spaces.hpp"
#include "amoeba/report_json.hpp"
#include "amoeba/variety.hpp"

namespace amoeba {

// (t, e^t) on the annulus |ln|t|| <= log_radius.
VarietySpec exp_curve(double log_radius = 40.0);
// (cos t, sin t) on ]0, 2pi[ x [-im_half_width, im_half_width] minus the
// real points where a coordinate vanishes.
VarietySpec circle_curve(double im_half_width = 40.0);
// (t, e^t, t + 1), t = -1 removed.
VarietySpec spatial_curve(double log_radius = 40.0);

AffinePlaneSpec real_line();     // (t, 1 + t)
AffinePlaneSpec nonreal_line();  // (t, 1 + t, i + 2t)
AffinePlaneSpec real_2plane();   // (t1, t2, 1 + t1 + t2, 2 + 3 t1 - t2)

// Specs used by the Jacobian identity sweep.
std::vector<VarietySpec> gallery_varieties();

enum class Profile { kQuick, kFull };
std::string to_string(Profile p);
Profile parse_profile(std::string_view name);

struct Expectation {
  std::string check;
  std::string basis;
  bool required = true;  // counts toward the exit code
  std::string expected;
  std::string observed;
  bool passed = false;
};

struct GalleryCaseResult {
  std::string name;
  std::string status = "ok";  // ok | error
  std::string error;
  std::vector<Expectation> expectations;
  std::vector<std::string> figures;
  Json report;
};

struct GalleryResult {
  Profile profile = Profile::kQuick;
  std::uint64_t seed = 1;
  std::vector<GalleryCaseResult> cases;

  // 0 all required literature expectations pass, 1 one fails, 3 a case crashed.
  int exit_code() const;
  Json to_json() const;
  std::string table() const;
};

// Writes results.json, summary.txt and the figures into `dir` (created if
// missing). `log` receives one line per finished case when non-null.
GalleryResult run_gallery(const std::string& dir, Profile profile, std::uint64_t seed, std::ostream* log = nullptr);

}  // namespace amoeba
