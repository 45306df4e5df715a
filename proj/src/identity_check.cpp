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

#include "amoeba/identity_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amoeba/torus_maps.hpp"

namespace amoeba {

namespace {

constexpr int kMaxAttempts = 10000;

}  // namespace

JacobianCheckReport check_jacobian_identity(const VarietySpec& spec, std::uint64_t samples,
                                            std::uint64_t seed) {
  if (2 * spec.k > spec.n) throw std::invalid_argument("jacobian check requires 2k <= n");
  const JetEvaluator evaluator = spec.evaluator();
  const auto count = static_cast<std::int64_t>(samples);

  double max_rel = 0.0;
  double max_minor = 0.0;
  double max_density = 0.0;
  std::uint64_t resampled = 0;
  bool exhausted = false;

#pragma omp parallel for schedule(static) reduction(max : max_rel, max_minor, max_density) \
    reduction(+ : resampled) reduction(|| : exhausted)
  for (std::int64_t i = 0; i < count; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    ParamPoint t{};
    LogJet jet;
    bool ok = false;
    for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
      draw_parameter(spec.domain, rng, t);
      const std::span<const Complex> params(t.data(), static_cast<std::size_t>(spec.k));
      if (spec.excluded(params)) {
        ++resampled;
        continue;
      }
      try {
        evaluator.log_jet(params, jet);
        ok = true;
      } catch (const EvalError&) {
        ++resampled;
      }
    }
    if (!ok) {
      exhausted = true;
      continue;
    }
    const double log_density = generalized_jacobian(jet, MapKind::kLog);
    const double arg_density = generalized_jacobian(jet, MapKind::kArg);
    max_rel = std::max(max_rel, std::abs(log_density - arg_density) / (1.0 + log_density));
    max_density = std::max(max_density, log_density);
    for (const MinorPair& m : jacobian_minors(jet)) {
      max_minor = std::max(max_minor, std::abs(m.log_det - m.arg_det) / (1.0 + m.log_det));
    }
  }
  if (exhausted) throw std::runtime_error("could not draw an admissible parameter point");
  return {samples, resampled, max_rel, max_minor, max_density};
}

}  // namespace amoeba
