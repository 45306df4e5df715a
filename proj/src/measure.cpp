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

#include "amoeba/measure.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amoeba/parallel.hpp"

namespace amoeba {

void set_worker_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int worker_threads() { return omp_get_max_threads(); }

std::string to_string(Target target) { return target == Target::kAmoeba ? "amoeba" : "coamoeba"; }

Target parse_target(std::string_view name) {
  if (name == "amoeba") return Target::kAmoeba;
  if (name == "coamoeba") return Target::kCoamoeba;
  throw ConfigError("unknown target '" + std::string(name) + "' (expected amoeba or coamoeba)");
}

std::string to_string(FinitenessVerdict::Kind kind) {
  switch (kind) {
    case FinitenessVerdict::Kind::kConvergent:
      return "convergent";
    case FinitenessVerdict::Kind::kDivergent:
      return "divergent";
    case FinitenessVerdict::Kind::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

double Accumulator::standard_error() const {
  if (count < 2) return 0.0;
  const double n = static_cast<double>(count);
  const double m = sum / n;
  const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1.0));
  return std::sqrt(var / n);
}

double pullback_integrand(const VarietySpec& spec, const JetEvaluator& evaluator,
                          const std::vector<VariableDomain>& region, MapKind map, std::uint64_t seed,
                          std::uint64_t index, SampleTally& tally) {
  CounterRng rng(seed, index);
  ParamPoint t{};
  const double weight = draw_parameter(region, rng, t);
  const std::span<const Complex> params(t.data(), static_cast<std::size_t>(spec.k));
  if (spec.excluded(params)) {
    ++tally.excluded;
    return 0.0;
  }
  LogJet jet;
  try {
    evaluator.log_jet(params, jet);
  } catch (const EvalError&) {
    ++tally.dropped;
    return 0.0;
  }
  const double value = weight * generalized_jacobian(jet, map);
  if (!std::isfinite(value)) {
    ++tally.dropped;
    return 0.0;
  }
  return value;
}

namespace {

struct Prepared {
  std::vector<VariableDomain> region;
  int multiplicity = 1;
  MapKind map = MapKind::kLog;
};

Prepared prepare(const VarietySpec& spec, const VolumeOptions& options) {
  if (2 * spec.k > spec.n) throw std::invalid_argument("volume requires 2k <= n");
  if (options.samples == 0) throw std::invalid_argument("sample count must be positive");
  Prepared p;
  p.region = options.truncation.value_or(spec.domain);
  if (static_cast<int>(p.region.size()) != spec.k) {
    throw std::invalid_argument("truncation box must list one region per parameter");
  }
  for (const auto& d : p.region) {
    if (d.empty()) throw std::invalid_argument("truncation box is empty");
  }
  p.map = options.target == Target::kAmoeba ? MapKind::kLog : MapKind::kArg;
  std::optional<int> m = options.multiplicity;
  if (!m) m = options.target == Target::kAmoeba ? spec.multiplicity_log : spec.multiplicity_arg;
  if (!m) {
    throw std::invalid_argument("no covering multiplicity for " + to_string(options.target) +
                                " (declare it or measure it with the fibers module)");
  }
  if (*m <= 0) throw std::invalid_argument("multiplicity must be positive");
  p.multiplicity = *m;
  return p;
}

VolumeEstimate finish(const Accumulator& acc, const SampleTally& tally, const Prepared& p,
                      const VolumeOptions& options) {
  VolumeEstimate est;
  est.value = acc.mean() / p.multiplicity;
  est.std_error = acc.standard_error() / p.multiplicity;
  est.samples = acc.count;
  est.multiplicity = p.multiplicity;
  est.target = options.target;
  est.excluded = tally.excluded;
  est.dropped = tally.dropped;
  est.box = p.region;
  est.seed = options.seed;
  return est;
}

}  // namespace

VolumeEstimate integrate_pullback(const VarietySpec& spec, const VolumeOptions& options) {
  const Prepared p = prepare(spec, options);
  const JetEvaluator evaluator = spec.evaluator();
  struct Partial {
    Accumulator acc;
    SampleTally tally;
  };
  const auto partials = run_batches(options.samples, [&](std::uint64_t begin, std::uint64_t end) {
    Partial part;
    for (std::uint64_t i = begin; i < end; ++i) {
      part.acc.add(pullback_integrand(spec, evaluator, p.region, p.map, options.seed, i, part.tally));
    }
    return part;
  });
  Accumulator acc;
  SampleTally tally;
  for (const Partial& part : partials) {
    acc.merge(part.acc);
    tally.excluded += part.tally.excluded;
    tally.dropped += part.tally.dropped;
  }
  return finish(acc, tally, p, options);
}

VolumeEstimate integrate_pullback_serial(const VarietySpec& spec, const VolumeOptions& options) {
  const Prepared p = prepare(spec, options);
  const JetEvaluator evaluator = spec.evaluator();
  Accumulator acc;
  SampleTally tally;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    acc.add(pullback_integrand(spec, evaluator, p.region, p.map, options.seed, i, tally));
  }
  return finish(acc, tally, p, options);
}

FinitenessVerdict classify_finiteness(const VarietySpec& spec, const FinitenessOptions& options) {
  const auto& radii = options.radii;
  if (radii.size() < 4) throw std::invalid_argument("finiteness classification needs at least 4 radii");
  for (std::size_t j = 1; j < radii.size(); ++j) {
    if (!(radii[j] > radii[j - 1])) throw std::invalid_argument("radii must be strictly increasing");
  }
  if (2 * spec.k > spec.n) throw std::invalid_argument("finiteness classification requires 2k <= n");
  const double outer = radii.back();
  for (const auto& d : spec.domain) {
    if (d.max_extent() < outer) {
      throw std::invalid_argument("radius ladder exceeds the parameter domain of '" + spec.name + "'");
    }
  }
  const std::vector<VariableDomain> region = clip_region(spec.domain, outer);
  const JetEvaluator evaluator = spec.evaluator();
  const std::size_t m = radii.size();

  struct Partial {
    std::vector<Accumulator> cumulative;
    std::vector<Accumulator> shell;
  };
  const auto partials = run_batches(options.samples, [&](std::uint64_t begin, std::uint64_t end) {
    Partial part{std::vector<Accumulator>(m), std::vector<Accumulator>(m)};
    SampleTally tally;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double v = pullback_integrand(spec, evaluator, region, MapKind::kLog, options.seed, i, tally);
      // Re-derive the point to find its stage; same counter stream.
      CounterRng rng(options.seed, i);
      ParamPoint t{};
      draw_parameter(region, rng, t);
      const double extent = stage_extent(spec.domain, std::span<const Complex>(t.data(), static_cast<std::size_t>(spec.k)));
      std::size_t stage = m - 1;
      for (std::size_t j = 0; j < m; ++j) {
        if (extent <= radii[j]) {
          stage = j;
          break;
        }
      }
      for (std::size_t j = 0; j < m; ++j) {
        part.cumulative[j].add(j >= stage ? v : 0.0);
        part.shell[j].add(j == stage ? v : 0.0);
      }
    }
    return part;
  });

  std::vector<Accumulator> cumulative(m), shell(m);
  for (const Partial& part : partials) {
    for (std::size_t j = 0; j < m; ++j) {
      cumulative[j].merge(part.cumulative[j]);
      shell[j].merge(part.shell[j]);
    }
  }

  FinitenessVerdict verdict;
  verdict.radii = radii;
  for (std::size_t j = 0; j < m; ++j) {
    verdict.stage_value.push_back(cumulative[j].mean());
    verdict.stage_stderr.push_back(cumulative[j].standard_error());
    verdict.increment.push_back(shell[j].mean());
    verdict.increment_stderr.push_back(shell[j].standard_error());
  }
  verdict.estimate = verdict.stage_value.back();

  // ln I(R) against R
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int pts = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (verdict.stage_value[j] <= 0.0) continue;
    const double x = radii[j];
    const double y = std::log(verdict.stage_value[j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++pts;
  }
  if (pts >= 2) {
    const double denom = pts * sxx - sx * sx;
    if (denom != 0.0) verdict.growth_exponent = (pts * sxy - sx * sy) / denom;
  }

  const double delta = verdict.increment.back();
  const double se = verdict.increment_stderr.back();
  const double floor = std::min(options.eps_abs, options.eps_rel * std::abs(verdict.estimate));
  if (delta + 3.0 * se <= floor) {
    verdict.kind = FinitenessVerdict::Kind::kConvergent;
    verdict.reason = "last increment below both floors";
  } else if (delta - 3.0 * se > floor) {
    verdict.kind = FinitenessVerdict::Kind::kDivergent;
    verdict.reason = "last increment exceeds the floors by more than 3 standard errors";
  } else {
    verdict.kind = FinitenessVerdict::Kind::kInconclusive;
    verdict.reason = "last increment within 3 standard errors of the floor";
  }
  return verdict;
}

ComparisonReport comparison_certificate(Rational p, Rational P, const VolumeEstimate& amoeba,
                                        const VolumeEstimate& coamoeba) {
  ComparisonReport r;
  r.p = p;
  r.P = P;
  r.amoeba = amoeba.value;
  r.coamoeba = coamoeba.value;
  const double pl = p.value();
  const double pu = P.value();
  r.lower_margin = amoeba.value - pl * coamoeba.value;
  r.upper_margin = pu * coamoeba.value - amoeba.value;
  r.lower_slack = 3.0 * std::hypot(amoeba.std_error, pl * coamoeba.std_error);
  r.upper_slack = 3.0 * std::hypot(amoeba.std_error, pu * coamoeba.std_error);
  r.lower_ok = r.lower_margin >= -r.lower_slack;
  r.upper_ok = r.upper_margin >= -r.upper_slack;
  return r;
}

}  // namespace amoeba
