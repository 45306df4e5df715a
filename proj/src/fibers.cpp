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

#include "amoeba/fibers.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace amoeba {

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::kRegular:
      return "regular";
    case Regularity::kCritical:
      return "critical";
    case Regularity::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

std::string to_string(MapKind map) { return map == MapKind::kLog ? "log" : "arg"; }

MapKind parse_map(std::string_view name) {
  if (name == "log") return MapKind::kLog;
  if (name == "arg") return MapKind::kArg;
  throw ConfigError("unknown map '" + std::string(name) + "' (expected log or arg)");
}

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

constexpr double kPathFractions[] = {0.5, 0.3819660112501051, 0.6180339887498949};

class System {
 public:
  System(const VarietySpec& spec, MapKind map, const std::vector<double>& target)
      : spec_(spec), evaluator_(spec.evaluator()), map_(map), target_(target) {}

  int unknowns() const { return 2 * spec_.k; }
  int equations() const { return spec_.n; }

  void to_params(const Vec& x, ParamPoint& t) const {
    for (int j = 0; j < spec_.k; ++j) t[static_cast<std::size_t>(j)] = {x[j], x[spec_.k + j]};
  }

  // Residual and optionally the real Jacobian; false if the point cannot be
  // evaluated (zero coordinate, overflow).
  bool eval(const Vec& x, Vec& r, Mat* jac, LogJet* jet_out = nullptr) const {
    ParamPoint t{};
    to_params(x, t);
    LogJet jet;
    try {
      evaluator_.log_jet(std::span<const Complex>(t.data(), static_cast<std::size_t>(spec_.k)), jet);
    } catch (const EvalError&) {
      return false;
    }
    r.resize(spec_.n);
    for (int i = 0; i < spec_.n; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      r[i] = map_ == MapKind::kLog ? jet.log_modulus[ii] - target_[ii]
                                   : wrap_difference(jet.angle[ii] - target_[ii]);
    }
    if (!r.allFinite()) return false;
    if (jac) {
      const RealJacobian rj = real_jacobian(jet, map_);
      jac->resize(spec_.n, 2 * spec_.k);
      for (int i = 0; i < spec_.n; ++i) {
        for (int c = 0; c < 2 * spec_.k; ++c) (*jac)(i, c) = rj(i, c);
      }
    }
    if (jet_out) *jet_out = jet;
    return true;
  }

  double residual_norm(const Vec& x) const {
    Vec r;
    if (!eval(x, r, nullptr)) return INFINITY;
    return r.lpNorm<Eigen::Infinity>();
  }

 private:
  const VarietySpec& spec_;
  JetEvaluator evaluator_;
  MapKind map_;
  const std::vector<double>& target_;
};

std::optional<Vec> levenberg_marquardt(const System& sys, Vec x, const FiberOptions& options) {
  Vec r;
  Mat jac;
  if (!sys.eval(x, r, &jac)) return std::nullopt;
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (r.lpNorm<Eigen::Infinity>() <= options.tolerance) return x;
    const Mat a = jac.transpose() * jac;
    const Vec g = jac.transpose() * r;
    bool accepted = false;
    for (int tries = 0; tries < 12 && !accepted; ++tries) {
      Mat damped = a;
      for (int c = 0; c < a.rows(); ++c) damped(c, c) += lambda * std::max(a(c, c), 1e-12);
      const Vec step = damped.ldlt().solve(-g);
      if (!step.allFinite()) {
        lambda *= 4.0;
        continue;
      }
      const Vec trial = x + step;
      Vec r_trial;
      Mat jac_trial;
      if (sys.eval(trial, r_trial, &jac_trial) && r_trial.squaredNorm() < cost) {
        x = trial;
        r = r_trial;
        jac = jac_trial;
        cost = r.squaredNorm();
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!accepted) break;
  }
  if (r.lpNorm<Eigen::Infinity>() <= options.tolerance) return x;
  return std::nullopt;
}

Vec start_point(const VarietySpec& spec, const FiberOptions& options, std::uint64_t index) {
  CounterRng rng(options.seed, index);
  Vec x(2 * spec.k);
  for (int j = 0; j < spec.k; ++j) {
    const VariableDomain d = spec.domain[static_cast<std::size_t>(j)].clipped(options.search_radius);
    double weight = 0.0;
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const Complex t = d.sample(u1, u2, weight);
    x[j] = t.real();
    x[spec.k + j] = t.imag();
  }
  return x;
}

double param_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

Vec to_vec(const std::vector<Complex>& t) {
  const auto k = static_cast<int>(t.size());
  Vec x(2 * k);
  for (int j = 0; j < k; ++j) {
    x[j] = t[static_cast<std::size_t>(j)].real();
    x[k + j] = t[static_cast<std::size_t>(j)].imag();
  }
  return x;
}

}  // namespace

std::vector<double> push_forward(const VarietySpec& spec, MapKind map, std::span<const Complex> t) {
  LogJet jet;
  spec.evaluator().log_jet(t, jet);
  return map == MapKind::kLog ? log_map(jet).coords : arg_map(jet).angles;
}

FiberReport fiber_count(const VarietySpec& spec, MapKind map, const std::vector<double>& target,
                        const FiberOptions& options) {
  if (static_cast<int>(target.size()) != spec.n) {
    throw std::invalid_argument("target has " + std::to_string(target.size()) + " coordinates, expected " +
                                std::to_string(spec.n));
  }
  if (2 * spec.k > spec.n) throw std::invalid_argument("fiber counting requires 2k <= n");
  const System sys(spec, map, target);
  const int starts = options.starts > 0 ? options.starts : 64 << spec.k;

  std::vector<std::optional<Vec>> found(static_cast<std::size_t>(starts));
#pragma omp parallel for schedule(dynamic, 4)
  for (int s = 0; s < starts; ++s) {
    const Vec x0 = start_point(spec, options, static_cast<std::uint64_t>(s));
    found[static_cast<std::size_t>(s)] = levenberg_marquardt(sys, x0, options);
  }

  FiberReport report;
  report.map = map;
  report.target = target;
  report.starts = starts;

  // Dedup in start order so the result does not depend on the schedule.
  std::vector<FiberSolution> unique;
  for (const auto& x : found) {
    if (!x) continue;
    ParamPoint t{};
    sys.to_params(*x, t);
    std::vector<Complex> tv(t.begin(), t.begin() + spec.k);
    if (!spec.admissible(tv)) continue;
    ++report.converged;
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const FiberSolution& s) {
      return param_distance(s.t, tv) <= options.dedup_radius;
    });
    if (seen) continue;
    FiberSolution sol;
    sol.t = std::move(tv);
    sol.residual = sys.residual_norm(*x);
    unique.push_back(std::move(sol));
  }

  // Join solutions connected through near-zero residual interior points: a
  // tangency or a positive-dimensional piece of the fiber. The fractions are
  // irrational so that periodic fibers (Arg of exp) do not alias.
  const std::size_t m = unique.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec xa = to_vec(unique[a].t);
      const Vec xb = to_vec(unique[b].t);
      const bool joined = std::all_of(std::begin(kPathFractions), std::end(kPathFractions), [&](double f) {
        return sys.residual_norm(xa + f * (xb - xa)) <= 10.0 * options.tolerance;
      });
      if (joined) {
        parent[find(b)] = find(a);
        report.merged = true;
      }
    }
  }
  std::vector<std::size_t> best(m);
  std::iota(best.begin(), best.end(), std::size_t{0});
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t root = find(a);
    if (unique[a].residual < unique[best[root]].residual) best[root] = a;
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (find(a) == a) report.solutions.push_back(unique[best[a]]);
  }

  bool degenerate = false;
  for (FiberSolution& sol : report.solutions) {
    Vec r;
    Mat jac;
    LogJet jet;
    sys.eval(to_vec(sol.t), r, &jac, &jet);
    sol.density = generalized_jacobian(jet, map);
    const Eigen::JacobiSVD<Mat> svd(jac);
    const Vec sv = svd.singularValues();
    sol.conditioning = sv[0] > 0.0 ? sv[sv.size() - 1] / sv[0] : 0.0;
    if (sol.density < options.density_floor || sol.conditioning < options.condition_floor) degenerate = true;
  }
  report.count = static_cast<int>(report.solutions.size());
  if (report.count == 0) {
    report.regularity = Regularity::kUndetermined;
    report.note = "no start converged inside the domain";
  } else if (degenerate || report.merged) {
    report.regularity = Regularity::kCritical;
    report.note = report.merged ? "solutions joined by a near-zero path" : "rank-deficient Jacobian at a solution";
  } else {
    report.regularity = Regularity::kRegular;
  }
  return report;
}

PPEstimate estimate_p_P(const VarietySpec& spec, const PPOptions& options) {
  if (2 * spec.k > spec.n) throw std::invalid_argument("p/P estimation requires 2k <= n");
  if (options.probes <= 0) throw std::invalid_argument("probe count must be positive");
  const JetEvaluator evaluator = spec.evaluator();
  const std::vector<VariableDomain> probe_region = clip_region(spec.domain, options.probe_radius);
  // Probe points use their own counter stream, apart from the solver starts.
  const std::uint64_t probe_seed = mix64(options.fiber.seed ^ 0x70726f6265ULL);

  PPEstimate est;
  int used = 0;
  int growth_left = options.growth_checks;
  for (std::uint64_t index = 0; used < options.probes; ++index) {
    if (index > static_cast<std::uint64_t>(options.probes) * 50) break;
    CounterRng rng(probe_seed, index);
    ParamPoint t{};
    draw_parameter(probe_region, rng, t);
    const std::span<const Complex> params(t.data(), static_cast<std::size_t>(spec.k));
    if (!spec.admissible(params)) continue;
    LogJet jet;
    try {
      evaluator.log_jet(params, jet);
    } catch (const EvalError&) {
      continue;
    }
    if (generalized_jacobian(jet, MapKind::kLog) < options.fiber.density_floor) {
      ++est.probes_skipped;
      continue;
    }
    ProbeRecord rec;
    rec.t.assign(params.begin(), params.end());
    FiberOptions fo = options.fiber;
    fo.seed = mix64(options.fiber.seed + index);
    const FiberReport log_fiber = fiber_count(spec, MapKind::kLog, log_map(jet).coords, fo);
    const FiberReport arg_fiber = fiber_count(spec, MapKind::kArg, arg_map(jet).angles, fo);
    rec.log_count = log_fiber.count;
    rec.arg_count = arg_fiber.count;
    rec.log_regularity = log_fiber.regularity;
    rec.arg_regularity = arg_fiber.regularity;
    if (log_fiber.regularity != Regularity::kRegular || arg_fiber.regularity != Regularity::kRegular) {
      ++est.probes_skipped;
      est.evidence.push_back(rec);
      continue;
    }
    if (growth_left > 0) {
      --growth_left;
      FiberOptions wide = fo;
      wide.starts = 2 * arg_fiber.starts;
      wide.search_radius = 2.0 * fo.search_radius;
      const FiberReport again = fiber_count(spec, MapKind::kArg, arg_fiber.target, wide);
      if (again.count > arg_fiber.count) {
        rec.arg_growth = true;
        est.arg_unbounded_suspected = true;
      }
    }
    if (used == 0) {
      est.min_log = est.max_log = rec.log_count;
      est.min_arg = est.max_arg = rec.arg_count;
    } else {
      est.min_log = std::min(est.min_log, rec.log_count);
      est.max_log = std::max(est.max_log, rec.log_count);
      est.min_arg = std::min(est.min_arg, rec.arg_count);
      est.max_arg = std::max(est.max_arg, rec.arg_count);
    }
    ++used;
    est.evidence.push_back(rec);
  }
  est.probes_used = used;
  if (used == 0) throw std::runtime_error("every probe was critical or unsolved");
  est.p = Rational(est.min_arg, est.max_log);
  est.P = Rational(est.max_arg, est.min_log);
  return est;
}

}  // namespace amoeba
