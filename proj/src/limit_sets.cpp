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

#include "amoeba/limit_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "amoeba/parallel.hpp"
#include "amoeba/torus_maps.hpp"

namespace amoeba {

std::string Rationality::str() const {
  if (!rational) return "irrational";
  std::string s = "rational(";
  for (std::size_t i = 0; i < slope.size(); ++i) s += (i ? " " : "") + std::to_string(slope[i]);
  return s + ")";
}

double angle_between(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return std::numbers::pi;
  // atan2 of |a x b| and a.b keeps precision for tiny angles
  const double cross2 = std::max(0.0, na * nb - dot * dot);
  return std::atan2(std::sqrt(cross2), dot);
}

namespace {

// Best convergent p/q of x with q <= max_den.
std::pair<long, long> best_convergent(double x, int max_den) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return {static_cast<long>(std::lround(x)), 1};
  return {p1, q1};
}

}  // namespace

Rationality rational_slope(std::span<const double> direction, int max_denominator, double tolerance) {
  if (direction.empty()) throw std::invalid_argument("empty direction");
  if (max_denominator < 1) throw std::invalid_argument("max denominator must be positive");
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < direction.size(); ++i) {
    if (std::abs(direction[i]) > std::abs(direction[pivot])) pivot = i;
  }
  const double dp = direction[pivot];
  if (dp == 0.0) throw std::invalid_argument("zero direction");

  std::vector<std::pair<long, long>> fracs(direction.size(), {1, 1});
  long common = 1;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (i == pivot) continue;
    fracs[i] = best_convergent(direction[i] / dp, max_denominator);
    common = std::lcm(common, fracs[i].second);
  }
  Rationality out;
  std::vector<long> v(direction.size());
  long g = 0;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    v[i] = i == pivot ? common : fracs[i].first * (common / fracs[i].second);
    if (dp < 0) v[i] = -v[i];
    g = std::gcd(g, std::abs(v[i]));
  }
  if (g > 1) {
    for (long& c : v) c /= g;
  }
  std::vector<double> vd(v.begin(), v.end());
  out.angle = angle_between(direction, vd);
  out.rational = out.angle <= tolerance;
  if (out.rational) out.slope = std::move(v);
  return out;
}

namespace {

// Row-echelon basis of integer vectors; reports whether `v` was independent.
class IntegerBasis {
 public:
  explicit IntegerBasis(std::size_t n) : n_(n) {}

  bool add(std::vector<long> v) {
    for (const auto& [row, col] : rows_) {
      if (v[col] == 0) continue;
      const long a = row[col];
      const long b = v[col];
      long g = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        v[i] = v[i] * a - row[i] * b;
        g = std::gcd(g, std::abs(v[i]));
      }
      if (g > 1) {
        for (long& c : v) c /= g;
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i] != 0) {
        rows_.emplace_back(std::move(v), i);
        return true;
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::pair<std::vector<long>, std::size_t>> rows_;
};

}  // namespace

int integer_relation_rank(std::span<const double> u, int bound) {
  const std::size_t n = u.size();
  if (n == 0 || n > 4) throw std::invalid_argument("integer relation search supports 1 <= n <= 4");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::size_t pivot = 0;
  double unorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(u[i]) > std::abs(u[pivot])) pivot = i;
    unorm += u[i] * u[i];
  }
  unorm = std::sqrt(unorm);
  if (unorm == 0.0) throw std::invalid_argument("zero vector");

  IntegerBasis basis(n);
  std::vector<long> c(n, -bound);
  c[pivot] = 0;
  const std::size_t free_count = n - 1;
  const long span = 2L * bound + 1;
  long total = 1;
  for (std::size_t i = 0; i < free_count; ++i) total *= span;
  for (long code = 0; code < total; ++code) {
    long rest = code;
    double partial = 0.0;
    double cnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      c[i] = rest % span - bound;
      rest /= span;
      partial += static_cast<double>(c[i]) * u[i];
      cnorm += static_cast<double>(c[i] * c[i]);
    }
    const double cp = std::round(-partial / u[pivot]);
    if (std::abs(cp) > bound) continue;
    c[pivot] = static_cast<long>(cp);
    cnorm += cp * cp;
    if (cnorm == 0.0) continue;
    const double residual = std::abs(partial + cp * u[pivot]);
    if (residual <= 1e-9 * std::sqrt(cnorm) * unorm) {
      basis.add(c);
      if (basis.rank() + 1 == n) break;
    }
  }
  return static_cast<int>(basis.rank());
}

int torus_closure_dim(std::span<const double> u, int bound) {
  return static_cast<int>(u.size()) - integer_relation_rank(u, bound);
}

int LimitSetReport::arcs() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const auto& c) { return c.arc; }));
}

int LimitSetReport::points() const { return static_cast<int>(components.size()) - arcs(); }

namespace {

void validate(const VarietySpec& spec, const LimitSetOptions& options) {
  if (options.radii.size() < 2) throw std::invalid_argument("limit sets need at least 2 radii");
  for (std::size_t j = 1; j < options.radii.size(); ++j) {
    if (!(options.radii[j] > options.radii[j - 1])) throw std::invalid_argument("radii must be strictly increasing");
  }
  if (!(options.radii.front() > 0.0)) throw std::invalid_argument("radii must be positive");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("cluster tolerance must be positive");
  if (options.samples == 0) throw std::invalid_argument("sample count must be positive");
  if (spec.n < 2) throw std::invalid_argument("limit sets need n >= 2");
}

struct Draw {
  bool rejected = false;
  bool far = false;
  FarSample sample;
};

Draw draw_far(const VarietySpec& spec, const JetEvaluator& evaluator,
              const std::vector<std::vector<Complex>>& anchors, const LimitSetOptions& options,
              std::uint64_t index) {
  CounterRng rng(options.seed, index);
  const double outer = options.radii.back();
  ParamPoint t{};
  for (int j = 0; j < spec.k; ++j) {
    const auto& list = anchors[static_cast<std::size_t>(j)];
    const auto pick = static_cast<std::size_t>(rng.uniform() * static_cast<double>(list.size()));
    const Complex a = list[std::min(pick, list.size() - 1)];
    const double u = rng.uniform(-outer, outer);
    const double v = rng.uniform(-outer, outer);
    const std::uint64_t signs = rng.next_u64();
    const double re = (signs & 1U) ? std::exp(u) : -std::exp(u);
    const double im = (signs & 2U) ? std::exp(v) : -std::exp(v);
    t[static_cast<std::size_t>(j)] = a + Complex(re, im);
  }
  Draw d;
  const std::span<const Complex> params(t.data(), static_cast<std::size_t>(spec.k));
  if (!spec.admissible(params)) {
    d.rejected = true;
    return d;
  }
  LogJet jet;
  try {
    evaluator.log_jet(params, jet);
  } catch (const EvalError&) {
    d.rejected = true;
    return d;
  }
  double norm2 = 0.0;
  for (int i = 0; i < spec.n; ++i) norm2 += jet.log_modulus[static_cast<std::size_t>(i)] * jet.log_modulus[static_cast<std::size_t>(i)];
  const double norm = std::sqrt(norm2);
  if (!std::isfinite(norm) || norm < options.radii.front() || norm > outer) return d;
  d.far = true;
  d.sample.norm = norm;
  d.sample.direction.resize(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    d.sample.direction[static_cast<std::size_t>(i)] = jet.log_modulus[static_cast<std::size_t>(i)] / norm;
  }
  return d;
}

void append(FarSampleSet& set, Draw&& d) {
  ++set.drawn;
  if (d.rejected) ++set.rejected;
  if (d.far) set.samples.push_back(std::move(d.sample));
}

void normalize(std::vector<double>& v) {
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  if (n > 0.0) {
    for (double& x : v) x /= n;
  }
}

}  // namespace

FarSampleSet far_samples(const VarietySpec& spec, const LimitSetOptions& options) {
  validate(spec, options);
  const JetEvaluator evaluator = spec.evaluator();
  const auto anchors = sampling_anchors(spec);
  auto batches = run_batches(options.samples, [&](std::uint64_t begin, std::uint64_t end) {
    FarSampleSet part;
    for (std::uint64_t i = begin; i < end; ++i) append(part, draw_far(spec, evaluator, anchors, options, i));
    return part;
  });
  FarSampleSet set;
  for (FarSampleSet& part : batches) {
    set.drawn += part.drawn;
    set.rejected += part.rejected;
    set.samples.insert(set.samples.end(), std::make_move_iterator(part.samples.begin()),
                       std::make_move_iterator(part.samples.end()));
  }
  return set;
}

FarSampleSet far_samples_serial(const VarietySpec& spec, const LimitSetOptions& options) {
  validate(spec, options);
  const JetEvaluator evaluator = spec.evaluator();
  const auto anchors = sampling_anchors(spec);
  FarSampleSet set;
  for (std::uint64_t i = 0; i < options.samples; ++i) append(set, draw_far(spec, evaluator, anchors, options, i));
  return set;
}

LimitSetReport cluster_directions(const FarSampleSet& set, const LimitSetOptions& options) {
  LimitSetReport report;
  report.drawn = set.drawn;
  report.rejected = set.rejected;
  report.far_samples = set.samples.size();
  if (set.samples.empty()) throw std::runtime_error("no far samples reached; the domain is too small for the radius ladder");
  const std::size_t n = set.samples.front().direction.size();
  const double leader_radius = 0.5 * options.tolerance;
  const double outer_shell = options.radii[options.radii.size() - 2];

  // Leader clustering in sample order.
  std::vector<std::vector<double>> leaders;
  std::vector<int> member_of(set.samples.size());
  for (std::size_t s = 0; s < set.samples.size(); ++s) {
    const auto& d = set.samples[s].direction;
    int found = -1;
    for (std::size_t c = 0; c < leaders.size(); ++c) {
      if (angle_between(d, leaders[c]) <= leader_radius) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(leaders.size());
      leaders.push_back(d);
    }
    member_of[s] = found;
  }

  const std::size_t nc = leaders.size();
  std::vector<std::vector<double>> sum(nc, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> outer_sum(nc, std::vector<double>(n, 0.0));
  std::vector<std::uint64_t> outer_count(nc, 0);
  // Regression of each coordinate on x = 1/|Log|.
  struct Fit {
    double sx = 0, sxx = 0, cnt = 0;
    std::vector<double> sy, sxy;
  };
  std::vector<Fit> fits(nc);
  for (auto& f : fits) {
    f.sy.assign(n, 0.0);
    f.sxy.assign(n, 0.0);
  }
  report.clusters.resize(nc);
  for (std::size_t s = 0; s < set.samples.size(); ++s) {
    const auto c = static_cast<std::size_t>(member_of[s]);
    const FarSample& fs = set.samples[s];
    ++report.clusters[c].weight;
    const double x = 1.0 / fs.norm;
    fits[c].sx += x;
    fits[c].sxx += x * x;
    fits[c].cnt += 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum[c][i] += fs.direction[i];
      fits[c].sy[i] += fs.direction[i];
      fits[c].sxy[i] += x * fs.direction[i];
    }
    if (fs.norm >= outer_shell) {
      ++outer_count[c];
      for (std::size_t i = 0; i < n; ++i) outer_sum[c][i] += fs.direction[i];
    }
  }
  for (std::size_t c = 0; c < nc; ++c) {
    report.clusters[c].direction = sum[c];
    normalize(report.clusters[c].direction);
    normalize(outer_sum[c]);
  }
  for (std::size_t s = 0; s < set.samples.size(); ++s) {
    auto& cl = report.clusters[static_cast<std::size_t>(member_of[s])];
    cl.spread = std::max(cl.spread, angle_between(set.samples[s].direction, cl.direction));
  }
  for (auto& cl : report.clusters) {
    cl.rationality = rational_slope(cl.direction, options.max_denominator, options.rational_tolerance);
  }

  // Chain connectivity between clusters.
  std::vector<std::size_t> parent(nc);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const double link = 2.0 * options.tolerance;
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = a + 1; b < nc; ++b) {
      if (angle_between(report.clusters[a].direction, report.clusters[b].direction) <= link) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }

  std::vector<int> component_of(nc, -1);
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t root = find(c);
    if (component_of[root] < 0) {
      component_of[root] = static_cast<int>(report.components.size());
      report.components.emplace_back();
    }
    component_of[c] = component_of[root];
    report.components[static_cast<std::size_t>(component_of[c])].clusters.push_back(static_cast<int>(c));
  }

  for (std::size_t id = 0; id < report.components.size(); ++id) {
    LimitComponent& comp = report.components[id];
    Fit total;
    total.sy.assign(n, 0.0);
    total.sxy.assign(n, 0.0);
    std::vector<double> mean(n, 0.0);
    for (int ci : comp.clusters) {
      const auto c = static_cast<std::size_t>(ci);
      comp.weight += report.clusters[c].weight;
      total.sx += fits[c].sx;
      total.sxx += fits[c].sxx;
      total.cnt += fits[c].cnt;
      for (std::size_t i = 0; i < n; ++i) {
        total.sy[i] += fits[c].sy[i];
        total.sxy[i] += fits[c].sxy[i];
        mean[i] += sum[c][i];
      }
      for (int cj : comp.clusters) {
        const auto d = static_cast<std::size_t>(cj);
        comp.extent = std::max(comp.extent, angle_between(report.clusters[c].direction, report.clusters[d].direction));
        if (outer_count[c] > 0 && outer_count[d] > 0) {
          comp.outer_extent = std::max(comp.outer_extent, angle_between(outer_sum[c], outer_sum[d]));
        }
      }
    }
    comp.arc = comp.outer_extent > 3.0 * options.tolerance;
    normalize(mean);
    comp.direction = mean;
    const double denom = total.cnt * total.sxx - total.sx * total.sx;
    if (!comp.arc && denom > 1e-12 * total.cnt * total.sxx) {
      // intercept at 1/|Log| = 0
      std::vector<double> limit(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double slope = (total.cnt * total.sxy[i] - total.sx * total.sy[i]) / denom;
        limit[i] = (total.sy[i] - slope * total.sx) / total.cnt;
      }
      normalize(limit);
      if (angle_between(limit, mean) <= comp.extent + 3.0 * options.tolerance) comp.direction = limit;
    }
    comp.rationality = rational_slope(comp.direction, options.max_denominator, options.rational_tolerance);
    for (int ci : comp.clusters) {
      report.clusters[static_cast<std::size_t>(ci)].component = static_cast<int>(id);
    }
  }
  return report;
}

LimitSetReport log_limit_set(const VarietySpec& spec, const LimitSetOptions& options) {
  return cluster_directions(far_samples(spec, options), options);
}

void write_limit_set_csv(const LimitSetReport& report, std::ostream& out) {
  const std::size_t n = report.clusters.empty() ? 0 : report.clusters.front().direction.size();
  for (std::size_t i = 0; i < n; ++i) out << 'd' << (i + 1) << ',';
  out << "weight,spread,rationality,arc_id\n";
  // arc ids count arcs only, in component order
  std::vector<int> arc_id(report.components.size(), -1);
  int next = 0;
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    if (report.components[c].arc) arc_id[c] = next++;
  }
  char buf[64];
  for (const DirectionCluster& cl : report.clusters) {
    for (double d : cl.direction) {
      std::snprintf(buf, sizeof buf, "%.9f,", std::abs(d) < 5e-10 ? 0.0 : d);
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "%.9f", cl.spread);
    out << cl.weight << ',' << buf << ',' << cl.rationality.str() << ','
        << (cl.component >= 0 ? arc_id[static_cast<std::size_t>(cl.component)] : -1) << '\n';
  }
}

}  // namespace amoeba
