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

#include "amoeba/gallery.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <numbers>
#include <sstream>

#include "amoeba/fibers.hpp"
#include "amoeba/identity_check.hpp"
#include "amoeba/limit_sets.hpp"
#include "amoeba/measure.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/raster.hpp"
#include "amoeba/torus_maps.hpp"

namespace amoeba {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

VarietySpec exp_curve(double log_radius) {
  return make_variety("exp-curve", 1, {"t1", "exp(t1)"}, {VariableDomain::annulus({0.0, 0.0}, -log_radius, log_radius)},
                      {}, {"holomorphic"});
}

VarietySpec circle_curve(double im_half_width) {
  std::vector<Exclusion> holes;
  for (double re : {0.0, kPi / 2, kPi, 3 * kPi / 2, 2 * kPi}) holes.push_back({0, {re, 0.0}, 1e-9});
  return make_variety("circle-curve", 1, {"cos(t1)", "sin(t1)"},
                      {VariableDomain::box(0.0, 2 * kPi, -im_half_width, im_half_width)}, holes,
                      {"algebraic", "real"});
}

VarietySpec spatial_curve(double log_radius) {
  return make_variety("spatial-curve", 1, {"t1", "exp(t1)", "t1+1"},
                      {VariableDomain::annulus({0.0, 0.0}, -log_radius, log_radius)}, {{0, {-1.0, 0.0}, 1e-9}},
                      {"holomorphic"});
}

AffinePlaneSpec real_line() {
  AffinePlaneSpec p;
  p.name = "real-line";
  p.b = {1.0};
  p.a = {{1.0}};
  return p;
}

AffinePlaneSpec nonreal_line() {
  AffinePlaneSpec p;
  p.name = "non-real-line";
  p.s = 2;
  p.b = {1.0, {0.0, 1.0}};
  p.a = {{1.0}, {2.0}};
  return p;
}

AffinePlaneSpec real_2plane() {
  AffinePlaneSpec p;
  p.name = "real-plane";
  p.k = 2;
  p.s = 2;
  p.b = {1.0, 2.0};
  p.a = {{1.0, 1.0}, {3.0, -1.0}};
  return p;
}

std::vector<VarietySpec> gallery_varieties() {
  return {to_variety(real_line(), 10.0), to_variety(nonreal_line(), 10.0), to_variety(real_2plane(), 10.0),
          exp_curve(10.0),               circle_curve(10.0),                   spatial_curve(10.0)};
}

std::string to_string(Profile p) { return p == Profile::kQuick ? "quick" : "full"; }

Profile parse_profile(std::string_view name) {
  if (name == "quick") return Profile::kQuick;
  if (name == "full") return Profile::kFull;
  throw ConfigError("unknown profile '" + std::string(name) + "' (expected quick or full)");
}

namespace {

struct Budget {
  std::uint64_t volume_samples;
  std::uint64_t plane_volume_samples;
  int raster_res;
  std::uint64_t raster_samples;
  std::uint64_t figure_samples;
};

Budget budget_for(Profile p) {
  if (p == Profile::kFull) return {1'000'000, 2'000'000, 1024, 10'000'000, 4'000'000};
  return {200'000, 200'000, 1024, 4'000'000, 1'000'000};
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_vec(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + ")";
}

class CaseRunner {
 public:
  CaseRunner(GalleryCaseResult& out, const std::string& dir, const Budget& budget, Profile profile,
             std::uint64_t seed)
      : out_(out), dir_(dir), budget_(budget), profile_(profile), seed_(seed) {}

  void expect(std::string check, std::string basis, std::string expected, std::string observed, bool passed,
              bool required = true) {
    out_.expectations.push_back({std::move(check), std::move(basis), required, std::move(expected),
                                 std::move(observed), passed});
  }

  void jacobian(const VarietySpec& spec) {
    const JacobianCheckReport r = check_jacobian_identity(spec, 10'000, seed_);
    out_.report["jacobian"] = to_json(r);
    expect("jacobian identity, max relative deviation", "literature", "<= 1e-8",
           fmt(r.max_relative_deviation), r.max_relative_deviation <= 1e-8);
    expect("jacobian identity, max minor deviation", "literature", "<= 1e-8", fmt(r.max_minor_deviation),
           r.max_minor_deviation <= 1e-8);
  }

  FinitenessVerdict finiteness(const VarietySpec& spec, FinitenessVerdict::Kind want) {
    FinitenessOptions o;
    o.seed = seed_;
    const FinitenessVerdict v = classify_finiteness(spec, o);
    out_.report["finiteness"] = to_json(v);
    expect("amoeba area finiteness", "literature", to_string(want), to_string(v.kind), v.kind == want);
    return v;
  }

  LimitSetReport limit_set(const VarietySpec& spec) {
    LimitSetOptions o;
    o.seed = seed_;
    const LimitSetReport r = log_limit_set(spec, o);
    out_.report["limit_set"] = to_json(r);
    std::ofstream csv(dir_ + "/" + out_.name + "-limitset.csv");
    write_limit_set_csv(r, csv);
    out_.figures.push_back(out_.name + "-limitset.csv");
    return r;
  }

  void limit_shape(const LimitSetReport& r, int points, int arcs, const std::string& basis) {
    expect("limit set shape", basis, std::to_string(points) + " points, " + std::to_string(arcs) + " arcs",
           std::to_string(r.points()) + " points, " + std::to_string(r.arcs()) + " arcs",
           r.points() == points && r.arcs() == arcs);
  }

  void all_rational(const LimitSetReport& r, const std::string& basis) {
    int rational = 0;
    for (const auto& c : r.components) rational += c.rationality.rational;
    expect("limit directions rational", basis, std::to_string(r.components.size()) + " rational",
           std::to_string(rational) + " rational", rational == static_cast<int>(r.components.size()));
  }

  // Each listed direction must be matched by a distinct point component.
  void limit_points(const LimitSetReport& r, const std::vector<std::vector<double>>& want, double tol_deg,
                    const std::string& basis) {
    std::vector<bool> used(r.components.size(), false);
    std::string observed;
    bool ok = true;
    for (const auto& w : want) {
      double best = INFINITY;
      std::size_t pick = 0;
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (used[i] || r.components[i].arc) continue;
        const double a = angle_between(w, r.components[i].direction);
        if (a < best) {
          best = a;
          pick = i;
        }
      }
      if (std::isfinite(best)) used[pick] = true;
      observed += (observed.empty() ? "" : ", ") + fmt(best / kDegree) + " deg";
      ok = ok && best <= tol_deg * kDegree;
    }
    std::string expected;
    for (const auto& w : want) expected += (expected.empty() ? "" : ", ") + fmt_vec(w);
    expect("limit points " + expected, basis, "each within " + fmt(tol_deg) + " deg", observed, ok);
  }

  void critical_real(const VarietySpec& spec, const std::vector<double>& real_t, Complex regular) {
    const JetEvaluator ev = spec.evaluator();
    LogJet jet;
    double worst = 0.0;
    for (double x : real_t) {
      const Complex t[1] = {{x, 0.0}};
      ev.log_jet(t, jet);
      worst = std::max(worst, generalized_jacobian(jet, MapKind::kLog));
    }
    expect("density on real parameters (critical locus)", "literature", "<= 1e-12", fmt(worst), worst <= 1e-12);
    const Complex t[1] = {regular};
    ev.log_jet(t, jet);
    const double d = generalized_jacobian(jet, MapKind::kLog);
    expect("density off the real axis at " + fmt(regular.real()) + "+" + fmt(regular.imag()) + "i", "derived",
           "> 1e-3", fmt(d), d > 1e-3);
  }

  RasterGrid raster(const VarietySpec& spec, Target mode, RasterBounds bounds, int res, std::uint64_t samples,
                    int cx, int cy, const std::string& file) {
    RasterConfig c;
    c.mode = mode;
    c.bounds = bounds;
    c.width = c.height = res;
    c.samples = samples;
    c.seed = seed_;
    c.coord_x = cx;
    c.coord_y = cy;
    RasterGrid g = raster_pushforward(spec, c);
    write_image(g, dir_ + "/" + file);
    out_.figures.push_back(file);
    out_.report["raster"][file] = to_json(g);
    return g;
  }

  PPEstimate fibers(const VarietySpec& spec) {
    PPOptions o;
    o.fiber.seed = seed_;
    const PPEstimate e = estimate_p_P(spec, o);
    out_.report["fibers"] = to_json(e);
    return e;
  }

  GalleryCaseResult& out_;
  std::string dir_;
  Budget budget_;
  Profile profile_;
  std::uint64_t seed_;
};

std::string range(int lo, int hi) { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); }

void plane_case(CaseRunner& run, const AffinePlaneSpec& plane, const std::vector<std::vector<double>>& limits) {
  const bool full = run.profile_ == Profile::kFull;
  const VarietySpec near = to_variety(plane, 10.0);
  const VarietySpec wide = to_variety(plane, 40.0);
  run.out_.report["spec"] = to_json(plane);
  run.jacobian(near);

  const RealityWitness real = is_real(plane);
  const ExpectedCounts counts = expected_counts(plane);
  run.out_.report["reality"] = to_json(real);
  run.out_.report["expected_counts"] = to_json(counts);

  const PPEstimate pp = run.fibers(near);
  const int want_log = counts.log.value_or(-1);
  run.expect("Log fiber count over " + std::to_string(pp.probes_used) + " regular probes", "literature",
             std::to_string(want_log), range(pp.min_log, pp.max_log), pp.min_log == want_log && pp.max_log == want_log);
  run.expect("Arg fiber count over " + std::to_string(pp.probes_used) + " regular probes", "literature", "1",
             range(pp.min_arg, pp.max_arg), pp.min_arg == 1 && pp.max_arg == 1);
  run.expect("regular probes", "derived", ">= 20", std::to_string(pp.probes_used), pp.probes_used >= 20);
  const Rational want_p(1, want_log > 0 ? want_log : 1);
  run.expect("p and P", "literature", want_p.str() + ", " + want_p.str(), pp.p.str() + ", " + pp.P.str(),
             pp.p == want_p && pp.P == want_p);

  VolumeOptions vo;
  vo.seed = run.seed_;
  vo.samples = plane.k == 1 ? run.budget_.volume_samples : run.budget_.plane_volume_samples;
  vo.target = Target::kAmoeba;
  const VolumeEstimate amoeba = integrate_pullback(near, vo);
  vo.target = Target::kCoamoeba;
  const VolumeEstimate coamoeba = integrate_pullback(near, vo);
  run.out_.report["volume"] = {{"amoeba", to_json(amoeba)}, {"coamoeba", to_json(coamoeba)}};

  if (real.real && plane.s == plane.k) {
    const double co = std::pow(kPi, 2 * plane.k);
    const double am = co / (1 << plane.k);
    auto check = [&](const char* what, const VolumeEstimate& v, double target) {
      const double z = (v.value - target) / v.std_error;
      run.expect(std::string(what) + " volume", "literature", fmt(target) + " within 3 stderr",
                 fmt(v.value) + " +- " + fmt(v.std_error) + " (z " + fmt(z) + ")", std::abs(z) <= 3.0, full);
    };
    check("amoeba", amoeba, am);
    check("coamoeba", coamoeba, co);
    if (plane.k == 2) {
      const double rel = std::abs(amoeba.value - am) / am;
      run.expect("amoeba volume within 5%", "literature", fmt(am), fmt(amoeba.value) + " (" + fmt(100 * rel) + "%)",
                 rel <= 0.05, full);
    }
  }
  const double lhs = amoeba.value * amoeba.multiplicity;
  const double rhs = coamoeba.value * coamoeba.multiplicity;
  const double slack = 3.0 * std::hypot(amoeba.std_error * amoeba.multiplicity, coamoeba.std_error * coamoeba.multiplicity);
  run.expect("amoeba * m_log == coamoeba * m_arg", "construction", "within 3 stderr",
             fmt(lhs) + " vs " + fmt(rhs), std::abs(lhs - rhs) <= slack);

  const ComparisonReport cmp = comparison_certificate(pp.p, pp.P, amoeba, coamoeba);
  run.out_.report["comparison"] = to_json(cmp);
  run.expect("p vol(coA) <= vol(A) <= P vol(coA)", "literature", "holds with 3 stderr slack",
             "margins " + fmt(cmp.lower_margin) + ", " + fmt(cmp.upper_margin), cmp.passed());

  run.finiteness(wide, FinitenessVerdict::Kind::kConvergent);

  if (plane.k == 1) {
    const LimitSetReport ls = run.limit_set(wide);
    run.limit_shape(ls, static_cast<int>(limits.size()), 0, "literature");
    run.all_rational(ls, "literature");
    run.limit_points(ls, limits, 2.0, "derived");
  }

  if (plane.k == 1 && plane.s == 1) {
    const int res = run.budget_.raster_res;
    const std::uint64_t n = run.budget_.raster_samples;
    const RasterGrid a = run.raster(near, Target::kAmoeba, default_bounds(Target::kAmoeba), res, n, 0, 1,
                                    plane.name + "-amoeba.pgm");
    const RasterGrid c = run.raster(near, Target::kCoamoeba, default_bounds(Target::kCoamoeba), res, n, 0, 1,
                                    plane.name + "-coamoeba.pgm");
    const double am = kPi * kPi / 2;
    const double ra = std::abs(a.corrected_area() - am) / am;
    const double rc = std::abs(c.corrected_area() - 2 * am) / (2 * am);
    run.expect("amoeba raster area", "literature", fmt(am) + " within 3%",
               fmt(a.corrected_area()) + " (" + fmt(100 * ra) + "%)", ra <= 0.03, full);
    run.expect("coamoeba raster area", "literature", fmt(2 * am) + " within 3%",
               fmt(c.corrected_area()) + " (" + fmt(100 * rc) + "%)", rc <= 0.03, full);
  }
}

// Largest |y| of an occupied pixel per column; -1 for empty columns.
std::vector<double> column_extent(const RasterGrid& g) {
  const double cell = (g.bounds.y_max - g.bounds.y_min) / g.height;
  std::vector<double> top(static_cast<std::size_t>(g.width), -1.0);
  for (int c = 0; c < g.width; ++c) {
    for (int r = 0; r < g.height; ++r) {
      if (!g.at(c, r)) continue;
      const double y0 = g.bounds.y_min + r * cell;
      top[static_cast<std::size_t>(c)] = std::max({top[static_cast<std::size_t>(c)], std::abs(y0), std::abs(y0 + cell)});
    }
  }
  return top;
}

// Share of occupied pixels of `a` with an occupied pixel of `b` in their 3x3
// neighbourhood.
double near_fraction(const RasterGrid& a, const RasterGrid& b) {
  std::uint64_t total = 0, near = 0;
  for (int r = 0; r < a.height; ++r) {
    for (int c = 0; c < a.width; ++c) {
      if (!a.at(c, r)) continue;
      ++total;
      bool hit = false;
      for (int dr = -1; dr <= 1 && !hit; ++dr) {
        for (int dc = -1; dc <= 1 && !hit; ++dc) {
          const int rr = r + dr, cc = c + dc;
          hit = rr >= 0 && rr < b.height && cc >= 0 && cc < b.width && b.at(cc, rr) > 0;
        }
      }
      near += hit;
    }
  }
  return total ? static_cast<double>(near) / static_cast<double>(total) : 0.0;
}

void exp_case(CaseRunner& run) {
  const VarietySpec wide = exp_curve(40.0);
  run.out_.report["spec"] = to_json(wide);
  run.jacobian(exp_curve(10.0));
  run.critical_real(wide, {-1.5, 0.5, 1.7}, {0.5, 1.0});
  run.finiteness(wide, FinitenessVerdict::Kind::kDivergent);

  const LimitSetReport ls = run.limit_set(wide);
  run.limit_shape(ls, 1, 1, "literature");
  bool point_rational = false;
  for (const auto& c : ls.components) point_rational = point_rational || (!c.arc && c.rationality.rational);
  run.expect("isolated limit point has rational slope", "literature", "rational", point_rational ? "rational" : "irrational",
             point_rational);
  run.limit_points(ls, {{-1.0, 0.0}}, 2.0, "derived");

  const PPEstimate pp = run.fibers(wide);
  run.expect("Log fiber count (2-sheeted)", "literature", "2", range(pp.min_log, pp.max_log), pp.min_log == 2 && pp.max_log == 2);
  run.expect("Arg fiber count unbounded", "literature", "growth flagged",
             pp.arg_unbounded_suspected ? "flagged, >= " + std::to_string(pp.max_arg) : "not flagged",
             pp.arg_unbounded_suspected);

  // Region between the graphs of -e^x and e^x.
  const RasterGrid g = run.raster(wide, Target::kAmoeba, {-3.0, 3.0, -20.0, 20.0}, 512, run.budget_.figure_samples, 0, 1,
                                  "exp-curve.pgm");
  const std::vector<double> top = column_extent(g);
  const double cw = (g.bounds.x_max - g.bounds.x_min) / g.width;
  const double ch = (g.bounds.y_max - g.bounds.y_min) / g.height;
  double worst = 0.0;
  int checked = 0;
  bool monotone = true;
  for (int c = 0; c < g.width; ++c) {
    const double x0 = g.bounds.x_min + c * cw;
    const double bound = std::exp(x0 + cw);
    if (bound > g.bounds.y_max - ch) break;
    const double t = top[static_cast<std::size_t>(c)];
    if (c > 0 && t < top[static_cast<std::size_t>(c - 1)]) monotone = false;
    // edge pixel lies within one cell of e^x over the column
    worst = std::max(worst, std::max(t - (bound + ch), std::exp(x0) - ch - t) / ch);
    ++checked;
  }
  run.expect("exp-curve.pgm boundary follows +-e^x", "literature", "monotone, within one cell",
             std::string(monotone ? "monotone" : "not monotone") + ", " + std::to_string(checked) + " columns, worst " +
                 fmt(std::max(0.0, worst)) + " cells over",
             monotone && worst <= 0.0 && checked > 100);
}

void circle_case(CaseRunner& run) {
  const VarietySpec wide = circle_curve(40.0);
  run.out_.report["spec"] = to_json(wide);
  run.jacobian(circle_curve(10.0));
  run.critical_real(wide, {0.3, 2.0, 4.0, 5.5}, {1.0, 0.5});
  run.finiteness(wide, FinitenessVerdict::Kind::kConvergent);

  const LimitSetReport ls = run.limit_set(wide);
  run.limit_shape(ls, 3, 0, "literature");
  run.all_rational(ls, "literature");
  const double h = std::sqrt(2.0) / 2;
  run.limit_points(ls, {{-1.0, 0.0}, {0.0, -1.0}, {h, h}}, 2.0, "literature");
  std::string dims;
  bool circles = true;
  for (const auto& c : ls.components) {
    const int d = torus_closure_dim(c.direction);
    dims += (dims.empty() ? "" : ", ") + std::to_string(d);
    circles = circles && d == 1;
  }
  run.expect("phase closure of each limit direction is a circle", "literature", "dimension 1 each", dims, circles);

  const RasterGrid g = run.raster(circle_curve(8.0), Target::kAmoeba, default_bounds(Target::kAmoeba), 256,
                                  run.budget_.figure_samples, 0, 1, "circle-curve.pgm");
  RasterConfig c;
  c.bounds = g.bounds;
  c.width = c.height = 256;
  c.samples = run.budget_.figure_samples;
  c.seed = run.seed_;
  const RasterGrid implicit = raster_hypersurface(BivariatePolynomial::from_expression("t1^2+t2^2-1"), c);
  write_image(implicit, run.dir_ + "/circle-curve-implicit.pgm");
  run.out_.figures.push_back("circle-curve-implicit.pgm");
  run.out_.report["raster"]["circle-curve-implicit.pgm"] = to_json(implicit);
  const double agree = std::min(near_fraction(g, implicit), near_fraction(implicit, g));
  run.expect("parametrized and implicit x^2+y^2-1 rasters agree", "construction",
             ">= 0.97 of pixels within one pixel", fmt(agree), agree >= 0.97);

  const auto roots = polynomial_roots(BivariatePolynomial::from_expression("t1^2+t2^2-1").in_y(2.0));
  double err = INFINITY;
  if (roots && roots->size() == 2) {
    err = 0.0;
    for (const Complex& y : *roots) err = std::max(err, std::abs(std::log(std::abs(y)) - std::log(std::sqrt(3.0))));
  }
  run.expect("x^2+y^2-1 at x = 2 gives amoeba point (ln 2, ln sqrt 3)", "derived", "error <= 1e-12", fmt(err), err <= 1e-12);
}

void spatial_case(CaseRunner& run) {
  const VarietySpec wide = spatial_curve(40.0);
  run.out_.report["spec"] = to_json(wide);
  run.jacobian(spatial_curve(10.0));
  run.critical_real(wide, {-2.5, -0.5, 1.2}, {0.5, 1.0});
  run.finiteness(wide, FinitenessVerdict::Kind::kDivergent);
  const LimitSetReport ls = run.limit_set(wide);
  run.limit_shape(ls, 2, 1, "literature");
  run.limit_points(ls, {{-1.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}, 2.0, "derived");
  const std::uint64_t n = run.budget_.figure_samples;
  run.raster(wide, Target::kAmoeba, {-3.0, 3.0, -20.0, 20.0}, 512, n, 0, 1, "spatial-curve-12.pgm");
  run.raster(wide, Target::kAmoeba, {-6.0, 6.0, -6.0, 6.0}, 512, n, 0, 2, "spatial-curve-13.pgm");
  run.raster(wide, Target::kAmoeba, {-20.0, 20.0, -6.0, 6.0}, 512, n, 1, 2, "spatial-curve-23.pgm");
}

}  // namespace

int GalleryResult::exit_code() const {
  int code = 0;
  for (const auto& c : cases) {
    if (c.status != "ok") return 3;
    for (const auto& e : c.expectations) {
      if (e.required && e.basis == "literature" && !e.passed) code = 1;
    }
  }
  return code;
}

Json GalleryResult::to_json() const {
  Json out;
  out["profile"] = to_string(profile);
  out["seed"] = seed;
  out["exit_code"] = exit_code();
  out["cases"] = Json::array();
  for (const auto& c : cases) {
    Json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    if (!c.error.empty()) jc["error"] = c.error;
    jc["expectations"] = Json::array();
    for (const auto& e : c.expectations) {
      jc["expectations"].push_back({{"check", e.check},
                                    {"basis", e.basis},
                                    {"required", e.required},
                                    {"expected", e.expected},
                                    {"observed", e.observed},
                                    {"passed", e.passed}});
    }
    jc["figures"] = c.figures;
    jc["report"] = c.report;
    out["cases"].push_back(std::move(jc));
  }
  return out;
}

std::string GalleryResult::table() const {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-14s %-6s %-12s %s\n", "case", "status", "basis", "check: expected | observed");
  os << line;
  for (const auto& c : cases) {
    if (c.status != "ok") {
      std::snprintf(line, sizeof line, "%-14s %-6s %-12s %s\n", c.name.c_str(), "ERROR", "-", c.error.c_str());
      os << line;
    }
    for (const auto& e : c.expectations) {
      const char* status = e.passed ? "pass" : (e.required ? "FAIL" : "miss");
      std::snprintf(line, sizeof line, "%-14s %-6s %-12s %s: %s | %s\n", c.name.c_str(), status, e.basis.c_str(),
                    e.check.c_str(), e.expected.c_str(), e.observed.c_str());
      os << line;
    }
  }
  os << "exit code " << exit_code() << " (" << to_string(profile) << " profile, seed " << seed << ")\n";
  return os.str();
}

GalleryResult run_gallery(const std::string& dir, Profile profile, std::uint64_t seed, std::ostream* log) {
  std::filesystem::create_directories(dir);
  GalleryResult result;
  result.profile = profile;
  result.seed = seed;
  const Budget budget = budget_for(profile);
  const std::vector<std::pair<std::string, std::function<void(CaseRunner&)>>> cases = {
      {"real-line", [](CaseRunner& r) { plane_case(r, real_line(), {{-1.0, 0.0}, {0.0, -1.0}, {std::sqrt(0.5), std::sqrt(0.5)}}); }},
      {"non-real-line", [](CaseRunner& r) {
         const double s = 1.0 / std::sqrt(3.0);
         plane_case(r, nonreal_line(), {{-1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}, {s, s, s}});
       }},
      {"real-plane", [](CaseRunner& r) { plane_case(r, real_2plane(), {}); }},
      {"exp-curve", exp_case},
      {"circle-curve", circle_case},
      {"spatial-curve", spatial_case},
  };
  for (const auto& [name, body] : cases) {
    GalleryCaseResult c;
    c.name = name;
    c.report = Json::object();
    CaseRunner runner(c, dir, budget, profile, seed);
    try {
      body(runner);
    } catch (const std::exception& e) {
      c.status = "error";
      c.error = e.what();
    }
    if (log) {
      int passed = 0;
      for (const auto& e : c.expectations) passed += e.passed;
      *log << name << ": " << c.status << ", " << passed << "/" << c.expectations.size() << " expectations met\n";
    }
    result.cases.push_back(std::move(c));
  }
  std::ofstream json(dir + "/results.json");
  json << dump(result.to_json());
  std::ofstream summary(dir + "/summary.txt");
  summary << result.table();
  if (!json || !summary) throw std::runtime_error("cannot write gallery results to " + dir);
  return result;
}

}  // namespace amoeba
