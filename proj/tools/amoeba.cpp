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

// amoeba: command-line frontend.
//
// Exit codes: 0 pass, 1 expectation failure, 2 config error,
// 3 numerical nonconvergence.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "amoeba/fibers.hpp"
#include "amoeba/gallery.hpp"
#include "amoeba/identity_check.hpp"
#include "amoeba/limit_sets.hpp"
#include "amoeba/linear_spaces.hpp"
#include "amoeba/measure.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/raster.hpp"
#include "amoeba/report_json.hpp"

namespace {

using namespace amoeba;

enum Exit { kPass = 0, kExpectation = 1, kConfig = 2, kNonconvergence = 3 };

struct Globals {
  std::uint64_t seed = 1;
  int jobs = 0;
  std::string out;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const Json& report) {
  if (g.out.empty()) {
    std::cout << dump(report);
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw ConfigError("cannot open " + g.out + " for writing");
  out << dump(report);
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(what + ": '" + item + "' is not a number");
    }
  }
  return v;
}

const char* kRasterFooter =
    "Image files:\n"
    "  .pgm (P5): \"P5\\n<W> <H>\\n255\\n\" then W*H bytes, first row = largest y;\n"
    "             hit pixels 0, empty pixels 255.\n"
    "  .ppm (P6): \"P6\\n<W> <H>\\n255\\n\" then W*H RGB triples;\n"
    "             hit pixels (32,64,160), empty pixels (255,255,255).";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amoebas, coamoebas and their volumes for parametrized subvarieties of (C*)^n"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (AMOEBA_SEED overrides)");
  app.add_option("--jobs", g.jobs, "Worker thread cap (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Write the JSON report here instead of stdout");

  int code = kPass;

  // volume
  auto* vol = app.add_subcommand("volume", "Monte Carlo amoeba / coamoeba volume");
  std::string vol_spec, vol_target = "amoeba";
  std::uint64_t vol_samples = 1'000'000;
  std::optional<double> vol_radius, vol_expect;
  std::optional<int> vol_mult;
  bool vol_finite = false;
  vol->add_option("--spec", vol_spec, "Variety config (JSON)")->required();
  vol->add_option("--target", vol_target, "amoeba or coamoeba")->check(CLI::IsMember({"amoeba", "coamoeba"}));
  vol->add_option("--samples", vol_samples, "Sample count")->check(CLI::PositiveNumber);
  vol->add_option("--radius", vol_radius, "Clip the domain to this stage radius");
  vol->add_option("--multiplicity", vol_mult, "Covering multiplicity of the target map");
  vol->add_option("--expect", vol_expect, "Expected volume; exit 1 unless within 3 stderr");
  vol->add_flag("--finiteness", vol_finite, "Also classify the area as convergent / divergent");

  // fibers
  auto* fib = app.add_subcommand("fibers", "Log / Arg fiber counts and the rationals p, P");
  std::string fib_spec, fib_map = "log", fib_target, fib_param;
  int fib_starts = 0, fib_probes = 20;
  bool fib_pp = false;
  fib->add_option("--spec", fib_spec, "Variety config (JSON)")->required();
  fib->add_option("--map", fib_map, "log or arg")->check(CLI::IsMember({"log", "arg"}));
  fib->add_option("--target", fib_target, "Target point x1,..,xn (log-moduli or angles)");
  fib->add_option("--at", fib_param, "Use the image of the parameter re1,im1,.. as target");
  fib->add_option("--starts", fib_starts, "Multistart count (0 = 64 * 2^k)")->check(CLI::NonNegativeNumber);
  fib->add_flag("--pp", fib_pp, "Estimate p and P over random regular probes");
  fib->add_option("--probes", fib_probes, "Probe count for --pp")->check(CLI::PositiveNumber);

  // limitset
  auto* lim = app.add_subcommand("limitset", "Logarithmic limit set by far-field direction clustering");
  std::string lim_spec, lim_format = "json", lim_radii;
  std::uint64_t lim_samples = 200'000;
  double lim_tol = 1.5;
  lim->add_option("--spec", lim_spec, "Variety config (JSON)")->required();
  lim->add_option("--samples", lim_samples, "Far-field samples drawn")->check(CLI::PositiveNumber);
  lim->add_option("--radii", lim_radii, "Shell radii r1,..,rm (default 10,20,40)");
  lim->add_option("--tolerance", lim_tol, "Cluster tolerance in degrees")->check(CLI::PositiveNumber);
  lim->add_option("--format", lim_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // raster
  auto* ras = app.add_subcommand("raster", "Amoeba / coamoeba image and pixel area");
  ras->footer(kRasterFooter);
  std::string ras_spec, ras_poly, ras_mode = "amoeba", ras_bounds, ras_image, ras_coords = "1,2";
  int ras_res = 512;
  std::uint64_t ras_samples = 1'000'000;
  auto* ras_spec_opt = ras->add_option("--spec", ras_spec, "Variety config (JSON)");
  ras->add_option("--poly", ras_poly, "Bivariate polynomial in t1 (= x), t2 (= y)")->excludes(ras_spec_opt);
  ras->add_option("--mode", ras_mode, "amoeba or coamoeba")->check(CLI::IsMember({"amoeba", "coamoeba"}));
  ras->add_option("--bounds", ras_bounds, "xmin,xmax,ymin,ymax");
  ras->add_option("--res", ras_res, "Pixels per side")->check(CLI::Range(1, 16384));
  ras->add_option("--samples", ras_samples, "Parameter samples")->check(CLI::PositiveNumber);
  ras->add_option("--coords", ras_coords, "Coordinate pair i,j (1-based) for n > 2");
  ras->add_option("--out", ras_image, "Image file (.pgm or .ppm); the JSON summary goes to stdout")->required();

  // plane
  auto* pla = app.add_subcommand("plane", "Reality, fiber counts and volume certificate of an affine plane");
  std::string pla_file;
  std::uint64_t pla_samples = 1'000'000;
  int pla_probes = 20;
  pla->add_option("--plane", pla_file, "Plane config (JSON)")->required();
  pla->add_option("--samples", pla_samples, "Volume samples")->check(CLI::PositiveNumber);
  pla->add_option("--probes", pla_probes, "Regular probes for fiber counts")->check(CLI::PositiveNumber);

  // jacobian-check
  auto* jac = app.add_subcommand("jacobian-check", "Compare the Log and Arg generalized Jacobians");
  std::string jac_spec;
  std::uint64_t jac_samples = 10'000;
  double jac_tol = 1e-8;
  jac->add_option("--spec", jac_spec, "Variety config (JSON); default: every gallery variety");
  jac->add_option("--samples", jac_samples, "Points per variety")->check(CLI::PositiveNumber);
  jac->add_option("--tolerance", jac_tol, "Allowed relative deviation");

  // gallery
  auto* gal = app.add_subcommand("gallery", "Run every built-in example and write figures and results");
  std::string gal_dir = "gallery-out", gal_profile = "quick";
  gal->add_option("--dir", gal_dir, "Output directory");
  gal->add_option("--profile", gal_profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kConfig;
  }

  try {
    if (const char* env = std::getenv("AMOEBA_SEED")) {
      try {
        std::size_t used = 0;
        g.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw ConfigError(std::string("AMOEBA_SEED='") + env + "' is not an unsigned integer");
      }
    }
    set_worker_threads(g.jobs);

    if (*vol) {
      const VarietySpec spec = load_variety(vol_spec);
      VolumeOptions o;
      o.target = parse_target(vol_target);
      o.samples = vol_samples;
      o.seed = g.seed;
      o.multiplicity = vol_mult;
      if (vol_radius) o.truncation = clip_region(spec.domain, *vol_radius);
      const VolumeEstimate v = integrate_pullback(spec, o);
      Json report = to_json(v);
      if (vol_expect) {
        const double z = (v.value - *vol_expect) / v.std_error;
        report["expected"] = *vol_expect;
        report["z_score"] = z;
        report["passed"] = std::abs(z) <= 3.0;
        if (!(std::abs(z) <= 3.0)) code = kExpectation;
      }
      if (vol_finite) {
        FinitenessOptions f;
        f.seed = g.seed;
        report["finiteness"] = to_json(classify_finiteness(spec, f));
      }
      emit(g, report);
    } else if (*fib) {
      const VarietySpec spec = load_variety(fib_spec);
      FiberOptions fo;
      fo.seed = g.seed;
      fo.starts = fib_starts;
      if (fib_pp) {
        PPOptions po;
        po.probes = fib_probes;
        po.fiber = fo;
        emit(g, to_json(estimate_p_P(spec, po)));
      } else {
        const MapKind map = parse_map(fib_map);
        std::vector<double> target;
        if (!fib_target.empty() == !fib_param.empty()) throw ConfigError("give exactly one of --target and --at");
        if (!fib_target.empty()) {
          target = parse_list(fib_target, "--target");
          if (static_cast<int>(target.size()) != spec.n) throw ConfigError("--target needs n coordinates");
        } else {
          const std::vector<double> p = parse_list(fib_param, "--at");
          if (static_cast<int>(p.size()) != 2 * spec.k) throw ConfigError("--at needs 2k numbers");
          std::vector<Complex> t;
          for (int i = 0; i < spec.k; ++i) t.emplace_back(p[static_cast<std::size_t>(2 * i)], p[static_cast<std::size_t>(2 * i + 1)]);
          target = push_forward(spec, map, t);
        }
        const FiberReport r = fiber_count(spec, map, target, fo);
        emit(g, to_json(r));
        if (r.count == 0) code = kNonconvergence;
      }
    } else if (*lim) {
      const VarietySpec spec = load_variety(lim_spec);
      LimitSetOptions o;
      o.seed = g.seed;
      o.samples = lim_samples;
      o.tolerance = lim_tol * kDegree;
      if (!lim_radii.empty()) o.radii = parse_list(lim_radii, "--radii");
      const LimitSetReport r = log_limit_set(spec, o);
      if (lim_format == "csv") {
        if (g.out.empty()) {
          write_limit_set_csv(r, std::cout);
        } else {
          std::ofstream out(g.out);
          if (!out) throw ConfigError("cannot open " + g.out + " for writing");
          write_limit_set_csv(r, out);
        }
      } else {
        emit(g, to_json(r));
      }
    } else if (*ras) {
      if (ras_spec.empty() == ras_poly.empty()) throw ConfigError("give exactly one of --spec and --poly");
      RasterConfig c;
      c.mode = parse_target(ras_mode);
      c.bounds = default_bounds(c.mode);
      if (!ras_bounds.empty()) {
        const std::vector<double> b = parse_list(ras_bounds, "--bounds");
        if (b.size() != 4) throw ConfigError("--bounds needs xmin,xmax,ymin,ymax");
        c.bounds = {b[0], b[1], b[2], b[3]};
      }
      c.width = c.height = ras_res;
      c.samples = ras_samples;
      c.seed = g.seed;
      const std::vector<double> pair = parse_list(ras_coords, "--coords");
      if (pair.size() != 2) throw ConfigError("--coords needs two indices");
      c.coord_x = static_cast<int>(pair[0]) - 1;
      c.coord_y = static_cast<int>(pair[1]) - 1;
      RasterGrid grid;
      if (!ras_poly.empty()) {
        BivariatePolynomial poly;
        try {
          poly = BivariatePolynomial::from_expression(ras_poly);
        } catch (const ParseError& e) {
          throw ConfigError(std::string("--poly: ") + e.what());
        }
        grid = raster_hypersurface(poly, c);
      } else {
        grid = raster_pushforward(load_variety(ras_spec), c);
      }
      write_image(grid, ras_image);
      Json report = to_json(grid);
      report["image"] = ras_image;
      emit(g, report);
    } else if (*pla) {
      const AffinePlaneSpec plane = load_plane(pla_file);
      Json report;
      report["plane"] = to_json(plane);
      const RealityWitness real = is_real(plane);
      const ExpectedCounts counts = expected_counts(plane);
      report["reality"] = to_json(real);
      report["genericity_condition"] = genericity_condition(plane);
      report["expected_counts"] = to_json(counts);
      PPOptions po;
      po.probes = pla_probes;
      po.fiber.seed = g.seed;
      const PPEstimate pp = estimate_p_P(to_variety(plane, 10.0), po);
      report["fibers"] = to_json(pp);
      bool ok = true;
      if (counts.log) ok = ok && pp.min_log == *counts.log && pp.max_log == *counts.log;
      if (counts.arg) ok = ok && pp.min_arg == *counts.arg && pp.max_arg == *counts.arg;
      report["counts_match"] = ok;
      if (real.real && plane.s == plane.k) {
        const VolumeCertificate cert = volume_certificate(plane, pla_samples, g.seed);
        report["volume_certificate"] = to_json(cert);
        ok = ok && cert.passed();
      }
      emit(g, report);
      if (!ok) code = kExpectation;
    } else if (*jac) {
      std::vector<VarietySpec> specs;
      if (jac_spec.empty()) {
        specs = gallery_varieties();
      } else {
        specs.push_back(load_variety(jac_spec));
      }
      Json report = Json::array();
      for (const auto& spec : specs) {
        const JacobianCheckReport r = check_jacobian_identity(spec, jac_samples, g.seed);
        Json j = to_json(r);
        j["name"] = spec.name;
        j["passed"] = r.max_relative_deviation <= jac_tol && r.max_minor_deviation <= jac_tol;
        if (!j["passed"].get<bool>()) code = kExpectation;
        report.push_back(std::move(j));
      }
      emit(g, report);
    } else if (*gal) {
      const GalleryResult r = run_gallery(gal_dir, parse_profile(gal_profile), g.seed, &std::cerr);
      std::cout << r.table();
      code = r.exit_code();
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNonconvergence;
  }
  return code;
}
