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

#include "amoeba/raster.hpp"

#include <omp.h>

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "amoeba/torus_maps.hpp"

namespace amoeba {

RasterGrid::RasterGrid(RasterBounds b, int w, int h, Target m)
    : bounds(b), width(w), height(h), mode(m), hits(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

double RasterGrid::cell_area() const {
  return (bounds.x_max - bounds.x_min) / width * ((bounds.y_max - bounds.y_min) / height);
}

bool RasterGrid::add(double x, double y) {
  const double fx = (x - bounds.x_min) / (bounds.x_max - bounds.x_min);
  const double fy = (y - bounds.y_min) / (bounds.y_max - bounds.y_min);
  if (!(fx >= 0.0 && fx < 1.0 && fy >= 0.0 && fy < 1.0)) {
    ++outside;
    return false;
  }
  const int col = std::min(width - 1, static_cast<int>(fx * width));
  const int row = std::min(height - 1, static_cast<int>(fy * height));
  ++hits[static_cast<std::size_t>(row) * width + col];
  ++plotted;
  return true;
}

std::uint64_t RasterGrid::occupied() const {
  std::uint64_t c = 0;
  for (std::uint64_t h : hits) c += h > 0;
  return c;
}

double RasterGrid::corrected_area() const {
  std::uint64_t interior = 0, boundary = 0;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (!at(c, r)) continue;
      // pixels on the image border are not cut by the region boundary
      const bool cut = (c > 0 && !at(c - 1, r)) || (c < width - 1 && !at(c + 1, r)) ||
                       (r > 0 && !at(c, r - 1)) || (r < height - 1 && !at(c, r + 1));
      if (cut) {
        ++boundary;
      } else {
        ++interior;
      }
    }
  }
  return cell_area() * (static_cast<double>(interior) + 0.5 * static_cast<double>(boundary));
}

void RasterGrid::merge(const RasterGrid& other) {
  for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += other.hits[i];
  plotted += other.plotted;
  outside += other.outside;
  skipped += other.skipped;
}

RasterBounds default_bounds(Target mode) {
  if (mode == Target::kCoamoeba) return {0.0, kTwoPi, 0.0, kTwoPi};
  return {};
}

namespace {

void check_config(const RasterConfig& config, int n) {
  if (config.samples == 0) throw std::invalid_argument("raster sample budget must be positive");
  if (config.width <= 0 || config.height <= 0 || config.width > 16384 || config.height > 16384) {
    throw std::invalid_argument("raster resolution must be between 1 and 16384");
  }
  const RasterBounds& b = config.bounds;
  if (!(b.x_max > b.x_min) || !(b.y_max > b.y_min)) throw std::invalid_argument("raster bounds are empty");
  if (config.coord_x < 0 || config.coord_x >= n || config.coord_y < 0 || config.coord_y >= n ||
      config.coord_x == config.coord_y) {
    throw std::invalid_argument("raster coordinate pair must be two distinct coordinates of the variety");
  }
}

// Annulus parameters are drawn log-polar around a randomly chosen anchor
// (domain center or a puncture) so every end of the curve is resolved. Box
// parameters mix uniform draws with log-polar draws around punctures; draws
// falling outside the box are skipped by the caller.
void draw_raster_parameter(const VarietySpec& spec, const std::vector<std::vector<Complex>>& anchors,
                           CounterRng& rng, ParamPoint& t) {
  for (int j = 0; j < spec.k; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const VariableDomain& d = spec.domain[jj];
    const double u0 = rng.uniform();
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const auto& list = anchors[jj];
    if (d.kind == VariableDomain::Kind::kBox) {
      // half the draws uniform over the box, half log-polar around a puncture
      const std::size_t holes = list.size() - 1;
      if (holes == 0 || u0 < 0.5) {
        double weight = 0.0;
        t[jj] = d.sample(u1, u2, weight);
        continue;
      }
      const std::size_t pick = 1 + std::min(holes - 1, static_cast<std::size_t>((2.0 * u0 - 1.0) * static_cast<double>(holes)));
      const double top = std::log(std::hypot(d.re_max - d.re_min, d.im_max - d.im_min));
      const double lo = std::atan(-20.0);
      const double hi = std::atan(top);
      t[jj] = list[pick] + std::polar(std::exp(std::tan(lo + u1 * (hi - lo))), kTwoPi * u2);
      continue;
    }
    const std::size_t pick = std::min(list.size() - 1, static_cast<std::size_t>(u0 * static_cast<double>(list.size())));
    // Cauchy-distributed log-modulus: dense near |t - anchor| = 1, still
    // reaching both ends of the annulus.
    const double lo = std::atan(d.log_r_min);
    const double hi = std::atan(d.log_r_max);
    const double s = std::tan(lo + u1 * (hi - lo));
    t[jj] = list[pick] + std::polar(std::exp(s), kTwoPi * u2);
  }
}

void plot_sample(const VarietySpec& spec, const JetEvaluator& evaluator,
                 const std::vector<std::vector<Complex>>& anchors, const RasterConfig& config,
                 std::uint64_t index, RasterGrid& grid) {
  CounterRng rng(config.seed, index);
  ParamPoint t{};
  draw_raster_parameter(spec, anchors, rng, t);
  const std::span<const Complex> params(t.data(), static_cast<std::size_t>(spec.k));
  if (!spec.admissible(params)) {
    ++grid.skipped;
    return;
  }
  const std::vector<Complex> z = [&] {
    try {
      return evaluator.values(params);
    } catch (const EvalError&) {
      return std::vector<Complex>{};
    }
  }();
  if (z.empty()) {
    ++grid.skipped;
    return;
  }
  const Complex zx = z[static_cast<std::size_t>(config.coord_x)];
  const Complex zy = z[static_cast<std::size_t>(config.coord_y)];
  if (zx == Complex(0.0, 0.0) || zy == Complex(0.0, 0.0)) {
    ++grid.skipped;
    return;
  }
  if (config.mode == Target::kAmoeba) {
    grid.add(std::log(std::abs(zx)), std::log(std::abs(zy)));
  } else {
    grid.add(wrap_angle(std::arg(zx)), wrap_angle(std::arg(zy)));
  }
}

}  // namespace

RasterGrid raster_pushforward(const VarietySpec& spec, const RasterConfig& config) {
  check_config(config, spec.n);
  const JetEvaluator evaluator = spec.evaluator();
  const auto anchors = sampling_anchors(spec);
  RasterGrid total(config.bounds, config.width, config.height, config.mode);
  const auto count = static_cast<std::int64_t>(config.samples);
  // Integer counts: the merged grid is independent of the schedule.
#pragma omp parallel
  {
    RasterGrid local(config.bounds, config.width, config.height, config.mode);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) plot_sample(spec, evaluator, anchors, config, static_cast<std::uint64_t>(i), local);
#pragma omp critical(raster_merge)
    total.merge(local);
  }
  if (total.plotted == 0) throw std::runtime_error("raster bounds exclude every sample");
  return total;
}

RasterGrid raster_pushforward_serial(const VarietySpec& spec, const RasterConfig& config) {
  check_config(config, spec.n);
  const JetEvaluator evaluator = spec.evaluator();
  const auto anchors = sampling_anchors(spec);
  RasterGrid grid(config.bounds, config.width, config.height, config.mode);
  for (std::uint64_t i = 0; i < config.samples; ++i) plot_sample(spec, evaluator, anchors, config, i, grid);
  if (grid.plotted == 0) throw std::runtime_error("raster bounds exclude every sample");
  return grid;
}

RasterGrid raster_hypersurface(const BivariatePolynomial& poly, const RasterConfig& config) {
  check_config(config, 2);
  if (poly.degree_y() < 1) throw std::invalid_argument("polynomial must involve the second variable");
  const bool rows = poly.degree_x() >= 1;
  RasterGrid total(config.bounds, config.width, config.height, config.mode);
  const auto count = static_cast<std::int64_t>(config.samples);
  const RasterBounds& b = config.bounds;
#pragma omp parallel
  {
    RasterGrid local(config.bounds, config.width, config.height, config.mode);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      CounterRng rng(config.seed, static_cast<std::uint64_t>(i));
      const double u1 = rng.uniform();
      const double u2 = rng.uniform();
      const bool row = rows && (i & 1) != 0;
      const double lo = row ? b.y_min : b.x_min;
      const double hi = row ? b.y_max : b.x_max;
      double rho = 0.0, theta = 0.0;
      if (config.mode == Target::kAmoeba) {
        rho = lo + u1 * (hi - lo);
        theta = kTwoPi * u2;
      } else {
        rho = -5.0 + 10.0 * u1;
        theta = lo + u2 * (hi - lo);
      }
      // even samples fix x and solve for y, odd samples fix y and solve for x
      const bool by_row = rows && (i & 1) != 0;
      const Complex fixed = std::polar(std::exp(rho), theta);
      const auto roots = polynomial_roots(by_row ? poly.in_x(fixed) : poly.in_y(fixed));
      if (!roots) {
        ++local.skipped;
        continue;
      }
      for (const Complex& r : *roots) {
        if (std::abs(r) <= 1e-12) continue;
        const Complex zx = by_row ? r : fixed;
        const Complex zy = by_row ? fixed : r;
        if (config.mode == Target::kAmoeba) {
          local.add(std::log(std::abs(zx)), std::log(std::abs(zy)));
        } else {
          local.add(wrap_angle(std::arg(zx)), wrap_angle(std::arg(zy)));
        }
      }
    }
#pragma omp critical(raster_merge)
    total.merge(local);
  }
  return total;
}

namespace {

void write_header(std::ostream& out, const char* magic, const RasterGrid& grid) {
  out << magic << '\n' << grid.width << ' ' << grid.height << "\n255\n";
}

}  // namespace

void write_pgm(const RasterGrid& grid, std::ostream& out) {
  write_header(out, "P5", grid);
  std::vector<char> row(static_cast<std::size_t>(grid.width));
  for (int r = grid.height - 1; r >= 0; --r) {
    for (int c = 0; c < grid.width; ++c) row[static_cast<std::size_t>(c)] = static_cast<char>(grid.at(c, r) ? 0 : 255);
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void write_ppm(const RasterGrid& grid, std::ostream& out) {
  write_header(out, "P6", grid);
  std::vector<char> row(static_cast<std::size_t>(grid.width) * 3);
  for (int r = grid.height - 1; r >= 0; --r) {
    for (int c = 0; c < grid.width; ++c) {
      const bool hit = grid.at(c, r) > 0;
      row[static_cast<std::size_t>(3 * c)] = static_cast<char>(hit ? 32 : 255);
      row[static_cast<std::size_t>(3 * c + 1)] = static_cast<char>(hit ? 64 : 255);
      row[static_cast<std::size_t>(3 * c + 2)] = static_cast<char>(hit ? 160 : 255);
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void write_image(const RasterGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".ppm") == 0) {
    write_ppm(grid, out);
  } else {
    write_pgm(grid, out);
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace amoeba
