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

// Pixel grids of amoeba / coamoeba images.
//
// Image files:
//   P5: "P5\n<W> <H>\n255\n" then W*H bytes, row 0 = top (largest y);
//       hit pixels 0, empty pixels 255.
//   P6: "P6\n<W> <H>\n255\n" then W*H RGB triples; hit pixels (32, 64, 160),
//       empty pixels (255, 255, 255).

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "amoeba/measure.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/variety.hpp"

namespace amoeba {

struct RasterBounds {
  double x_min = -6.0, x_max = 6.0, y_min = -6.0, y_max = 6.0;
};

struct RasterGrid {
  RasterBounds bounds;
  int width = 0;
  int height = 0;
  Target mode = Target::kAmoeba;
  std::vector<std::uint64_t> hits;  // row-major, row 0 at y_min
  std::uint64_t plotted = 0;        // points that landed inside the bounds
  std::uint64_t outside = 0;
  std::uint64_t skipped = 0;  // excluded samples or unsolved columns

  RasterGrid() = default;
  RasterGrid(RasterBounds b, int w, int h, Target m);

  double cell_area() const;
  bool add(double x, double y);
  std::uint64_t at(int col, int row) const { return hits[static_cast<std::size_t>(row) * width + col]; }
  std::uint64_t occupied() const;
  double occupied_area() const { return cell_area() * static_cast<double>(occupied()); }
  // Hit pixels with a 4-neighbour miss count half: a first-order correction
  // for cells cut by the boundary.
  double corrected_area() const;
  void merge(const RasterGrid& other);
};

struct RasterConfig {
  Target mode = Target::kAmoeba;
  RasterBounds bounds;
  int width = 512;
  int height = 512;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int coord_x = 0;  // coordinate pair projected to the image
  int coord_y = 1;
};

// Default bounds: the given box for amoebas, [0, 2pi)^2 for coamoebas.
RasterBounds default_bounds(Target mode);

RasterGrid raster_pushforward(const VarietySpec& spec, const RasterConfig& config);
RasterGrid raster_pushforward_serial(const VarietySpec& spec, const RasterConfig& config);

// Even samples draw z1 = exp(rho + i theta) with rho uniform over the x-range
// and theta uniform in [0, 2pi), solve p(z1, y) = 0 and plot every nonzero
// root. Odd samples do the same with the roles of x and y swapped, which
// resolves tentacles running parallel to the y-axis.
RasterGrid raster_hypersurface(const BivariatePolynomial& poly, const RasterConfig& config);

void write_pgm(const RasterGrid& grid, std::ostream& out);
void write_ppm(const RasterGrid& grid, std::ostream& out);
void write_image(const RasterGrid& grid, const std::string& path);

}  // namespace amoeba
