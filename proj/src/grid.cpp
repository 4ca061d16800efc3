#include "grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace diskrad {

namespace {

// Uniform faces on [lo, hi] via the affine blend, endpoints exact.
void append_segment_faces(std::vector<double>& faces, double lo, double hi,
                          std::size_t count) {
  for (std::size_t i = 1; i <= count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count);
    faces.push_back(i == count ? hi : lo * (1.0 - t) + hi * t);
  }
}

}  // namespace

RadialGrid build_grid_segments(double source_radius, double disk_radius,
                               std::size_t n_inner, std::size_t n_outer) {
  if (!(source_radius > 0.0) || !(disk_radius >= source_radius))
    throw InvalidParameter("grid: require 0 < a <= r");
  if (n_inner < 2) throw InvalidParameter("grid: inner segment needs >= 2 cells");
  if (n_outer == 0 && source_radius != disk_radius)
    throw InvalidParameter("grid: outer segment needs >= 2 cells");

  RadialGrid g;
  g.faces.reserve(n_inner + n_outer + 1);
  g.faces.push_back(0.0);
  append_segment_faces(g.faces, 0.0, source_radius, n_inner);
  g.source_face = n_inner;
  if (n_outer > 0)
    append_segment_faces(g.faces, source_radius, disk_radius, n_outer);

  const std::size_t n = g.faces.size() - 1;
  g.centers.resize(n);
  g.cell_areas.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double fl = g.faces[i];
    const double fr = g.faces[i + 1];
    if (!(fr > fl)) throw NumericalError("grid: faces not strictly increasing");
    g.centers[i] = 0.5 * (fl + fr);
    g.cell_areas[i] = std::numbers::pi * (fr - fl) * (fr + fl);
  }
  return g;
}

RadialGrid build_grid(const DiskParams& params, std::size_t n_cells) {
  if (n_cells < 8)
    throw InvalidParameter("grid: n_cells must be at least 8");
  const double a = params.source_radius;
  const double R = params.radius;
  if (a == R) return build_grid_segments(a, R, n_cells, 0);

  const auto proposed = static_cast<std::size_t>(std::max<long long>(
      2, std::llround(static_cast<double>(n_cells) * a / R)));
  const std::size_t n_inner = std::min(proposed, n_cells - 2);
  return build_grid_segments(a, R, n_inner, n_cells - n_inner);
}

RadialGrid refine(const RadialGrid& grid, unsigned factor) {
  if (factor == 0) throw InvalidParameter("grid: refinement factor must be >= 1");
  const std::size_t n_inner = grid.inner_cells() * factor;
  const std::size_t n_outer = (grid.size() - grid.inner_cells()) * factor;
  return build_grid_segments(grid.source_radius(), grid.radius(), n_inner,
                             n_outer);
}

}  // namespace diskrad
