#pragma once

#include <cstddef>
#include <vector>

#include "model.hpp"

namespace diskrad {

// Finite-volume cells on [0, R]: uniform spacing on [0, a] and on [a, R]
// separately, with a shared face exactly at r = a so the discrete source
// integral equals pi*a^2*q0 with no smearing.
struct RadialGrid {
  std::vector<double> faces;       // n+1 face radii, faces.front() == 0
  std::vector<double> centers;     // n cell centers (face midpoints)
  std::vector<double> cell_areas;  // n annulus areas pi*(f_{i+1}^2 - f_i^2)
  std::size_t source_face = 0;     // faces[source_face] == a

  std::size_t size() const { return centers.size(); }
  double radius() const { return faces.back(); }
  double source_radius() const { return faces[source_face]; }
  std::size_t inner_cells() const { return source_face; }
};

// Segment cell counts are proportional to segment length (rounded, each at
// least 2 when the segment is nonempty). n_cells < 8 is rejected.
RadialGrid build_grid(const DiskParams& params, std::size_t n_cells);

// Direct construction from per-segment counts; n_outer == 0 collapses the
// outer segment (a == R).
RadialGrid build_grid_segments(double source_radius, double disk_radius,
                               std::size_t n_inner, std::size_t n_outer);

// Splits every cell into `factor` equal parts. Per-segment uniformity is
// preserved exactly, so coarse faces reappear bitwise in the fine grid.
RadialGrid refine(const RadialGrid& grid, unsigned factor);

}  // namespace diskrad
