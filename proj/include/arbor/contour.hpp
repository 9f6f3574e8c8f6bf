#pragma once

#include <array>
#include <vector>

#include "arbor/dependence.hpp"

namespace arbor {

struct Polyline {
    double level = 0.0;
    std::vector<std::array<double, 2>> points;  // data coordinates
    bool closed = false;
};

/// Iso-lines of a rectilinear grid at one level. Crossings are placed by
/// linear interpolation along cell edges; saddle cells are resolved with the
/// mean of the four corners. Segments are stitched into maximal polylines.
std::vector<Polyline> marching_squares(const SurfaceGrid& grid, double level);

/// Multiples of `step` strictly inside (zmin, zmax).
std::vector<double> contour_levels(double zmin, double zmax, double step);

std::vector<Polyline> contour_lines(const SurfaceGrid& grid, double step);

}  // namespace arbor
