#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arbor/dataset.hpp"
#include "arbor/forest.hpp"

namespace arbor {

/// Per-observation OOB predictions joined with covariate columns.
struct DependenceData {
    std::vector<std::string> xvars;
    std::vector<std::vector<double>> columns;  // one per xvar, training row order
    std::vector<double> oob_prediction;
    std::vector<std::string> group_label;      // empty, or one label per row

    std::size_t rows() const { return oob_prediction.size(); }
};

DependenceData variable_dependence(const Forest& forest, const DataSet& data, const std::vector<std::string>& xvars);

/// Attaches "(lo,hi]" labels for a conditioning (coplot) view.
void attach_groups(DependenceData& dep, const GroupLabels& groups, const std::string& prefix = "");

enum class GridMode { quantile, range };

GridMode parse_grid_mode(std::string_view text);
std::string_view to_string(GridMode mode);

struct PartialPoint {
    double x = 0.0;
    double yhat = 0.0;
    std::string group;  // empty when ungrouped
};

struct PartialData {
    std::string xvar;
    std::size_t npts = 0;  // achieved grid size (per group for coplots)
    std::vector<PartialPoint> points;
    std::vector<std::string> warnings;
};

struct PartialOptions {
    std::size_t npts = 25;
    GridMode grid = GridMode::quantile;
    std::vector<bool> subset;  // empty: every row
};

/// Grid for a partial curve: npts quantile-spaced (levels k/(npts-1)) or
/// range-spaced points, ties removed; booleans always use {0, 1}. Throws
/// DegenerateError when fewer than two distinct points remain.
std::vector<double> partial_grid(std::span<const double> values, FeatureKind kind, std::size_t npts, GridMode mode);

/// Mean ensemble prediction over `rows` with feature `xvar` overridden to
/// each grid value. `grid` must be strictly increasing.
///
/// Each tree is walked once per call: rows are partitioned at splits on
/// other features while the grid range is partitioned at splits on `xvar`,
/// so the cost grows with tree size rather than grid size x rows.
std::vector<double> partial_values(const Forest& forest, const ColumnView& x, std::size_t xvar,
                                   std::span<const double> grid, std::span<const std::uint32_t> rows);

PartialData partial_dependence(const Forest& forest, const DataSet& data, const std::string& xvar,
                               const PartialOptions& options = {});

/// One curve per group, each on its own subset's grid. Empty groups are
/// skipped and reported in `warnings`.
PartialData partial_coplot(const Forest& forest, const DataSet& data, const std::string& xvar,
                           const GroupLabels& groups, std::size_t npts = 25, GridMode grid = GridMode::quantile);

struct SurfaceGrid {
    std::array<std::string, 3> names{"x", "y", "z"};
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<std::vector<double>> z;  // z[j][i] at (x_values[i], y_values[j])
};

struct SurfacePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// A partial curve over xvar computed with the second variable fixed at `y`.
struct SurfaceSlice {
    double y = 0.0;
    PartialData curve;
};

/// For each of ny grid values of yvar, override yvar on every row and take
/// the nx-point partial curve over xvar.
SurfaceGrid partial_surface(const Forest& forest, const DataSet& data, const std::string& xvar,
                            const std::string& yvar, std::size_t nx, std::size_t ny,
                            GridMode grid = GridMode::quantile);

/// Reshape long-form points into a grid sorted ascending on both axes.
/// Throws InvalidArgument listing every missing (x,y) cell or duplicate.
SurfaceGrid surface_matrix(std::span<const SurfacePoint> points, const std::array<std::string, 3>& names);
SurfaceGrid surface_matrix(std::span<const SurfaceSlice> slices, const std::array<std::string, 3>& names);

/// Long form, y-major (all x for the first y, then the next y).
std::vector<SurfacePoint> surface_points(const SurfaceGrid& grid);

}  // namespace arbor
