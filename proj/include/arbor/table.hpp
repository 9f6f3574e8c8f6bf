#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arbor/dependence.hpp"
#include "arbor/diagnostics.hpp"
#include "arbor/forest.hpp"

namespace arbor {

/// Text table with a header row: the interchange format between the
/// analysis code and the figures. Figures are always drawn from a Table
/// parsed back from its CSV, so `render` on an emitted CSV reproduces the
/// same SVG.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(std::string_view name) const;  // throws InvalidArgument
    bool has_column(std::string_view name) const;
    std::vector<std::string> text(std::string_view name) const;
    /// Throws LoadError on a non-numeric cell; "NA" becomes NaN.
    std::vector<double> numbers(std::string_view name) const;

    std::string to_csv() const;
    static Table from_csv(std::string_view text);
    /// Array of row objects; cells that parse as numbers are emitted as numbers.
    std::string to_json() const;
};

Table error_trace_table(const OobErrorTrace& trace);
Table oob_prediction_table(const OobPredictions& oob, std::span<const double> response);
Table vimp_table(const VimpTable& vimp);
Table minimal_depth_table(const MinimalDepthSummary& depth);
Table rank_comparison_table(const std::vector<RankRow>& rows);
/// Header: "variable", then one column per feature; one row per feature.
Table interaction_table(const InteractionMatrix& matrix);
/// xvar columns, then "oob_prediction", then "group" when grouped.
Table dependence_table(const DependenceData& dep);
/// Columns group, x, yhat.
Table partial_table(const PartialData& partial);
/// Columns variable, group, x, yhat.
Table partial_panel_table(const std::vector<PartialData>& partials);
/// Long form x, y, z (y-major).
Table surface_table(const SurfaceGrid& grid);
SurfaceGrid surface_from_table(const Table& table);

std::string vimp_json(const VimpTable& vimp);
std::string minimal_depth_json(const MinimalDepthSummary& depth);
std::string interaction_json(const InteractionMatrix& matrix);
std::string surface_json(const SurfaceGrid& grid);

}  // namespace arbor
