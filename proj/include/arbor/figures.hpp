#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/table.hpp"

namespace arbor {

enum class FigureKind {
    error,          // line: OOB error against forest size
    predictions,    // boxplot_summary: OOB predictions
    vimp,           // bar: importance sorted descending, filled by sign
    mindepth,       // bar: mean minimal depth with threshold line
    compare,        // scatter_panel: VIMP rank against depth rank
    interact,       // scatter_panel: one panel per interaction-matrix row
    variable,       // scatter_panel / boxplot_summary: per-observation dependence, faceted by group if present
    partial,        // line: one curve per group
    partial_panel,  // scatter_panel: one partial curve per variable
    contour,        // contour: iso-lines of a surface table
};

FigureKind parse_figure_kind(std::string_view text);
std::string_view to_string(FigureKind kind);
/// The mark family a figure is drawn with (bar, line, scatter_panel, ...).
std::string_view mark_kind(FigureKind kind);

struct RenderOptions {
    std::string response_name = "medv";
    double level_step = 0.5;  // contour spacing in response units
};

/// Descriptive axis label for a Boston column, or the name itself.
std::string axis_label(std::string_view name);

/// Tukey boxplot summary: type-7 quartiles, whiskers at the most extreme
/// observations within 1.5 IQR of the box.
struct BoxStats {
    std::size_t n = 0;
    double q1 = 0, median = 0, q3 = 0;
    double lower_whisker = 0, upper_whisker = 0;
    std::vector<double> outliers;
};

BoxStats box_stats(std::span<const double> values);

/// SVG for `kind` drawn solely from `table`. Throws InvalidArgument when a
/// required column is missing.
std::string render_figure(FigureKind kind, const Table& table, const RenderOptions& options = {});

}  // namespace arbor
