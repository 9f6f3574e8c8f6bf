#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

enum class FeatureKind { continuous, boolean };

std::string_view to_string(FeatureKind kind);

/// Column-major training table with a numeric response.
///
/// Boolean features are stored as 0.0 / 1.0. The constructor validates the
/// shape invariants (equal column lengths, n >= 2, p >= 1, unique names, no
/// NaN/inf, boolean columns restricted to {0, 1}) and throws InvalidArgument
/// on violation, so every DataSet in circulation is well formed.
class DataSet {
public:
    DataSet(std::vector<std::string> feature_names, std::vector<FeatureKind> feature_kinds,
            std::vector<std::vector<double>> columns, std::string response_name,
            std::vector<double> response);

    std::size_t n() const { return response_.size(); }
    std::size_t p() const { return columns_.size(); }

    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::vector<FeatureKind>& feature_kinds() const { return feature_kinds_; }
    const std::string& response_name() const { return response_name_; }

    std::span<const double> column(std::size_t feature) const { return columns_.at(feature); }
    const std::vector<std::vector<double>>& columns() const { return columns_; }
    std::span<const double> response() const { return response_; }

    std::optional<std::size_t> find_feature(std::string_view name) const;
    /// Like find_feature but throws InvalidArgument for an unknown name.
    std::size_t feature_index(std::string_view name) const;

private:
    std::vector<std::string> feature_names_;
    std::vector<FeatureKind> feature_kinds_;
    std::vector<std::vector<double>> columns_;
    std::string response_name_;
    std::vector<double> response_;
};

/// Parses CSV text with a header row. Columns holding only {0,1} or
/// {true,false,TRUE,FALSE} become boolean features; everything else must be
/// numeric. `source` names the input in error messages.
DataSet parse_csv(std::string_view text, std::string_view response_name, std::string_view source = "<memory>");

DataSet load_csv(const std::string& path, std::string_view response_name);

/// Inverse of parse_csv: features in order, response last, shortest
/// round-trip decimals, booleans as 0/1.
std::string to_csv(const DataSet& data);
void write_csv(const DataSet& data, const std::string& path);

/// Embedded Boston housing table: n=506, p=13, response medv, chas boolean.
DataSet builtin_boston();

/// Break points for conditioning groups. `requested_groups` records what the
/// caller asked for; after tie deduplication `groups()` may be smaller.
struct IntervalBreaks {
    std::vector<double> boundaries;
    std::size_t requested_groups = 0;

    std::size_t groups() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
};

struct GroupLabels {
    std::vector<std::size_t> labels;         // per row, in [0, groups)
    std::vector<std::string> interval_text;  // per group, "(lo,hi]"

    std::size_t groups() const { return interval_text.size(); }
    std::vector<std::size_t> group_sizes() const;
};

/// Empirical quantile with linear interpolation between order statistics
/// (Hyndman-Fan type 7). `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double level);

/// Quantile break points.
///
/// intervals=true: groups+1 boundaries at levels k/groups, lowest nudged down
/// by max(1e-9, 1e-9*|min|) so the minimum lands in the first (lo,hi]
/// interval. intervals=false: `groups` points at levels k/(groups-1), no
/// nudge. Ties are removed in both modes. Throws DegenerateError when fewer
/// than two distinct points remain.
IntervalBreaks quantile_pts(std::span<const double> values, std::size_t groups, bool intervals);

/// Right-closed interval assignment. Throws InvalidArgument naming the first
/// row outside (boundaries.front(), boundaries.back()].
GroupLabels cut_intervals(std::span<const double> values, const IntervalBreaks& breaks);

}  // namespace arbor
