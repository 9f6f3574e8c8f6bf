#include "arbor/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "arbor/csv.hpp"
#include "arbor/errors.hpp"
#include "boston_data.hpp"

namespace arbor {

std::string_view to_string(FeatureKind kind) {
    return kind == FeatureKind::boolean ? "boolean" : "continuous";
}

DataSet::DataSet(std::vector<std::string> feature_names, std::vector<FeatureKind> feature_kinds,
                 std::vector<std::vector<double>> columns, std::string response_name,
                 std::vector<double> response)
    : feature_names_(std::move(feature_names)),
      feature_kinds_(std::move(feature_kinds)),
      columns_(std::move(columns)),
      response_name_(std::move(response_name)),
      response_(std::move(response)) {
    const std::size_t p = columns_.size();
    if (p < 1) throw InvalidArgument("data set needs at least one feature");
    if (feature_names_.size() != p || feature_kinds_.size() != p)
        throw InvalidArgument("feature names/kinds do not match column count");
    if (response_.size() < 2) throw InvalidArgument("data set needs at least two rows");

    std::unordered_set<std::string> seen;
    for (const auto& name : feature_names_) {
        if (name == response_name_) throw InvalidArgument("feature name collides with response: " + name);
        if (!seen.insert(name).second) throw InvalidArgument("duplicate feature name: " + name);
    }
    for (std::size_t j = 0; j < p; ++j) {
        if (columns_[j].size() != response_.size())
            throw InvalidArgument("column " + feature_names_[j] + " has " + std::to_string(columns_[j].size()) +
                                  " entries, expected " + std::to_string(response_.size()));
        for (std::size_t i = 0; i < columns_[j].size(); ++i) {
            const double v = columns_[j][i];
            if (!std::isfinite(v))
                throw InvalidArgument("non-finite value at row " + std::to_string(i + 1) + ", column " +
                                      feature_names_[j]);
            if (feature_kinds_[j] == FeatureKind::boolean && v != 0.0 && v != 1.0)
                throw InvalidArgument("boolean column " + feature_names_[j] + " holds " + csv::format_number(v));
        }
    }
    for (std::size_t i = 0; i < response_.size(); ++i)
        if (!std::isfinite(response_[i]))
            throw InvalidArgument("non-finite response at row " + std::to_string(i + 1));
}

std::optional<std::size_t> DataSet::find_feature(std::string_view name) const {
    auto it = std::find(feature_names_.begin(), feature_names_.end(), name);
    if (it == feature_names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - feature_names_.begin());
}

std::size_t DataSet::feature_index(std::string_view name) const {
    if (auto idx = find_feature(name)) return *idx;
    throw InvalidArgument("unknown feature: " + std::string(name));
}

namespace {

std::optional<double> parse_boolean_token(std::string_view s) {
    if (s == "true" || s == "TRUE") return 1.0;
    if (s == "false" || s == "FALSE") return 0.0;
    return std::nullopt;
}

}  // namespace

DataSet parse_csv(std::string_view text, std::string_view response_name, std::string_view source) {
    const std::string where(source);
    auto records = csv::parse(text);
    if (records.empty()) throw LoadError(where + ": missing header row");
    const csv::Record header = records.front();
    const std::size_t width = header.size();

    std::size_t response_col = width;
    for (std::size_t j = 0; j < width; ++j) {
        if (header[j].empty()) throw LoadError(where + ": empty column name at position " + std::to_string(j + 1));
        if (header[j] == response_name) response_col = j;
    }
    if (response_col == width)
        throw LoadError(where + ": response column '" + std::string(response_name) + "' not in header");

    const std::size_t n = records.size() - 1;
    std::vector<std::vector<double>> values(width, std::vector<double>(n));
    std::vector<bool> all_binary(width, true);
    std::vector<bool> has_token(width, false);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& rec = records[i + 1];
        const std::size_t row = i + 2;  // 1-based file line, header is line 1
        if (rec.size() != width)
            throw LoadError(where + ": line " + std::to_string(row) + " has " + std::to_string(rec.size()) +
                            " fields, expected " + std::to_string(width));
        for (std::size_t j = 0; j < width; ++j) {
            const std::string& cell = rec[j];
            if (cell.empty() || cell == "NA")
                throw LoadError(where + ": missing value at line " + std::to_string(row) + ", column " + header[j]);
            double v = 0.0;
            if (csv::parse_number(cell, v)) {
                if (!std::isfinite(v))
                    throw LoadError(where + ": non-finite value at line " + std::to_string(row) + ", column " +
                                    header[j]);
                if (v != 0.0 && v != 1.0) all_binary[j] = false;
            } else if (auto b = parse_boolean_token(cell); b && j != response_col) {
                v = *b;
                has_token[j] = true;
            } else {
                throw LoadError(where + ": unparsable value '" + cell + "' at line " + std::to_string(row) +
                                ", column " + header[j]);
            }
            values[j][i] = v;
        }
    }

    std::vector<std::string> names;
    std::vector<FeatureKind> kinds;
    std::vector<std::vector<double>> columns;
    for (std::size_t j = 0; j < width; ++j) {
        if (j == response_col) continue;
        if (has_token[j] && !all_binary[j])
            throw LoadError(where + ": column " + header[j] + " mixes boolean tokens with non-binary numbers");
        names.push_back(header[j]);
        kinds.push_back(all_binary[j] ? FeatureKind::boolean : FeatureKind::continuous);
        columns.push_back(std::move(values[j]));
    }
    try {
        return DataSet(std::move(names), std::move(kinds), std::move(columns), header[response_col],
                       std::move(values[response_col]));
    } catch (const InvalidArgument& e) {
        throw LoadError(where + ": " + e.what());
    }
}

DataSet load_csv(const std::string& path, std::string_view response_name) {
    return parse_csv(csv::read_file(path), response_name, path);
}

std::string to_csv(const DataSet& data) {
    std::string out;
    csv::Record header = data.feature_names();
    header.push_back(data.response_name());
    out += csv::join(header) + "\n";
    for (std::size_t i = 0; i < data.n(); ++i) {
        csv::Record rec;
        rec.reserve(data.p() + 1);
        for (std::size_t j = 0; j < data.p(); ++j) rec.push_back(csv::format_number(data.column(j)[i]));
        rec.push_back(csv::format_number(data.response()[i]));
        out += csv::join(rec) + "\n";
    }
    return out;
}

void write_csv(const DataSet& data, const std::string& path) { csv::write_file(path, to_csv(data)); }

DataSet builtin_boston() { return parse_csv(detail::kBostonCsv, "medv", "builtin:boston"); }

std::vector<std::size_t> GroupLabels::group_sizes() const {
    std::vector<std::size_t> sizes(groups(), 0);
    for (auto l : labels) ++sizes.at(l);
    return sizes;
}

double quantile_sorted(std::span<const double> sorted, double level) {
    if (sorted.empty()) throw InvalidArgument("quantile of empty vector");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * level;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    if (frac == 0.0) return sorted[lo];
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

IntervalBreaks quantile_pts(std::span<const double> values, std::size_t groups, bool intervals) {
    if (groups < 2) throw InvalidArgument("quantile_pts needs groups >= 2");
    if (values.empty()) throw InvalidArgument("quantile_pts on empty vector");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    const std::size_t points = intervals ? groups + 1 : groups;
    const double denom = static_cast<double>(points - 1);
    IntervalBreaks breaks;
    breaks.requested_groups = groups;
    for (std::size_t k = 0; k < points; ++k) {
        const double level = static_cast<double>(k) / denom;
        const double q = quantile_sorted(sorted, level);
        if (breaks.boundaries.empty() || q > breaks.boundaries.back()) breaks.boundaries.push_back(q);
    }
    if (breaks.boundaries.size() < 2)
        throw DegenerateError("degenerate stratification: fewer than two distinct quantile points");
    if (intervals) {
        double& lowest = breaks.boundaries.front();
        lowest -= std::max(1e-9, 1e-9 * std::abs(lowest));
    }
    return breaks;
}

namespace {

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace

GroupLabels cut_intervals(std::span<const double> values, const IntervalBreaks& breaks) {
    const auto& b = breaks.boundaries;
    if (b.size() < 2) throw InvalidArgument("cut_intervals needs at least two boundaries");
    for (std::size_t k = 1; k < b.size(); ++k)
        if (!(b[k] > b[k - 1])) throw InvalidArgument("interval boundaries must be strictly increasing");

    GroupLabels out;
    out.labels.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!(v > b.front() && v <= b.back()))
            throw InvalidArgument("value " + csv::format_number(v) + " at row " + std::to_string(i + 1) +
                                  " lies outside (" + csv::format_number(b.front()) + "," +
                                  csv::format_number(b.back()) + "]");
        // first boundary >= v closes the interval
        auto it = std::lower_bound(b.begin() + 1, b.end(), v);
        out.labels[i] = static_cast<std::size_t>(it - b.begin()) - 1;
    }

    // Three significant digits unless that makes neighbouring labels collide.
    for (int digits = 3; digits <= 17; ++digits) {
        std::vector<std::string> text(b.size());
        std::transform(b.begin(), b.end(), text.begin(), [&](double v) { return format_sig(v, digits); });
        if (std::set<std::string>(text.begin(), text.end()).size() == text.size() || digits == 17) {
            out.interval_text.clear();
            for (std::size_t k = 0; k + 1 < b.size(); ++k)
                out.interval_text.push_back("(" + text[k] + "," + text[k + 1] + "]");
            break;
        }
    }
    return out;
}

}  // namespace arbor
