#include "arbor/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "arbor/csv.hpp"
#include "arbor/errors.hpp"
#include "arbor/parallel.hpp"

namespace arbor {

DependenceData variable_dependence(const Forest& forest, const DataSet& data, const std::vector<std::string>& xvars) {
    require_training_shape(forest, data);
    DependenceData dep;
    for (const auto& name : xvars) {
        const auto col = data.column(data.feature_index(name));
        dep.xvars.push_back(name);
        dep.columns.emplace_back(col.begin(), col.end());
    }
    dep.oob_prediction = predict_oob(forest, data).prediction;
    return dep;
}

void attach_groups(DependenceData& dep, const GroupLabels& groups, const std::string& prefix) {
    if (groups.labels.size() != dep.rows()) throw InvalidArgument("group labels do not cover every row");
    dep.group_label.clear();
    for (auto g : groups.labels) dep.group_label.push_back(prefix + groups.interval_text.at(g));
}

GridMode parse_grid_mode(std::string_view text) {
    if (text == "quantile") return GridMode::quantile;
    if (text == "range") return GridMode::range;
    throw InvalidArgument("grid mode must be quantile or range, got " + std::string(text));
}

std::string_view to_string(GridMode mode) { return mode == GridMode::range ? "range" : "quantile"; }

std::vector<double> partial_grid(std::span<const double> values, FeatureKind kind, std::size_t npts, GridMode mode) {
    if (npts < 2) throw InvalidArgument("npts must be >= 2");
    if (values.empty()) throw InvalidArgument("partial grid over no rows");
    if (kind == FeatureKind::boolean) return {0.0, 1.0};

    if (mode == GridMode::quantile) return quantile_pts(values, npts, false).boundaries;

    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (!(*lo < *hi)) throw DegenerateError("degenerate grid: feature is constant");
    std::vector<double> grid;
    const double step = (*hi - *lo) / static_cast<double>(npts - 1);
    for (std::size_t k = 0; k < npts; ++k) {
        const double v = k + 1 == npts ? *hi : *lo + step * static_cast<double>(k);
        if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    return grid;
}

namespace {

class PartialWalker {
public:
    PartialWalker(const ColumnView& x, std::size_t xvar, std::span<const double> grid, std::vector<double>& diff)
        : x_(x), xvar_(xvar), grid_(grid), diff_(diff) {}

    void walk(const Tree& tree, std::uint32_t id, std::span<std::uint32_t> rows, std::size_t glo, std::size_t ghi) {
        const Node& node = tree.nodes[id];
        if (node.is_terminal()) {
            const double mass = node.prediction * static_cast<double>(rows.size());
            diff_[glo] += mass;
            diff_[ghi] -= mass;
            return;
        }
        if (node.split_feature == xvar_) {
            const auto cut = static_cast<std::size_t>(
                std::upper_bound(grid_.begin() + glo, grid_.begin() + ghi, node.split_value) - grid_.begin());
            if (cut > glo) walk(tree, node.left, rows, glo, cut);
            if (cut < ghi) walk(tree, node.right, rows, cut, ghi);
            return;
        }
        auto mid = std::partition(rows.begin(), rows.end(), [&](std::uint32_t r) {
            return x_(r, node.split_feature) <= node.split_value;
        });
        const auto left = static_cast<std::size_t>(mid - rows.begin());
        if (left > 0) walk(tree, node.left, rows.first(left), glo, ghi);
        if (left < rows.size()) walk(tree, node.right, rows.subspan(left), glo, ghi);
    }

private:
    const ColumnView& x_;
    std::size_t xvar_;
    std::span<const double> grid_;
    std::vector<double>& diff_;
};

}  // namespace

std::vector<double> partial_values(const Forest& forest, const ColumnView& x, std::size_t xvar,
                                   std::span<const double> grid, std::span<const std::uint32_t> rows) {
    if (x.features() != forest.p()) throw InvalidArgument("feature count differs from forest");
    if (xvar >= forest.p()) throw InvalidArgument("xvar index out of range");
    if (grid.empty()) throw InvalidArgument("empty grid");
    if (rows.empty()) throw InvalidArgument("partial dependence over no rows");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1])) throw InvalidArgument("grid must be strictly increasing");
    for (auto r : rows)
        if (r >= x.rows()) throw InvalidArgument("row index out of range");

    std::vector<double> diff(grid.size() + 1, 0.0);
    std::vector<std::uint32_t> scratch(rows.begin(), rows.end());
    PartialWalker walker(x, xvar, grid, diff);
    for (const auto& tree : forest.trees) {
        std::copy(rows.begin(), rows.end(), scratch.begin());
        walker.walk(tree, tree.root, scratch, 0, grid.size());
    }

    const double denom = static_cast<double>(rows.size()) * static_cast<double>(forest.ntree());
    std::vector<double> yhat(grid.size());
    double running = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        running += diff[k];
        yhat[k] = running / denom;
    }
    return yhat;
}

namespace {

std::vector<std::uint32_t> subset_rows(const std::vector<bool>& subset, std::size_t n) {
    std::vector<std::uint32_t> rows;
    if (subset.empty()) {
        rows.resize(n);
        std::iota(rows.begin(), rows.end(), 0u);
        return rows;
    }
    if (subset.size() != n) throw InvalidArgument("subset mask length differs from row count");
    for (std::uint32_t i = 0; i < n; ++i)
        if (subset[i]) rows.push_back(i);
    if (rows.empty()) throw InvalidArgument("subset selects no rows");
    return rows;
}

PartialData partial_on_rows(const Forest& forest, const DataSet& data, const ColumnView& x, std::size_t xvar,
                            std::span<const std::uint32_t> rows, std::size_t npts, GridMode mode,
                            const std::string& group) {
    std::vector<double> values;
    values.reserve(rows.size());
    for (auto r : rows) values.push_back(x(r, xvar));
    const auto grid = partial_grid(values, data.feature_kinds()[xvar], npts, mode);
    const auto yhat = partial_values(forest, x, xvar, grid, rows);

    PartialData out;
    out.xvar = data.feature_names()[xvar];
    out.npts = grid.size();
    for (std::size_t k = 0; k < grid.size(); ++k) out.points.push_back({grid[k], yhat[k], group});
    return out;
}

}  // namespace

PartialData partial_dependence(const Forest& forest, const DataSet& data, const std::string& xvar,
                               const PartialOptions& options) {
    require_training_shape(forest, data);
    const std::size_t xi = data.feature_index(xvar);
    const auto rows = subset_rows(options.subset, data.n());
    return partial_on_rows(forest, data, ColumnView(data), xi, rows, options.npts, options.grid, "");
}

PartialData partial_coplot(const Forest& forest, const DataSet& data, const std::string& xvar,
                           const GroupLabels& groups, std::size_t npts, GridMode grid) {
    require_training_shape(forest, data);
    const std::size_t xi = data.feature_index(xvar);
    if (groups.labels.size() != data.n()) throw InvalidArgument("group labels do not cover every row");

    std::vector<std::vector<std::uint32_t>> members(groups.groups());
    for (std::uint32_t i = 0; i < groups.labels.size(); ++i) members.at(groups.labels[i]).push_back(i);

    const ColumnView x(data);
    std::vector<PartialData> curves(members.size());
    parallel_for(members.size(), [&](std::size_t g) {
        if (!members[g].empty())
            curves[g] = partial_on_rows(forest, data, x, xi, members[g], npts, grid, groups.interval_text[g]);
    });

    PartialData out;
    out.xvar = xvar;
    out.npts = npts;
    for (std::size_t g = 0; g < members.size(); ++g) {
        if (members[g].empty()) {
            out.warnings.push_back("group " + groups.interval_text[g] + " has no rows; skipped");
            continue;
        }
        out.points.insert(out.points.end(), curves[g].points.begin(), curves[g].points.end());
    }
    return out;
}

SurfaceGrid partial_surface(const Forest& forest, const DataSet& data, const std::string& xvar,
                            const std::string& yvar, std::size_t nx, std::size_t ny, GridMode grid) {
    require_training_shape(forest, data);
    const std::size_t xi = data.feature_index(xvar);
    const std::size_t yi = data.feature_index(yvar);
    if (xi == yi) throw InvalidArgument("surface needs two distinct variables");
    if (nx < 2 || ny < 2) throw InvalidArgument("surface grid needs nx, ny >= 2");

    const auto y_grid = partial_grid(data.column(yi), data.feature_kinds()[yi], ny, grid);
    const ColumnView base(data);
    std::vector<SurfaceSlice> slices(y_grid.size());
    parallel_for(y_grid.size(), [&](std::size_t j) {
        // private overridden column per work unit
        const std::vector<double> fixed(data.n(), y_grid[j]);
        const ColumnView x = base.with_column(yi, fixed);
        std::vector<std::uint32_t> rows(data.n());
        std::iota(rows.begin(), rows.end(), 0u);
        slices[j].y = y_grid[j];
        slices[j].curve = partial_on_rows(forest, data, x, xi, rows, nx, grid, "");
    });
    return surface_matrix(std::span<const SurfaceSlice>(slices), {xvar, yvar, "yhat"});
}

SurfaceGrid surface_matrix(std::span<const SurfacePoint> points, const std::array<std::string, 3>& names) {
    std::vector<double> xs, ys;
    for (const auto& pt : points) {
        xs.push_back(pt.x);
        ys.push_back(pt.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (xs.empty() || ys.empty()) throw InvalidArgument("surface has no points");

    SurfaceGrid grid;
    grid.names = names;
    grid.x_values = xs;
    grid.y_values = ys;
    grid.z.assign(ys.size(), std::vector<double>(xs.size(), std::nan("")));
    std::vector<std::vector<bool>> filled(ys.size(), std::vector<bool>(xs.size(), false));

    auto index_of = [](const std::vector<double>& axis, double v) {
        return static_cast<std::size_t>(std::lower_bound(axis.begin(), axis.end(), v) - axis.begin());
    };
    std::string duplicates;
    for (const auto& pt : points) {
        const auto i = index_of(xs, pt.x);
        const auto j = index_of(ys, pt.y);
        if (filled[j][i]) duplicates += " (" + csv::format_number(pt.x) + "," + csv::format_number(pt.y) + ")";
        filled[j][i] = true;
        grid.z[j][i] = pt.z;
    }
    if (!duplicates.empty()) throw InvalidArgument("duplicate surface cells:" + duplicates);

    std::string holes;
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (!filled[j][i]) holes += " (" + csv::format_number(xs[i]) + "," + csv::format_number(ys[j]) + ")";
    if (!holes.empty()) throw InvalidArgument("incomplete surface grid, missing cells:" + holes);
    return grid;
}

SurfaceGrid surface_matrix(std::span<const SurfaceSlice> slices, const std::array<std::string, 3>& names) {
    std::vector<SurfacePoint> points;
    for (const auto& slice : slices)
        for (const auto& pt : slice.curve.points) points.push_back({pt.x, slice.y, pt.yhat});
    return surface_matrix(std::span<const SurfacePoint>(points), names);
}

std::vector<SurfacePoint> surface_points(const SurfaceGrid& grid) {
    std::vector<SurfacePoint> out;
    for (std::size_t j = 0; j < grid.y_values.size(); ++j)
        for (std::size_t i = 0; i < grid.x_values.size(); ++i)
            out.push_back({grid.x_values[i], grid.y_values[j], grid.z[j][i]});
    return out;
}

}  // namespace arbor
