#include "arbor/table.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "arbor/csv.hpp"
#include "arbor/errors.hpp"

namespace arbor {

using nlohmann::json;
using csv::format_number;

std::size_t Table::column_index(std::string_view name) const {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw InvalidArgument("table has no column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
}

bool Table::has_column(std::string_view name) const {
    return std::find(header.begin(), header.end(), name) != header.end();
}

std::vector<std::string> Table::text(std::string_view name) const {
    const auto c = column_index(name);
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.at(c));
    return out;
}

std::vector<double> Table::numbers(std::string_view name) const {
    const auto c = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& cell = rows[i].at(c);
        double v = 0.0;
        if (cell == "NA") v = std::nan("");
        else if (!csv::parse_number(cell, v))
            throw LoadError("non-numeric cell '" + cell + "' in column " + std::string(name) + ", row " +
                            std::to_string(i + 1));
        out.push_back(v);
    }
    return out;
}

std::string Table::to_csv() const {
    std::string out = csv::join(header) + "\n";
    for (const auto& r : rows) out += csv::join(r) + "\n";
    return out;
}

Table Table::from_csv(std::string_view text) {
    auto records = csv::parse(text);
    if (records.empty()) throw LoadError("table has no header row");
    Table t;
    t.header = std::move(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].size() != t.header.size())
            throw LoadError("table row " + std::to_string(i) + " has " + std::to_string(records[i].size()) +
                            " cells, expected " + std::to_string(t.header.size()));
        t.rows.push_back(std::move(records[i]));
    }
    return t;
}

std::string Table::to_json() const {
    json arr = json::array();
    for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < header.size(); ++c) {
            double v = 0.0;
            if (csv::parse_number(r[c], v)) obj[header[c]] = v;
            else if (r[c] == "NA") obj[header[c]] = nullptr;
            else obj[header[c]] = r[c];
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

Table error_trace_table(const OobErrorTrace& trace) {
    Table t{{"ntree", "oob_mse", "rows_used", "partial"}, {}};
    for (std::size_t k = 0; k < trace.mse.size(); ++k)
        t.rows.push_back({std::to_string(k + 1), format_number(trace.mse[k]), std::to_string(trace.rows_used[k]),
                          trace.partial[k] ? "true" : "false"});
    return t;
}

Table oob_prediction_table(const OobPredictions& oob, std::span<const double> response) {
    Table t{{"row", "oob_prediction", "oob_trees", "response"}, {}};
    for (std::size_t i = 0; i < oob.prediction.size(); ++i)
        t.rows.push_back({std::to_string(i + 1), format_number(oob.prediction[i]), std::to_string(oob.tree_count[i]),
                          format_number(response[i])});
    return t;
}

Table vimp_table(const VimpTable& vimp) {
    Table t{{"variable", "vimp", "sign", "rank"}, {}};
    for (const auto& e : vimp.by_rank())
        t.rows.push_back({e.name, format_number(e.vimp), std::string(to_string(e.sign)), std::to_string(e.rank)});
    return t;
}

Table minimal_depth_table(const MinimalDepthSummary& depth) {
    Table t{{"variable", "mean_min_depth", "rank", "threshold", "selected"}, {}};
    for (const auto& e : depth.by_rank())
        t.rows.push_back({e.name, format_number(e.mean_min_depth), std::to_string(e.rank),
                          format_number(depth.threshold), e.mean_min_depth < depth.threshold ? "true" : "false"});
    return t;
}

Table rank_comparison_table(const std::vector<RankRow>& rows) {
    Table t{{"variable", "vimp_rank", "depth_rank", "vimp_sign"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.name, std::to_string(r.vimp_rank), std::to_string(r.depth_rank),
                          std::string(to_string(r.vimp_sign))});
    return t;
}

Table interaction_table(const InteractionMatrix& matrix) {
    Table t;
    t.header.push_back("variable");
    t.header.insert(t.header.end(), matrix.names.begin(), matrix.names.end());
    for (std::size_t i = 0; i < matrix.names.size(); ++i) {
        std::vector<std::string> row{matrix.names[i]};
        for (double v : matrix.values[i]) row.push_back(format_number(v));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table dependence_table(const DependenceData& dep) {
    Table t;
    t.header = dep.xvars;
    t.header.push_back("oob_prediction");
    const bool grouped = !dep.group_label.empty();
    if (grouped) t.header.push_back("group");
    for (std::size_t i = 0; i < dep.rows(); ++i) {
        std::vector<std::string> row;
        for (const auto& col : dep.columns) row.push_back(format_number(col[i]));
        row.push_back(format_number(dep.oob_prediction[i]));
        if (grouped) row.push_back(dep.group_label[i]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table partial_table(const PartialData& partial) {
    Table t{{"group", "x", "yhat"}, {}};
    for (const auto& pt : partial.points) t.rows.push_back({pt.group, format_number(pt.x), format_number(pt.yhat)});
    return t;
}

Table partial_panel_table(const std::vector<PartialData>& partials) {
    Table t{{"variable", "group", "x", "yhat"}, {}};
    for (const auto& p : partials)
        for (const auto& pt : p.points)
            t.rows.push_back({p.xvar, pt.group, format_number(pt.x), format_number(pt.yhat)});
    return t;
}

Table surface_table(const SurfaceGrid& grid) {
    Table t{{grid.names[0], grid.names[1], grid.names[2]}, {}};
    for (const auto& pt : surface_points(grid))
        t.rows.push_back({format_number(pt.x), format_number(pt.y), format_number(pt.z)});
    return t;
}

SurfaceGrid surface_from_table(const Table& table) {
    if (table.header.size() != 3) throw InvalidArgument("surface table needs exactly three columns");
    const auto xs = table.numbers(table.header[0]);
    const auto ys = table.numbers(table.header[1]);
    const auto zs = table.numbers(table.header[2]);
    std::vector<SurfacePoint> points;
    for (std::size_t k = 0; k < xs.size(); ++k) points.push_back({xs[k], ys[k], zs[k]});
    return surface_matrix(std::span<const SurfacePoint>(points), {table.header[0], table.header[1], table.header[2]});
}

std::string vimp_json(const VimpTable& vimp) {
    json doc;
    doc["baseline_mse"] = vimp.baseline_mse;
    doc["permutations"] = vimp.permutations;
    json entries = json::array();
    for (const auto& e : vimp.by_rank())
        entries.push_back({{"variable", e.name}, {"vimp", e.vimp}, {"sign", to_string(e.sign)}, {"rank", e.rank}});
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string minimal_depth_json(const MinimalDepthSummary& depth) {
    json doc;
    doc["threshold"] = depth.threshold;
    doc["topvars"] = depth.topvars;
    json entries = json::array();
    for (const auto& e : depth.by_rank())
        entries.push_back({{"variable", e.name}, {"mean_min_depth", e.mean_min_depth}, {"rank", e.rank}});
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string interaction_json(const InteractionMatrix& matrix) {
    json doc;
    doc["names"] = matrix.names;
    doc["values"] = matrix.values;
    doc["subtree_counts"] = matrix.subtree_counts;
    return doc.dump(2) + "\n";
}

std::string surface_json(const SurfaceGrid& grid) {
    json doc;
    doc["names"] = grid.names;
    doc["x_values"] = grid.x_values;
    doc["y_values"] = grid.y_values;
    doc["z"] = grid.z;
    return doc.dump(2) + "\n";
}

}  // namespace arbor
