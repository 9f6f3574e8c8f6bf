#include "arbor/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "arbor/contour.hpp"
#include "arbor/csv.hpp"
#include "arbor/errors.hpp"
#include "arbor/svg.hpp"

namespace arbor {

using svg::Document;
using svg::Frame;
using svg::Scale;
using svg::Style;

namespace {

struct KindName {
    FigureKind kind;
    std::string_view name;
    std::string_view mark;
};

constexpr KindName kKinds[] = {
    {FigureKind::error, "error", "line"},
    {FigureKind::predictions, "predictions", "boxplot_summary"},
    {FigureKind::vimp, "vimp", "bar"},
    {FigureKind::mindepth, "mindepth", "bar"},
    {FigureKind::compare, "compare", "scatter_panel"},
    {FigureKind::interact, "interact", "scatter_panel"},
    {FigureKind::variable, "variable", "scatter_panel"},
    {FigureKind::partial, "partial", "line"},
    {FigureKind::partial_panel, "partial_panel", "scatter_panel"},
    {FigureKind::contour, "contour", "contour"},
};

}  // namespace

FigureKind parse_figure_kind(std::string_view text) {
    for (const auto& k : kKinds)
        if (k.name == text) return k.kind;
    throw InvalidArgument("unknown figure kind: " + std::string(text));
}

std::string_view to_string(FigureKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.name;
    return "?";
}

std::string_view mark_kind(FigureKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.mark;
    return "?";
}

std::string axis_label(std::string_view name) {
    static const std::map<std::string, std::string, std::less<>> labels{
        {"crim", "Crime rate by town."},
        {"zn", "Proportion of residential land zoned for lots over 25,000 sq.ft."},
        {"indus", "Proportion of non-retail business acres per town."},
        {"chas", "Charles River (tract bounds river)."},
        {"nox", "Nitrogen oxides concentration (10 ppm)."},
        {"rm", "Number of rooms per dwelling."},
        {"age", "Proportion of units built prior to 1940."},
        {"dis", "Distances to Boston employment center."},
        {"rad", "Accessibility to highways."},
        {"tax", "Property-tax rate per $10,000."},
        {"ptratio", "Pupil-teacher ratio by town."},
        {"black", "Proportion of blacks by town."},
        {"lstat", "Lower status of the population (percent)."},
        {"medv", "Median value of homes ($1000s)."},
    };
    auto it = labels.find(name);
    return it == labels.end() ? std::string(name) : it->second;
}

BoxStats box_stats(std::span<const double> values) {
    std::vector<double> v;
    for (double x : values)
        if (std::isfinite(x)) v.push_back(x);
    if (v.empty()) throw InvalidArgument("boxplot of no finite values");
    std::sort(v.begin(), v.end());

    BoxStats s;
    s.n = v.size();
    s.q1 = quantile_sorted(v, 0.25);
    s.median = quantile_sorted(v, 0.5);
    s.q3 = quantile_sorted(v, 0.75);
    const double iqr = s.q3 - s.q1;
    const double lo_fence = s.q1 - 1.5 * iqr;
    const double hi_fence = s.q3 + 1.5 * iqr;
    s.lower_whisker = *std::find_if(v.begin(), v.end(), [&](double x) { return x >= lo_fence; });
    s.upper_whisker = *std::find_if(v.rbegin(), v.rend(), [&](double x) { return x <= hi_fence; });
    for (double x : v)
        if (x < lo_fence || x > hi_fence) s.outliers.push_back(x);
    return s;
}

namespace {

constexpr Frame kMainFrame{90, 40, 680, 490};
const Style kPointStyle{"none", "#377EB8", 1.0, "", 0.5};

struct Range {
    double lo = INFINITY, hi = -INFINITY;
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void add(std::span<const double> vs) {
        for (double v : vs) add(v);
    }
    Range padded(double frac = 0.04) const {
        if (!(lo <= hi)) return {0, 1};
        const double span = hi > lo ? hi - lo : std::max(1.0, std::abs(lo));
        return {lo - frac * span, hi + frac * span};
    }
};

Scale x_scale(const Frame& f, Range r) { return {r.lo, r.hi, f.left, f.right()}; }
Scale y_scale(const Frame& f, Range r) { return {r.lo, r.hi, f.bottom(), f.top}; }

void title(Document& doc, std::string_view text) { doc.text(svg::kWidth / 2, 22, text, "middle"); }

std::vector<std::string> distinct_in_order(const std::vector<std::string>& values) {
    std::vector<std::string> out;
    for (const auto& v : values)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

/// "(lo,hi]" labels, optionally prefixed, sorted by their lower bound when
/// every label parses; otherwise order of first appearance.
std::vector<std::string> ordered_groups(const std::vector<std::string>& labels) {
    auto groups = distinct_in_order(labels);
    std::vector<std::pair<double, std::string>> keyed;
    for (const auto& g : groups) {
        const auto open = g.find('(');
        const auto comma = g.find(',', open == std::string::npos ? 0 : open);
        double lo = 0;
        if (open == std::string::npos || comma == std::string::npos ||
            !csv::parse_number(std::string_view(g).substr(open + 1, comma - open - 1), lo))
            return groups;
        keyed.emplace_back(lo, g);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < groups.size(); ++k) groups[k] = keyed[k].second;
    return groups;
}

bool is_binary(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

double jitter(std::size_t i) {
    const double frac = std::fmod(static_cast<double>(i) * 0.6180339887498949, 1.0);
    return frac - 0.5;
}

void draw_box(Document& doc, const BoxStats& s, double center, double half_width, const Scale& y,
              const std::string& color) {
    const Style outline{"#333333", "none", 1.0, "", 1.0};
    doc.line(center, y(s.lower_whisker), center, y(s.q1), outline);
    doc.line(center, y(s.q3), center, y(s.upper_whisker), outline);
    doc.line(center - half_width / 2, y(s.lower_whisker), center + half_width / 2, y(s.lower_whisker), outline);
    doc.line(center - half_width / 2, y(s.upper_whisker), center + half_width / 2, y(s.upper_whisker), outline);
    doc.rect(center - half_width, y(s.q3), 2 * half_width, y(s.q1) - y(s.q3), {"#333333", color, 1.0, "", 0.6});
    doc.line(center - half_width, y(s.median), center + half_width, y(s.median), {"#000000", "none", 2.0, "", 1.0});
    for (double o : s.outliers) doc.circle(center, y(o), 2.5, {"#333333", "none", 1.0, "", 1.0});
}

std::string figure_error(const Table& t) {
    const auto ntree = t.numbers("ntree");
    const auto mse = t.numbers("oob_mse");
    Range xr, yr;
    xr.add(ntree);
    yr.add(mse);
    const Frame f = kMainFrame;
    const Scale x = x_scale(f, xr.padded(0.0)), y = y_scale(f, yr.padded());

    Document doc;
    title(doc, "OOB error convergence");
    draw_axes(doc, f, x, y, svg::nice_ticks(xr.lo, xr.hi), svg::nice_ticks(yr.padded().lo, yr.padded().hi),
              "Number of Trees", "OOB Error Rate");
    std::vector<std::array<double, 2>> pts;
    for (std::size_t k = 0; k < ntree.size(); ++k)
        if (std::isfinite(mse[k])) pts.push_back({x(ntree[k]), y(mse[k])});
    doc.polyline(pts, {"#377EB8", "none", 1.5, "", 1.0});
    return doc.str();
}

std::string figure_predictions(const Table& t, const RenderOptions& opt) {
    const auto pred = t.numbers("oob_prediction");
    const BoxStats s = box_stats(pred);
    Range yr;
    yr.add(pred);
    const Frame f = kMainFrame;
    const Range ypad = yr.padded();
    const Scale x{-1, 1, f.left, f.right()}, y = y_scale(f, ypad);

    Document doc;
    title(doc, "OOB predicted values");
    draw_axes(doc, f, x, y, {}, svg::nice_ticks(ypad.lo, ypad.hi), "", axis_label(opt.response_name));
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (std::isfinite(pred[i])) doc.circle(x(0.6 * jitter(i)), y(pred[i]), 2.0, kPointStyle);
    draw_box(doc, s, x(0), 0.15 * f.width, y, "#FFFFFF");
    return doc.str();
}

std::string figure_vimp(const Table& t) {
    auto names = t.text("variable");
    auto vimp = t.numbers("vimp");
    auto sign = t.text("sign");
    auto rank = t.numbers("rank");
    std::vector<std::size_t> order(names.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rank[a] < rank[b]; });

    Range xr;
    xr.add(0.0);
    xr.add(vimp);
    const Range xpad = xr.padded();
    const Frame f = kMainFrame;
    const Scale x = x_scale(f, xpad);
    const double band = f.height / static_cast<double>(std::max<std::size_t>(1, names.size()));

    Document doc;
    title(doc, "Variable importance (permutation)");
    draw_axes(doc, f, x, Scale{0, 1, f.bottom(), f.top}, svg::nice_ticks(xpad.lo, xpad.hi), {},
              "Variable Importance (increase in OOB MSE)", "");
    doc.line(x(0), f.top, x(0), f.bottom(), {"#999999", "none", 1.0, "", 1.0});
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto k = order[r];
        const double top = f.top + band * static_cast<double>(r) + 0.1 * band;
        const std::string fill = sign[k] == "positive" ? "#377EB8" : "#E41A1C";
        doc.text(f.left - 6, top + 0.4 * band + 4, names[k], "end");
        const double a = x(std::min(0.0, vimp[k])), b = x(std::max(0.0, vimp[k]));
        doc.rect(a, top, b - a, 0.8 * band, {"none", fill, 1.0, "", 1.0});
    }
    return doc.str();
}

std::string figure_mindepth(const Table& t) {
    auto names = t.text("variable");
    auto depth = t.numbers("mean_min_depth");
    auto rank = t.numbers("rank");
    auto threshold = t.numbers("threshold");
    std::vector<std::size_t> order(names.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rank[a] < rank[b]; });

    Range xr;
    xr.add(0.0);
    xr.add(depth);
    if (!threshold.empty()) xr.add(threshold.front());
    const Range xpad = xr.padded();
    const Frame f = kMainFrame;
    const Scale x = x_scale(f, xpad);
    const double band = f.height / static_cast<double>(std::max<std::size_t>(1, names.size()));

    Document doc;
    title(doc, "Minimal depth (most important at top)");
    draw_axes(doc, f, x, Scale{0, 1, f.bottom(), f.top}, svg::nice_ticks(xpad.lo, xpad.hi), {}, "Minimal Depth of a Variable",
              "");
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto k = order[r];
        const double cy = f.top + band * (static_cast<double>(r) + 0.5);
        doc.text(f.left - 6, cy + 4, names[k], "end");
        doc.line(x(0), cy, x(depth[k]), cy, {"#BBBBBB", "none", 1.0, "", 1.0});
        doc.circle(x(depth[k]), cy, 4, {"none", "#377EB8", 1.0, "", 1.0});
    }
    if (!threshold.empty()) {
        doc.line(x(threshold.front()), f.top, x(threshold.front()), f.bottom(), {"#000000", "none", 1.0, "6,4", 1.0});
        doc.text(x(threshold.front()) + 4, f.top + 12, "threshold " + csv::format_number(threshold.front()));
    }
    return doc.str();
}

std::string figure_compare(const Table& t) {
    auto names = t.text("variable");
    auto vr = t.numbers("vimp_rank");
    auto dr = t.numbers("depth_rank");
    auto sign = t.text("vimp_sign");
    const double p = static_cast<double>(names.size());
    const Frame f = kMainFrame;
    const Scale x = x_scale(f, {0.5, p + 0.5}), y{0.5, p + 0.5, f.top, f.bottom()};  // rank 1 at top

    Document doc;
    title(doc, "Minimal depth rank against VIMP rank");
    std::vector<double> ticks;
    for (double k = 1; k <= p; ++k) ticks.push_back(k);
    draw_axes(doc, f, x, y, ticks, ticks, "VIMP Rank", "Minimal Depth Rank");
    doc.line(x(0.5), y(0.5), x(p + 0.5), y(p + 0.5), {"#E41A1C", "none", 1.5, "6,4", 1.0});
    for (std::size_t k = 0; k < names.size(); ++k) {
        const std::string fill = sign[k] == "positive" ? "#377EB8" : "#E41A1C";
        doc.circle(x(vr[k]), y(dr[k]), 5, {"none", fill, 1.0, "", 1.0});
        doc.text(x(vr[k]) + 8, y(dr[k]) + 4, names[k]);
    }
    return doc.str();
}

std::string figure_interact(const Table& t) {
    auto rows = t.text("variable");
    std::vector<std::string> cols(t.header.begin() + 1, t.header.end());
    const auto frames = svg::panel_grid(rows.size(), 3);
    const double p = static_cast<double>(cols.size());

    Document doc;
    title(doc, "Minimal depth interactions (reference variable marked by red cross)");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Frame& f = frames[i];
        const Scale x = x_scale(f, {0.5, p + 0.5}), y = y_scale(f, {0.0, 1.05});
        draw_axes(doc, f, x, y, {}, {0.0, 0.5, 1.0}, "", "");
        doc.text(f.left + f.width / 2, f.top - 4, rows[i], "middle");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            double v = 0;
            if (!csv::parse_number(t.rows[i][j + 1], v)) throw LoadError("non-numeric interaction cell");
            const double cx = x(static_cast<double>(j + 1)), cy = y(v);
            if (cols[j] == rows[i]) {
                const Style cross{"#E41A1C", "none", 2.0, "", 1.0};
                doc.line(cx - 4, cy - 4, cx + 4, cy + 4, cross);
                doc.line(cx - 4, cy + 4, cx + 4, cy - 4, cross);
            } else {
                doc.circle(cx, cy, 2.5, {"none", "#377EB8", 1.0, "", 1.0});
            }
        }
    }
    return doc.str();
}

void scatter_panel(Document& doc, const Frame& f, std::span<const double> xs, std::span<const double> ys,
                   const Range& yr, std::string_view heading, std::string_view xlabel, std::string_view ylabel) {
    Range xr;
    xr.add(xs);
    const Range xpad = xr.padded();
    const Scale x = x_scale(f, xpad), y = y_scale(f, yr);
    draw_axes(doc, f, x, y, svg::nice_ticks(xpad.lo, xpad.hi, 3), svg::nice_ticks(yr.lo, yr.hi, 3), xlabel, ylabel);
    if (!heading.empty()) doc.text(f.left + f.width / 2, f.top - 4, heading, "middle");
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::isfinite(ys[i])) doc.circle(x(xs[i]), y(ys[i]), 1.8, kPointStyle);
}

void boolean_panel(Document& doc, const Frame& f, std::span<const double> xs, std::span<const double> ys,
                   const Range& yr, std::string_view heading, std::string_view ylabel) {
    const Scale x{-0.5, 1.5, f.left, f.right()}, y = y_scale(f, yr);
    draw_axes(doc, f, x, y, {}, svg::nice_ticks(yr.lo, yr.hi, 3), "", ylabel);
    doc.text(f.left + f.width / 2, f.top - 4, heading, "middle");
    for (int level = 0; level <= 1; ++level) {
        std::vector<double> v;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i] == level) v.push_back(ys[i]);
        doc.text(x(level), f.bottom() + 16, level ? "TRUE" : "FALSE", "middle");
        if (v.empty()) continue;
        draw_box(doc, box_stats(v), x(level), 0.18 * f.width, y, level ? "#FC8D62" : "#66C2A5");
    }
}

std::string figure_variable(const Table& t, const RenderOptions& opt) {
    const auto pred = t.numbers("oob_prediction");
    Range yr;
    yr.add(pred);
    const Range ypad = yr.padded();
    const std::string ylabel = axis_label(opt.response_name);
    Document doc;

    if (t.has_column("group")) {
        const std::string xvar = t.header.front();
        const auto xs = t.numbers(xvar);
        const auto labels = t.text("group");
        const auto groups = ordered_groups(labels);
        const auto frames = svg::panel_grid(groups.size(), 3);
        title(doc, "Variable coplot: " + axis_label(xvar));
        for (std::size_t g = 0; g < groups.size(); ++g) {
            std::vector<double> gx, gy;
            for (std::size_t i = 0; i < xs.size(); ++i)
                if (labels[i] == groups[g]) {
                    gx.push_back(xs[i]);
                    gy.push_back(pred[i]);
                }
            scatter_panel(doc, frames[g], gx, gy, ypad, groups[g], "", g % 3 == 0 ? opt.response_name : "");
        }
        return doc.str();
    }

    std::vector<std::string> xvars;
    for (const auto& h : t.header)
        if (h != "oob_prediction") xvars.push_back(h);
    if (xvars.empty()) {
        std::vector<double> zeros(pred.size(), 0.0);
        title(doc, "OOB predictions");
        scatter_panel(doc, kMainFrame, zeros, pred, ypad, "", "", ylabel);
        return doc.str();
    }
    const auto frames = xvars.size() == 1 ? std::vector<Frame>{kMainFrame} : svg::panel_grid(xvars.size(), 3);
    title(doc, "Variable dependence");
    for (std::size_t k = 0; k < xvars.size(); ++k) {
        const auto xs = t.numbers(xvars[k]);
        const std::string yl = xvars.size() == 1 ? ylabel : (k % 3 == 0 ? opt.response_name : "");
        if (is_binary(xs)) boolean_panel(doc, frames[k], xs, pred, ypad, xvars[k], yl);
        else scatter_panel(doc, frames[k], xs, pred, ypad, xvars[k], xvars.size() == 1 ? axis_label(xvars[k]) : "", yl);
    }
    return doc.str();
}

struct Curve {
    std::string name;
    std::vector<double> x, y;
};

std::vector<Curve> curves_by(const Table& t, std::string_view key) {
    const auto keys = t.text(key);
    const auto xs = t.numbers("x");
    const auto ys = t.numbers("yhat");
    std::vector<Curve> curves;
    for (const auto& name : distinct_in_order(keys)) {
        Curve c{name, {}, {}};
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == name) {
                c.x.push_back(xs[i]);
                c.y.push_back(ys[i]);
            }
        curves.push_back(std::move(c));
    }
    return curves;
}

void draw_curve(Document& doc, const Curve& c, const Scale& x, const Scale& y, const std::string& color) {
    std::vector<std::array<double, 2>> pts;
    for (std::size_t k = 0; k < c.x.size(); ++k) pts.push_back({x(c.x[k]), y(c.y[k])});
    doc.polyline(pts, {color, "none", 1.5, "", 1.0});
    for (const auto& p : pts) doc.circle(p[0], p[1], 2.5, {"none", color, 1.0, "", 1.0});
}

std::string figure_partial(const Table& t, const RenderOptions& opt) {
    auto curves = curves_by(t, "group");
    if (curves.size() > 1) {
        const auto order = ordered_groups(t.text("group"));
        std::stable_sort(curves.begin(), curves.end(), [&](const Curve& a, const Curve& b) {
            return std::find(order.begin(), order.end(), a.name) < std::find(order.begin(), order.end(), b.name);
        });
    }
    Range xr, yr;
    for (const auto& c : curves) {
        xr.add(c.x);
        yr.add(c.y);
    }
    const Frame f = kMainFrame;
    const Range xpad = xr.padded(), ypad = yr.padded();
    const Scale x = x_scale(f, xpad), y = y_scale(f, ypad);

    Document doc;
    title(doc, curves.size() > 1 ? "Partial dependence coplot" : "Partial dependence");
    draw_axes(doc, f, x, y, svg::nice_ticks(xpad.lo, xpad.hi), svg::nice_ticks(ypad.lo, ypad.hi), "",
              axis_label(opt.response_name));
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const std::string color = curves.size() > 1 ? svg::palette(k) : "#377EB8";
        draw_curve(doc, curves[k], x, y, color);
        if (curves.size() > 1) {
            const double ly = f.top + 14 + 16 * static_cast<double>(k);
            doc.rect(f.right() - 150, ly - 9, 10, 10, {"none", color, 1.0, "", 1.0});
            doc.text(f.right() - 135, ly, curves[k].name);
        }
    }
    return doc.str();
}

std::string figure_partial_panel(const Table& t, const RenderOptions& opt) {
    const auto curves = curves_by(t, "variable");
    Range yr;
    for (const auto& c : curves) yr.add(c.y);
    const Range ypad = yr.padded();
    const auto frames = svg::panel_grid(curves.size(), 3);

    Document doc;
    title(doc, "Partial dependence panels");
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const Frame& f = frames[k];
        Range xr;
        xr.add(curves[k].x);
        const Range xpad = xr.padded();
        const Scale x = x_scale(f, xpad), y = y_scale(f, ypad);
        draw_axes(doc, f, x, y, svg::nice_ticks(xpad.lo, xpad.hi, 3), svg::nice_ticks(ypad.lo, ypad.hi, 3), "",
                  k % 3 == 0 ? opt.response_name : "");
        doc.text(f.left + f.width / 2, f.top - 4, curves[k].name, "middle");
        draw_curve(doc, curves[k], x, y, "#377EB8");
    }
    return doc.str();
}

std::string figure_contour(const Table& t, const RenderOptions& opt) {
    const SurfaceGrid grid = surface_from_table(t);
    const auto lines = contour_lines(grid, opt.level_step);
    Range zr;
    for (const auto& row : grid.z) zr.add(row);

    const Frame f = kMainFrame;
    const Range xr{grid.x_values.front(), grid.x_values.back()};
    const Range yr{grid.y_values.front(), grid.y_values.back()};
    const Scale x = x_scale(f, xr), y = y_scale(f, yr);

    Document doc;
    title(doc, "Partial dependence contours of " + opt.response_name + " (step " + csv::format_number(opt.level_step) + ")");
    draw_axes(doc, f, x, y, svg::nice_ticks(xr.lo, xr.hi), svg::nice_ticks(yr.lo, yr.hi), axis_label(grid.names[0]),
              axis_label(grid.names[1]));
    for (const auto& line : lines) {
        std::vector<std::array<double, 2>> pts;
        for (const auto& p : line.points) pts.push_back({x(p[0]), y(p[1])});
        const double u = zr.hi > zr.lo ? (line.level - zr.lo) / (zr.hi - zr.lo) : 0.0;
        doc.polyline(pts, {svg::ramp(u), "none", 1.2, "", 1.0});
    }
    // level key
    const auto key_levels = svg::nice_ticks(zr.lo, zr.hi, 5);
    for (std::size_t k = 0; k < key_levels.size(); ++k) {
        const double u = zr.hi > zr.lo ? (key_levels[k] - zr.lo) / (zr.hi - zr.lo) : 0.0;
        const double ly = f.top + 14 + 16 * static_cast<double>(k);
        doc.line(f.right() - 70, ly - 4, f.right() - 50, ly - 4, {svg::ramp(u), "none", 3.0, "", 1.0});
        doc.text(f.right() - 45, ly, svg::tick_label(key_levels[k]));
    }
    return doc.str();
}

}  // namespace

std::string render_figure(FigureKind kind, const Table& table, const RenderOptions& options) {
    switch (kind) {
        case FigureKind::error: return figure_error(table);
        case FigureKind::predictions: return figure_predictions(table, options);
        case FigureKind::vimp: return figure_vimp(table);
        case FigureKind::mindepth: return figure_mindepth(table);
        case FigureKind::compare: return figure_compare(table);
        case FigureKind::interact: return figure_interact(table);
        case FigureKind::variable: return figure_variable(table, options);
        case FigureKind::partial: return figure_partial(table, options);
        case FigureKind::partial_panel: return figure_partial_panel(table, options);
        case FigureKind::contour: return figure_contour(table, options);
    }
    throw InvalidArgument("unhandled figure kind");
}

}  // namespace arbor
