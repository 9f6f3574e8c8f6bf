#include <doctest.h>

#include <cmath>
#include <regex>

#include <json.hpp>

#include "arbor/contour.hpp"
#include "arbor/diagnostics.hpp"
#include "arbor/errors.hpp"
#include "arbor/figures.hpp"
#include "arbor/table.hpp"

using namespace arbor;

namespace {

SurfaceGrid plane(std::size_t nx, std::size_t ny) {
    SurfaceGrid g;
    g.names = {"u", "v", "w"};
    for (std::size_t i = 0; i < nx; ++i) g.x_values.push_back(static_cast<double>(i) / (nx - 1));
    for (std::size_t j = 0; j < ny; ++j) g.y_values.push_back(2.0 * j / (ny - 1));
    for (double y : g.y_values) {
        g.z.emplace_back();
        for (double x : g.x_values) g.z.back().push_back(x + y);
    }
    return g;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

struct Fixture {
    DataSet data = builtin_boston();
    Forest forest;
    Fixture() {
        ForestConfig cfg;
        cfg.ntree = 60;
        cfg.seed = 3;
        forest = train(data, cfg);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

}  // namespace

TEST_CASE("contours of a plane lie on the analytic line") {
    const SurfaceGrid g = plane(21, 31);
    const double half_diag = 0.5 * std::hypot(1.0 / 20, 2.0 / 30);
    for (double c : {0.3, 1.0, 1.77, 2.5}) {
        const auto lines = marching_squares(g, c);
        REQUIRE(lines.size() == 1);
        CHECK_FALSE(lines[0].closed);
        for (const auto& p : lines[0].points) CHECK(std::abs(p[0] + p[1] - c) / std::sqrt(2.0) < half_diag);
    }
    CHECK(marching_squares(g, 5.0).empty());
}

TEST_CASE("a bump yields one closed contour") {
    SurfaceGrid g;
    for (int i = 0; i < 11; ++i) {
        g.x_values.push_back(i);
        g.y_values.push_back(i);
    }
    for (double y : g.y_values) {
        g.z.emplace_back();
        for (double x : g.x_values) g.z.back().push_back(-((x - 5) * (x - 5) + (y - 5) * (y - 5)));
    }
    const auto lines = marching_squares(g, -9.5);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].closed);
    for (const auto& p : lines[0].points) CHECK(std::hypot(p[0] - 5, p[1] - 5) == doctest::Approx(3.08).epsilon(0.06));
}

TEST_CASE("contour levels are strictly inside the range") {
    CHECK(contour_levels(0.2, 1.6, 0.5) == std::vector<double>{0.5, 1.0, 1.5});
    CHECK(contour_levels(0.5, 1.0, 0.5).empty());
    CHECK_THROWS_AS(contour_levels(0, 1, 0), InvalidArgument);
}

TEST_CASE("box statistics use Tukey fences") {
    const std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8, 100};
    const BoxStats s = box_stats(v);
    CHECK(s.n == 9);
    CHECK(s.q1 == 3.0);
    CHECK(s.median == 5.0);
    CHECK(s.q3 == 7.0);
    CHECK(s.lower_whisker == 1.0);
    CHECK(s.upper_whisker == 8.0);
    CHECK(s.outliers == std::vector<double>{100});
    const std::vector<double> none{NAN};
    CHECK_THROWS_AS(box_stats(none), InvalidArgument);
}

TEST_CASE("tables round trip through CSV") {
    Table t{{"a", "b"}, {{"1", "x,y"}, {"NA", "\"q\""}}};
    const Table back = Table::from_csv(t.to_csv());
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(std::isnan(back.numbers("a")[1]));
    CHECK_THROWS_AS(back.numbers("b"), LoadError);
    CHECK_THROWS_AS(back.column_index("c"), InvalidArgument);
    const auto j = nlohmann::json::parse(t.to_json());
    CHECK(j == nlohmann::json::parse(R"([{"a":1,"b":"x,y"},{"a":null,"b":"\"q\""}])"));
}

TEST_CASE("surface table round trip") {
    const SurfaceGrid g = plane(4, 3);
    const SurfaceGrid back = surface_from_table(Table::from_csv(surface_table(g).to_csv()));
    CHECK(back.names == g.names);
    CHECK(back.x_values == g.x_values);
    CHECK(back.z == g.z);
}

TEST_CASE("figures are deterministic and carry their marks") {
    const auto& fx = fixture();
    Rng rng(1);
    const VimpTable v = vimp(fx.forest, fx.data, 1, rng);
    const MinimalDepthSummary md = minimal_depth(fx.forest);

    const Table vt = Table::from_csv(vimp_table(v).to_csv());
    const std::string svg = render_figure(FigureKind::vimp, vt);
    CHECK(svg == render_figure(FigureKind::vimp, Table::from_csv(vimp_table(v).to_csv())));
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    // first bar label is the top-ranked variable
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, std::regex("text-anchor=\"end\">([a-z]+)</text>")));
    CHECK(m[1] == v.by_rank().front().name);
    CHECK(count(svg, "<rect") == 2 + fx.data.p());

    const std::string cmp = render_figure(FigureKind::compare, rank_comparison_table(compare_rankings(v, md)));
    CHECK(cmp.find("stroke=\"#E41A1C\" fill=\"none\" stroke-width=\"1.50\" stroke-dasharray=\"6,4\"") !=
          std::string::npos);

    const std::string mdsvg = render_figure(FigureKind::mindepth, minimal_depth_table(md));
    CHECK(mdsvg.find("stroke-dasharray") != std::string::npos);

    const auto trace = oob_error_trace(fx.forest, fx.data);
    const std::string err = render_figure(FigureKind::error, error_trace_table(trace));
    std::size_t finite = 0;
    for (double e : trace.mse) finite += std::isfinite(e);
    REQUIRE(std::regex_search(err, m, std::regex("<polyline points=\"([^\"]*)\"")));
    CHECK(count(m[1].str(), ",") == finite);
}

TEST_CASE("render needs its columns") {
    const Table t{{"x"}, {{"1"}}};
    CHECK_THROWS_AS(render_figure(FigureKind::vimp, t), InvalidArgument);
    CHECK_THROWS_AS(render_figure(FigureKind::contour, t), InvalidArgument);
    CHECK(parse_figure_kind("partial_panel") == FigureKind::partial_panel);
    CHECK(mark_kind(FigureKind::predictions) == "boxplot_summary");
    CHECK_THROWS_AS(parse_figure_kind("pie"), InvalidArgument);
}

TEST_CASE("coplot figure has one facet per group") {
    const auto& fx = fixture();
    const auto rm = fx.data.column(fx.data.feature_index("rm"));
    const GroupLabels groups = cut_intervals(rm, quantile_pts(rm, 6, true));
    DependenceData dep = variable_dependence(fx.forest, fx.data, {"lstat"});
    attach_groups(dep, groups, "rm ");
    const std::string svg = render_figure(FigureKind::variable, Table::from_csv(dependence_table(dep).to_csv()));
    CHECK(count(svg, ">rm (") == 6);
    // panels ordered by lower bound
    CHECK(svg.find(">rm " + groups.interval_text[0]) < svg.find(">rm " + groups.interval_text[5]));
}

TEST_CASE("axis labels follow the data dictionary") {
    CHECK(axis_label("medv") == "Median value of homes ($1000s).");
    CHECK(axis_label("lstat") == "Lower status of the population (percent).");
    CHECK(axis_label("other") == "other");
}
