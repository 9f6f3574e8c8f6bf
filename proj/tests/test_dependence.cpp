#include <doctest.h>

#include <cmath>

#include "arbor/dependence.hpp"
#include "arbor/errors.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

struct Case {
    DataSet data;
    Forest forest;
};

Case random_case(Rng& rng, int trial) {
    const std::size_t n = 4 + rng.uniform_index(17);
    const std::size_t p = 2 + rng.uniform_index(3);
    DataSet d = oracle::random_data(rng, n, p, trial % 2 == 0, trial % 3 == 0);
    ForestConfig cfg;
    cfg.ntree = 1 + rng.uniform_index(3);
    cfg.nodesize = 1 + rng.uniform_index(2);
    cfg.mtry = 1 + rng.uniform_index(p);
    cfg.seed = 500 + trial;
    Forest f = train(d, cfg);
    return {std::move(d), std::move(f)};
}

}  // namespace

TEST_CASE("partial_values matches the double loop oracle") {
    Rng rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [d, f] = random_case(rng, trial);
        const std::size_t xvar = rng.uniform_index(d.p());
        // grid values land on, between, and outside split thresholds
        std::vector<double> grid{-5.0, -1.0};
        for (double g = -0.75; g < 12; g += 0.5 + rng.uniform01()) grid.push_back(g);
        grid.push_back(50.0);
        const auto rows = oracle::all_rows(d.n());
        const auto got = partial_values(f, ColumnView(d), xvar, grid, rows);
        const auto want = oracle::partial(f, d.columns(), xvar, grid, rows);
        for (std::size_t k = 0; k < grid.size(); ++k) CHECK(close(got[k], want[k]));
    }
}

TEST_CASE("partial_dependence, coplot and surface agree with brute force") {
    Rng rng(4321);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [d, f] = random_case(rng, trial);
        const std::size_t xvar = d.p() - 1;  // always continuous
        const std::string xname = d.feature_names()[xvar];

        const PartialData pd = partial_dependence(f, d, xname, {7, GridMode::quantile, {}});
        std::vector<double> grid;
        for (const auto& pt : pd.points) grid.push_back(pt.x);
        const auto want = oracle::partial(f, d.columns(), xvar, grid, oracle::all_rows(d.n()));
        for (std::size_t k = 0; k < grid.size(); ++k) CHECK(close(pd.points[k].yhat, want[k]));

        // coplot: each group equals partial over its member rows
        const auto by = d.column(0);
        GroupLabels groups;
        try {
            groups = cut_intervals(by, quantile_pts(by, 2, true));
        } catch (const DegenerateError&) {
            continue;
        }
        const PartialData cp = partial_coplot(f, d, xname, groups, 5);
        for (std::size_t g = 0; g < groups.groups(); ++g) {
            std::vector<std::uint32_t> members;
            for (std::uint32_t i = 0; i < d.n(); ++i)
                if (groups.labels[i] == g) members.push_back(i);
            std::vector<double> gx, gy;
            for (const auto& pt : cp.points)
                if (pt.group == groups.interval_text[g]) {
                    gx.push_back(pt.x);
                    gy.push_back(pt.yhat);
                }
            if (members.empty()) continue;
            const auto gw = oracle::partial(f, d.columns(), xvar, gx, members);
            for (std::size_t k = 0; k < gx.size(); ++k) CHECK(close(gy[k], gw[k]));
        }

        // surface: every cell equals the mean prediction with both columns overridden
        const std::size_t yvar = d.p() - 2;
        const SurfaceGrid s = partial_surface(f, d, xname, d.feature_names()[yvar], 4, 3);
        for (std::size_t j = 0; j < s.y_values.size(); ++j) {
            auto cols = d.columns();
            for (auto& v : cols[yvar]) v = s.y_values[j];
            const auto row = oracle::partial(f, cols, xvar, s.x_values, oracle::all_rows(d.n()));
            for (std::size_t i = 0; i < s.x_values.size(); ++i) CHECK(close(s.z[j][i], row[i]));
        }
    }
}

TEST_CASE("mixture identity: the full curve is the size-weighted mean of group curves") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [d, f] = random_case(rng, trial);
        const std::size_t xvar = d.p() - 1;
        const std::vector<double> grid{-2, 0.5, 3, 7.25, 20};
        std::vector<std::uint32_t> a, b;
        for (std::uint32_t i = 0; i < d.n(); ++i) (rng.uniform_index(2) ? a : b).push_back(i);
        if (a.empty() || b.empty()) continue;
        const ColumnView x(d);
        const auto all = partial_values(f, x, xvar, grid, oracle::all_rows(d.n()));
        const auto pa = partial_values(f, x, xvar, grid, a);
        const auto pb = partial_values(f, x, xvar, grid, b);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double mix = (pa[k] * a.size() + pb[k] * b.size()) / static_cast<double>(d.n());
            CHECK(close(all[k], mix));
        }
    }
}

TEST_CASE("a forest of constant trees gives a flat curve") {
    const DataSet d({"x", "z"}, {FeatureKind::continuous, FeatureKind::continuous}, {{1, 2, 3, 4}, {4, 3, 2, 1}}, "y",
                    {5, 5, 5, 5});
    ForestConfig cfg;
    cfg.ntree = 3;
    cfg.nodesize = 1;
    const Forest f = train(d, cfg);
    const PartialData pd = partial_dependence(f, d, "x", {4, GridMode::range, {}});
    REQUIRE(pd.points.size() == 4);
    for (const auto& pt : pd.points) CHECK(pt.yhat == 5.0);
}

TEST_CASE("subset partial equals a coplot group") {
    Rng rng(5);
    const DataSet d = oracle::random_data(rng, 40, 3, false);
    ForestConfig cfg;
    cfg.ntree = 5;
    const Forest f = train(d, cfg);
    const auto by = d.column(1);
    const GroupLabels groups = cut_intervals(by, quantile_pts(by, 3, true));
    const PartialData cp = partial_coplot(f, d, "x2", groups, 6);
    for (std::size_t g = 0; g < groups.groups(); ++g) {
        std::vector<bool> mask(d.n());
        for (std::size_t i = 0; i < d.n(); ++i) mask[i] = groups.labels[i] == g;
        const PartialData sub = partial_dependence(f, d, "x2", {6, GridMode::quantile, mask});
        std::size_t k = 0;
        for (const auto& pt : cp.points) {
            if (pt.group != groups.interval_text[g]) continue;
            REQUIRE(k < sub.points.size());
            CHECK(pt.x == sub.points[k].x);
            CHECK(pt.yhat == sub.points[k].yhat);
            ++k;
        }
        CHECK(k == sub.points.size());
    }
}

TEST_CASE("partial grids") {
    const std::vector<double> v{1, 2, 3, 4, 5};
    CHECK(partial_grid(v, FeatureKind::continuous, 3, GridMode::range) == std::vector<double>{1, 3, 5});
    CHECK(partial_grid(v, FeatureKind::continuous, 5, GridMode::quantile) == v);
    const std::vector<double> flags{0, 0, 0};
    CHECK(partial_grid(flags, FeatureKind::boolean, 25, GridMode::quantile) == std::vector<double>{0, 1});
    const std::vector<double> flat{2, 2, 2};
    CHECK_THROWS_AS(partial_grid(flat, FeatureKind::continuous, 5, GridMode::range), DegenerateError);
    CHECK_THROWS_AS(partial_grid(flat, FeatureKind::continuous, 5, GridMode::quantile), DegenerateError);
    CHECK(parse_grid_mode("range") == GridMode::range);
    CHECK_THROWS_AS(parse_grid_mode("even"), InvalidArgument);
}

TEST_CASE("partial_values validates its grid") {
    const DataSet d({"x"}, {FeatureKind::continuous}, {{1, 2, 3}}, "y", {1, 2, 3});
    ForestConfig cfg;
    cfg.ntree = 1;
    const Forest f = train(d, cfg);
    const std::vector<double> bad{1, 1};
    const std::vector<std::uint32_t> rows{0, 1};
    CHECK_THROWS_AS(partial_values(f, ColumnView(d), 0, bad, rows), InvalidArgument);
}

TEST_CASE("surface_matrix reshapes and reports holes") {
    std::vector<SurfacePoint> pts;
    for (double y : {1.0, 2.0, 3.0})
        for (double x : {10.0, 20.0, 30.0}) pts.push_back({x, y, x + y});
    const SurfaceGrid g = surface_matrix(std::span<const SurfacePoint>(pts), {"a", "b", "c"});
    CHECK(g.x_values == std::vector<double>{10, 20, 30});
    CHECK(g.y_values == std::vector<double>{1, 2, 3});
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) CHECK(g.z[j][i] == g.x_values[i] + g.y_values[j]);

    const auto back = surface_points(g);
    REQUIRE(back.size() == 9);
    CHECK(back[1].x == 20.0);
    CHECK(back[1].y == 1.0);

    auto holey = pts;
    holey.erase(holey.begin() + 4);
    try {
        surface_matrix(std::span<const SurfacePoint>(holey), {"a", "b", "c"});
        FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("(20,2)") != std::string::npos);
    }
    auto dup = pts;
    dup.push_back(pts[0]);
    CHECK_THROWS_AS(surface_matrix(std::span<const SurfacePoint>(dup), {"a", "b", "c"}), InvalidArgument);
}

TEST_CASE("variable dependence joins OOB predictions") {
    const DataSet d = builtin_boston();
    ForestConfig cfg;
    cfg.ntree = 50;
    const Forest f = train(d, cfg);
    DependenceData dep = variable_dependence(f, d, {"lstat", "rm"});
    CHECK(dep.rows() == 506);
    CHECK(dep.columns[1][0] == d.column(d.feature_index("rm"))[0]);
    const auto oob = predict_oob(f, d);
    for (std::size_t i = 0; i < 506; ++i)
        if (!std::isnan(oob.prediction[i])) CHECK(dep.oob_prediction[i] == oob.prediction[i]);

    const auto rm = d.column(d.feature_index("rm"));
    attach_groups(dep, cut_intervals(rm, quantile_pts(rm, 6, true)), "rm ");
    CHECK(dep.group_label[0].rfind("rm (", 0) == 0);
    CHECK_THROWS(variable_dependence(f, d, {"nope"}));
}
