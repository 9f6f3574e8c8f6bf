#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "arbor/csv.hpp"
#include "arbor/dataset.hpp"
#include "arbor/errors.hpp"
#include "arbor/rng.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

// Hyndman-Fan type 7 written from the definition: h = (n-1)p, linear
// interpolation between the floor(h) and floor(h)+1 order statistics.
double type7(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace

TEST_CASE("csv parse handles quotes and line endings") {
    const auto recs = csv::parse("a,\"b,c\",\"d\"\"e\"\r\n1,2,3\n");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0][1] == "b,c");
    CHECK(recs[0][2] == "d\"e");
    CHECK(recs[1][2] == "3");
    CHECK_THROWS_AS(csv::parse("a,\"open\n"), LoadError);
    CHECK(csv::escape("x,y") == "\"x,y\"");
}

TEST_CASE("number formatting round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 506.0, 24.0}) {
        double back = 0;
        REQUIRE(csv::parse_number(csv::format_number(v), back));
        CHECK(back == v);
    }
    double out = 0;
    CHECK_FALSE(csv::parse_number("1.5x", out));
    CHECK_FALSE(csv::parse_number("", out));
    CHECK(csv::format_number(std::nan("")) == "NA");
}

TEST_CASE("parse_csv infers boolean columns") {
    const DataSet d = parse_csv("a,flag,t,y\n1.5,0,TRUE,3\n2.5,1,false,4\n", "y");
    CHECK(d.n() == 2);
    CHECK(d.p() == 3);
    CHECK(d.feature_kinds()[0] == FeatureKind::continuous);
    CHECK(d.feature_kinds()[1] == FeatureKind::boolean);
    CHECK(d.feature_kinds()[2] == FeatureKind::boolean);
    CHECK(d.column(2)[0] == 1.0);
    CHECK(d.response()[1] == 4.0);
}

TEST_CASE("parse_csv rejects bad input with a location") {
    SUBCASE("missing value") {
        try {
            parse_csv("a,y\n1,2\n,3\n", "y");
            FAIL("expected LoadError");
        } catch (const LoadError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("line 3") != std::string::npos);
            CHECK(msg.find("a") != std::string::npos);
        }
    }
    SUBCASE("NA cell") { CHECK_THROWS_AS(parse_csv("a,y\n1,2\nNA,3\n", "y"), LoadError); }
    SUBCASE("non-numeric") { CHECK_THROWS_AS(parse_csv("a,y\n1,2\nfoo,3\n", "y"), LoadError); }
    SUBCASE("unknown response") { CHECK_THROWS(parse_csv("a,y\n1,2\n3,4\n", "medv")); }
    SUBCASE("ragged row") { CHECK_THROWS_AS(parse_csv("a,y\n1,2\n3\n", "y"), LoadError); }
    SUBCASE("mixed boolean tokens") { CHECK_THROWS_AS(parse_csv("a,y\ntrue,2\n3,4\n", "y"), LoadError); }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_csv("/nonexistent/file.csv", "y"), LoadError); }
}

TEST_CASE("DataSet constructor enforces invariants") {
    CHECK_THROWS_AS(DataSet({"a"}, {FeatureKind::continuous}, {{1.0}}, "y", {1.0}), InvalidArgument);
    CHECK_THROWS_AS(DataSet({"a", "a"}, {FeatureKind::continuous, FeatureKind::continuous}, {{1, 2}, {1, 2}}, "y", {1, 2}),
                    InvalidArgument);
    CHECK_THROWS_AS(DataSet({"a"}, {FeatureKind::boolean}, {{0, 2}}, "y", {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(DataSet({"a"}, {FeatureKind::continuous}, {{0, INFINITY}}, "y", {1, 2}), InvalidArgument);
}

TEST_CASE("builtin Boston table") {
    const DataSet d = builtin_boston();
    CHECK(d.n() == 506);
    CHECK(d.p() == 13);
    CHECK(d.response_name() == "medv");
    CHECK(d.feature_kinds()[d.feature_index("chas")] == FeatureKind::boolean);
    CHECK(d.feature_names().back() == "lstat");
    // first record of the classic table
    CHECK(d.column(d.feature_index("crim"))[0] == doctest::Approx(0.00632));
    CHECK(d.response()[0] == 24.0);
}

TEST_CASE("csv round trip property") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const DataSet d = oracle::random_data(rng, 3 + rng.uniform_index(20), 1 + rng.uniform_index(4), trial % 2 == 0,
                                              true);
        const DataSet back = parse_csv(to_csv(d), "y");
        REQUIRE(back.p() == d.p());
        CHECK(back.feature_names() == d.feature_names());
        CHECK(back.feature_kinds() == d.feature_kinds());
        CHECK(back.columns() == d.columns());
        CHECK(std::equal(d.response().begin(), d.response().end(), back.response().begin()));
    }
}

TEST_CASE("type-7 quantiles match the definition") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(1 + rng.uniform_index(30));
        for (auto& x : v) x = rng.uniform01() * 10;
        std::vector<double> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        for (double p : {0.0, 0.1, 0.25, 0.5, 0.77, 1.0}) CHECK(quantile_sorted(sorted, p) == doctest::Approx(type7(v, p)).epsilon(1e-14));
    }
}

TEST_CASE("quantile_pts intervals and points") {
    std::vector<double> v;
    for (int i = 1; i <= 12; ++i) v.push_back(i);
    const auto br = quantile_pts(v, 3, true);
    REQUIRE(br.groups() == 3);
    CHECK(br.boundaries.front() < 1.0);
    CHECK(br.boundaries.front() > 1.0 - 1e-6);
    CHECK(br.boundaries[1] == doctest::Approx(type7(v, 1.0 / 3)));
    CHECK(br.boundaries.back() == 12.0);

    const auto pts = quantile_pts(v, 5, false);
    REQUIRE(pts.boundaries.size() == 5);
    CHECK(pts.boundaries.front() == 1.0);
    CHECK(pts.boundaries[2] == doctest::Approx(6.5));

    // ties collapse; constant input is degenerate
    const std::vector<double> tied{1, 1, 1, 1, 2};
    CHECK(quantile_pts(tied, 4, true).groups() < 4);
    const std::vector<double> flat{3, 3, 3};
    CHECK_THROWS_AS(quantile_pts(flat, 4, true), DegenerateError);
}

TEST_CASE("cut_intervals is right closed and covers every row") {
    const std::vector<double> v{1, 2, 3, 4, 5, 6};
    const IntervalBreaks br{{0.5, 2, 4, 6}, 3};
    const auto g = cut_intervals(v, br);
    CHECK(g.labels == std::vector<std::size_t>{0, 0, 1, 1, 2, 2});
    CHECK(g.group_sizes() == std::vector<std::size_t>{2, 2, 2});
    CHECK(g.interval_text[0] == "(0.5,2]");
    CHECK(g.interval_text[2] == "(4,6]");
    const std::vector<double> outside{1, 7};
    CHECK_THROWS_AS(cut_intervals(outside, br), InvalidArgument);
}

TEST_CASE("rm sextile groups on Boston") {
    const DataSet d = builtin_boston();
    const auto rm = d.column(d.feature_index("rm"));
    const auto br = quantile_pts(rm, 6, true);
    REQUIRE(br.groups() == 6);
    // published breaks are approximately 5.73, 6.47 and 6.87 for three of the cut points
    CHECK(br.boundaries[1] == doctest::Approx(5.73).epsilon(0.01));
    CHECK(br.boundaries[4] == doctest::Approx(6.47).epsilon(0.01));
    CHECK(br.boundaries[5] == doctest::Approx(6.87).epsilon(0.01));
    const auto g = cut_intervals(rm, br);
    for (auto s : g.group_sizes()) CHECK(std::abs(static_cast<double>(s) - 506.0 / 6) <= 3);
}
