#include <doctest.h>

#include <cmath>

#include "arbor/diagnostics.hpp"
#include "arbor/errors.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

Node leaf(std::uint32_t depth, double value) {
    Node n;
    n.kind = Node::Kind::terminal;
    n.depth = depth;
    n.prediction = value;
    return n;
}

Node split(std::uint32_t depth, std::uint32_t feature, double value, std::uint32_t left, std::uint32_t right) {
    Node n;
    n.kind = Node::Kind::internal;
    n.depth = depth;
    n.split_feature = feature;
    n.split_value = value;
    n.left = left;
    n.right = right;
    return n;
}

// Seven nodes, three features:
//        0: f0
//      1: f1    2: leaf
//   3: f2  4: leaf
//  5     6
Forest seven_node_forest() {
    Tree t;
    t.nodes = {split(0, 0, 0.5, 1, 2), split(1, 1, 0.5, 3, 4), leaf(1, 3), split(2, 2, 0.5, 5, 6),
               leaf(2, 2), leaf(3, 0), leaf(3, 1)};
    t.max_depth = 3;
    t.inbag.assign(4, 1);
    Forest f;
    f.trees.push_back(t);
    f.feature_names = {"a", "b", "c"};
    f.feature_kinds.assign(3, FeatureKind::continuous);
    f.response_name = "y";
    f.config.ntree = 1;
    return f;
}

}  // namespace

TEST_CASE("VIMP of a feature that never splits is exactly zero") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        DataSet base = oracle::random_data(rng, 30, 3, false);
        ForestConfig cfg;
        cfg.ntree = 10;
        cfg.seed = 100 + trial;
        Forest f = train(base, cfg);
        // append a random feature that no tree refers to
        auto cols = base.columns();
        cols.emplace_back();
        for (std::size_t i = 0; i < base.n(); ++i) cols.back().push_back(rng.uniform01());
        auto names = base.feature_names();
        names.push_back("unused");
        auto kinds = base.feature_kinds();
        kinds.push_back(FeatureKind::continuous);
        const DataSet d(names, kinds, cols, "y", {base.response().begin(), base.response().end()});
        f.feature_names = names;
        f.feature_kinds = kinds;
        Rng vr(trial);
        const VimpTable v = vimp(f, d, 2, vr);
        CHECK(v.entries.back().vimp == 0.0);
        CHECK(v.entries.back().sign == Sign::zero);
    }
}

TEST_CASE("VIMP is reproducible for a fixed seed") {
    const DataSet d = builtin_boston();
    ForestConfig cfg;
    cfg.ntree = 30;
    const Forest f = train(d, cfg);
    Rng a(9), b(9);
    const VimpTable va = vimp(f, d, 1, a), vb = vimp(f, d, 1, b);
    for (std::size_t j = 0; j < d.p(); ++j) CHECK(va.entries[j].vimp == vb.entries[j].vimp);
    CHECK(va.baseline_mse == f.summary.oob_mse);
    const auto ranked = va.by_rank();
    for (std::size_t k = 1; k < ranked.size(); ++k) CHECK(ranked[k - 1].vimp >= ranked[k].vimp);
}

TEST_CASE("minimal depth on a hand-built tree") {
    const Forest f = seven_node_forest();
    const auto depths = first_split_depths(f.trees[0], 3);
    CHECK(depths == std::vector<double>{0, 1, 2});

    const auto md = minimal_depth(f);
    CHECK(md.entries[0].mean_min_depth == 0.0);
    CHECK(md.threshold == 1.0);
    CHECK(md.topvars == std::vector<std::string>{"a"});
    CHECK(md.entries[2].rank == 3);
}

TEST_CASE("never-split features get max_depth + 1") {
    Forest f = seven_node_forest();
    f.feature_names.push_back("d");
    f.feature_kinds.push_back(FeatureKind::continuous);
    CHECK(first_split_depths(f.trees[0], 4)[3] == 4.0);
    const auto m = interactions(f);
    for (double v : m.values[3]) CHECK(v == 1.0);
    CHECK(m.subtree_counts[3] == 0);
}

TEST_CASE("rank comparison") {
    VimpTable v;
    MinimalDepthSummary d;
    for (std::size_t k = 0; k < 4; ++k) {
        v.entries.push_back({"f" + std::to_string(k), 4.0 - k, Sign::positive, k + 1});
        d.entries.push_back({"f" + std::to_string(k), static_cast<double>(k), k + 1});
    }
    for (const auto& r : compare_rankings(v, d)) CHECK(r.vimp_rank == r.depth_rank);

    for (std::size_t k = 0; k < 4; ++k) d.entries[k].rank = 4 - k;
    const auto rows = compare_rankings(v, d);
    CHECK(rows.front().name == "f3");
    CHECK(rows.front().vimp_rank == 4);
    for (const auto& r : rows) CHECK(r.vimp_rank + r.depth_rank == 5);

    d.entries.pop_back();
    CHECK_THROWS_AS(compare_rankings(v, d), InvalidArgument);
}

TEST_CASE("interaction values on the seven node tree") {
    const Forest f = seven_node_forest();
    const auto m = interactions(f);
    // subtree of a has height 3; c first splits two levels below the root
    CHECK(m.values[0][2] == doctest::Approx(2.0 / 4.0));
    CHECK(m.values[0][1] == doctest::Approx(1.0 / 4.0));
    // subtree of b: height 2, c one level down
    CHECK(m.values[1][2] == doctest::Approx(1.0 / 3.0));
    CHECK(m.values[1][0] == 1.0);
    CHECK(m.values[1][1] == doctest::Approx(1.0 / 4.0));
    CHECK(m.values[2][2] == doctest::Approx(2.0 / 4.0));
}

TEST_CASE("interactions match a recursive oracle on small forests") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t p = 2 + rng.uniform_index(3);
        const DataSet d = oracle::random_data(rng, 10 + rng.uniform_index(11), p, trial % 2 == 0);
        ForestConfig cfg;
        cfg.ntree = 1 + rng.uniform_index(3);
        cfg.nodesize = 1 + rng.uniform_index(2);
        cfg.seed = trial;
        const Forest f = train(d, cfg);
        const auto m = interactions(f);
        const oracle::InteractionOracle o{f};
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) CHECK(m.values[i][j] == doctest::Approx(o.value(i, j)).epsilon(1e-12));
    }
}
