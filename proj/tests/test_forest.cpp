#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "arbor/dataset.hpp"
#include "arbor/errors.hpp"
#include "arbor/forest.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

DataSet step_data() {
    // x <= 2 maps to 0, x >= 3 maps to 10
    return DataSet({"x"}, {FeatureKind::continuous}, {{1, 2, 3, 4}}, "y", {0, 0, 10, 10});
}

std::vector<std::uint32_t> identity_inbag(std::size_t n) { return std::vector<std::uint32_t>(n, 1); }

}  // namespace

TEST_CASE("perfect separation grows a single split at the midpoint") {
    const DataSet d = step_data();
    ForestConfig cfg;
    cfg.nodesize = 1;
    cfg = cfg.resolved(d.n(), d.p());
    Rng rng(1);
    const Tree t = grow_tree(d, cfg, identity_inbag(4), rng);
    REQUIRE(t.nodes.size() == 3);
    const Node& root = t.nodes[t.root];
    CHECK(root.split_feature == 0);
    CHECK(root.split_value == 2.5);
    CHECK(t.nodes[root.left].prediction == 0.0);
    CHECK(t.nodes[root.right].prediction == 10.0);
    CHECK(t.max_depth == 1);
    CHECK(t.terminal_count() == 2);
}

TEST_CASE("bootstrap sample covers about 63.2% of rows") {
    Rng rng(99);
    double frac = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const auto c = bootstrap_sample(rng, 506, 506);
        CHECK(std::accumulate(c.begin(), c.end(), 0u) == 506);
        frac += static_cast<double>(std::count_if(c.begin(), c.end(), [](auto k) { return k > 0; })) / 506.0;
    }
    CHECK(frac / 1000 == doctest::Approx(0.632).epsilon(0.0158));  // +-0.01 absolute

    Rng one(5);
    CHECK(bootstrap_sample(one, 1, 1) == std::vector<std::uint32_t>{1});
}

TEST_CASE("training is deterministic and independent of worker count") {
    Rng rng(4);
    const DataSet d = oracle::random_data(rng, 40, 3, false);
    ForestConfig cfg;
    cfg.ntree = 20;
    cfg.seed = 17;
    const std::string a = save(train(d, cfg));
    setenv("ARBOR_THREADS", "1", 1);
    const std::string b = save(train(d, cfg));
    setenv("ARBOR_THREADS", "4", 1);
    const std::string c = save(train(d, cfg));
    unsetenv("ARBOR_THREADS");
    CHECK(a == b);
    CHECK(a == c);
    cfg.seed = 18;
    CHECK(save(train(d, cfg)) != a);
}

TEST_CASE("a stump predicts its leaf means") {
    const DataSet d = DataSet({"x"}, {FeatureKind::continuous}, {{1, 2, 3, 4, 5, 6}}, "y", {1, 2, 3, 7, 8, 9});
    ForestConfig cfg;
    cfg.nodesize = 3;
    cfg = cfg.resolved(d.n(), d.p());
    Rng rng(1);
    const Tree t = grow_tree(d, cfg, identity_inbag(6), rng);
    const ColumnView x(d);
    CHECK(t.predict(x, 0) == 2.0);
    CHECK(t.predict(x, 5) == 8.0);
}

TEST_CASE("forest prediction is the mean of tree predictions") {
    Rng rng(8);
    const DataSet d = oracle::random_data(rng, 30, 3, false);
    ForestConfig cfg;
    cfg.ntree = 7;
    const Forest f = train(d, cfg);
    const ColumnView x(d);
    const auto pred = predict(f, x);
    for (std::size_t i = 0; i < d.n(); ++i) {
        double s = 0;
        for (const auto& t : f.trees) s += t.predict(x, i);
        CHECK(pred[i] == doctest::Approx(s / 7).epsilon(1e-14));
        CHECK(predict_row(f, x, i) == pred[i]);
    }
}

TEST_CASE("every leaf respects nodesize and every split separates values") {
    Rng rng(21);
    for (std::size_t nodesize : {1u, 3u, 5u}) {
        const DataSet d = oracle::random_data(rng, 60, 4, true);
        ForestConfig cfg;
        cfg.ntree = 5;
        cfg.nodesize = nodesize;
        const Forest f = train(d, cfg);
        const ColumnView x(d);
        for (const auto& t : f.trees) {
            std::vector<std::uint32_t> members;
            for (std::uint32_t i = 0; i < d.n(); ++i) members.insert(members.end(), t.inbag[i], i);
            // route in-bag copies to leaves
            std::vector<std::size_t> count(t.nodes.size(), 0);
            for (auto r : members) {
                std::uint32_t id = t.root;
                ++count[id];
                while (!t.nodes[id].is_terminal()) {
                    id = x(r, t.nodes[id].split_feature) <= t.nodes[id].split_value ? t.nodes[id].left : t.nodes[id].right;
                    ++count[id];
                }
            }
            for (std::size_t id = 0; id < t.nodes.size(); ++id) {
                CHECK(count[id] == t.nodes[id].inbag_count);
                if (t.nodes[id].is_terminal()) CHECK(count[id] >= nodesize);
                else CHECK(count[id] >= 2 * nodesize);
            }
        }
    }
}

TEST_CASE("best_split agrees with exhaustive search on 200 random nodes") {
    Rng rng(2024);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(11);  // <= 12 members
        const std::size_t p = 1 + rng.uniform_index(4);
        const DataSet d = oracle::random_data(rng, std::max<std::size_t>(n, 2), p, true, trial % 3 == 0);
        const ColumnView x(d);
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < d.n(); ++i) members.insert(members.end(), 1 + (rng.uniform_index(4) == 0), i);
        std::vector<std::size_t> features(p);
        std::iota(features.begin(), features.end(), 0);
        const std::size_t nodesize = 1 + rng.uniform_index(3);

        const auto got = best_split(x, d.response(), members, features, nodesize);
        const auto want = oracle::best_split(x, d.response(), members, features, nodesize);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->feature == want->feature);
            CHECK(got->threshold == want->threshold);
            CHECK(got->left_count == want->left_count);
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("OOB predictions and error trace") {
    Rng rng(12);
    const DataSet d = oracle::random_data(rng, 25, 2, false);
    ForestConfig cfg;
    cfg.ntree = 1;
    const Forest f = train(d, cfg);
    const auto oob = predict_oob(f, d);
    const ColumnView x(d);
    for (std::size_t i = 0; i < d.n(); ++i) {
        if (f.trees[0].inbag[i] == 0) {
            CHECK(oob.tree_count[i] == 1);
            CHECK(oob.prediction[i] == f.trees[0].predict(x, i));
        } else {
            CHECK(oob.tree_count[i] == 0);
            CHECK(std::isnan(oob.prediction[i]));
        }
    }
    CHECK(oob.flagged() == static_cast<std::size_t>(std::count(oob.tree_count.begin(), oob.tree_count.end(), 0u)));
    const auto trace = oob_error_trace(f, d);
    REQUIRE(trace.mse.size() == 1);
    CHECK(trace.mse[0] == oob.mse(d.response()));
    CHECK(trace.partial[0]);

    cfg.ntree = 200;
    const Forest big = train(d, cfg);
    const auto full = oob_error_trace(big, d);
    CHECK(full.mse.back() == big.summary.oob_mse);
    CHECK_FALSE(full.partial.back());
    CHECK(full.rows_used.back() == d.n());
}

TEST_CASE("summary block") {
    const DataSet d = builtin_boston();
    ForestConfig cfg;
    cfg.ntree = 20;
    const std::string s = summarize(train(d, cfg));
    CHECK(s.find("                         Sample size: 506\n") != std::string::npos);
    CHECK(s.find("                     Number of trees: 20\n") != std::string::npos);
    CHECK(s.find("No. of variables tried at each split: 5\n") != std::string::npos);
    CHECK(s.find("\n\n                          Error rate: ") != std::string::npos);
}

TEST_CASE("config validation names the field") {
    const DataSet d = step_data();
    ForestConfig cfg;
    cfg.ntree = 0;
    try {
        train(d, cfg);
        FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("ntree") != std::string::npos);
    }
    cfg.ntree = 1;
    cfg.mtry = 5;
    CHECK_THROWS_AS(train(d, cfg), InvalidArgument);
}

TEST_CASE("predict rejects malformed input") {
    const DataSet d = step_data();
    ForestConfig cfg;
    cfg.ntree = 3;
    cfg.nodesize = 1;
    const Forest f = train(d, cfg);
    const std::vector<double> a{1, 2}, b{1, NAN};
    CHECK_THROWS_AS(predict(f, ColumnView({a, a}, 2)), InvalidArgument);
    CHECK_THROWS_AS(predict(f, ColumnView({b}, 2)), InvalidArgument);
}

TEST_CASE("save and load round trip") {
    Rng rng(6);
    const DataSet d = oracle::random_data(rng, 30, 3, false, true);
    ForestConfig cfg;
    cfg.ntree = 4;
    const Forest f = train(d, cfg);
    const std::string bytes = save(f);
    const Forest g = load(bytes);
    CHECK(save(g) == bytes);
    CHECK(g.feature_kinds == f.feature_kinds);
    CHECK(predict(g, ColumnView(d)) == predict(f, ColumnView(d)));
    CHECK(g.summary.oob_mse == f.summary.oob_mse);

    CHECK_THROWS_AS(load("{not json"), FormatError);
    CHECK_THROWS_AS(load(bytes.substr(0, bytes.size() / 2)), FormatError);
    std::string wrong = bytes;
    wrong.replace(wrong.find("\"format_version\":1"), 18, "\"format_version\":9");
    CHECK_THROWS_AS(load(wrong), FormatError);
    CHECK_THROWS_AS(load("{}"), FormatError);
}
