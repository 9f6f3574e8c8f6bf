#include "arbor/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <utility>

#include "arbor/errors.hpp"
#include "arbor/parallel.hpp"

namespace arbor {

ColumnView::ColumnView(const DataSet& data) : rows_(data.n()) {
    columns_.reserve(data.p());
    for (std::size_t j = 0; j < data.p(); ++j) columns_.push_back(data.column(j));
}

ColumnView::ColumnView(std::vector<std::span<const double>> columns, std::size_t rows)
    : columns_(std::move(columns)), rows_(rows) {
    for (const auto& c : columns_)
        if (c.size() != rows_) throw InvalidArgument("column length does not match row count");
}

ColumnView ColumnView::with_column(std::size_t feature, std::span<const double> values) const {
    if (feature >= columns_.size()) throw InvalidArgument("feature index out of range");
    if (values.size() != rows_) throw InvalidArgument("replacement column has wrong length");
    ColumnView out = *this;
    out.columns_[feature] = values;
    return out;
}

ForestConfig ForestConfig::resolved(std::size_t n, std::size_t p) const {
    ForestConfig out = *this;
    if (out.mtry == 0) out.mtry = std::max<std::size_t>(1, (p + 2) / 3);
    if (out.bootstrap_n == 0) out.bootstrap_n = n;
    return out;
}

void ForestConfig::validate(std::size_t p) const {
    if (ntree < 1) throw InvalidArgument("ntree must be >= 1");
    if (mtry < 1 || mtry > p)
        throw InvalidArgument("mtry must be in [1, " + std::to_string(p) + "], got " + std::to_string(mtry));
    if (nodesize < 1) throw InvalidArgument("nodesize must be >= 1");
    if (bootstrap_n < 1) throw InvalidArgument("bootstrap_n must be >= 1");
}

std::size_t Tree::terminal_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.is_terminal(); }));
}

std::size_t Forest::feature_index(std::string_view name) const {
    auto it = std::find(feature_names.begin(), feature_names.end(), name);
    if (it == feature_names.end()) throw InvalidArgument("unknown feature: " + std::string(name));
    return static_cast<std::size_t>(it - feature_names.begin());
}

namespace {

constexpr double kTieTolerance = 1e-12;

bool within_tolerance(double a, double b) {
    return std::abs(a - b) <= kTieTolerance * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

std::optional<Split> best_split(const ColumnView& x, std::span<const double> y,
                                std::span<const std::uint32_t> members, std::span<const std::size_t> features,
                                std::size_t nodesize) {
    const std::size_t m = members.size();
    if (m < 2 * nodesize || m < 2) return std::nullopt;

    double total = 0.0;
    for (auto r : members) total += y[r];
    const double parent_score = total * total / static_cast<double>(m);

    // score = S_L^2/n_L + S_R^2/n_R; maximizing it minimizes the child SSE.
    std::optional<Split> best;
    double best_score = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> sorted(m);

    for (std::size_t f : features) {
        for (std::size_t k = 0; k < m; ++k) sorted[k] = {x(members[k], f), y[members[k]]};
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (sorted.front().first == sorted.back().first) continue;

        double left_sum = 0.0;
        for (std::size_t k = 1; k < m; ++k) {
            left_sum += sorted[k - 1].second;
            if (k < nodesize || m - k < nodesize) continue;
            if (sorted[k - 1].first == sorted[k].first) continue;

            const double right_sum = total - left_sum;
            const double score = left_sum * left_sum / static_cast<double>(k) +
                                 right_sum * right_sum / static_cast<double>(m - k);
            double threshold = 0.5 * (sorted[k - 1].first + sorted[k].first);
            if (!(threshold < sorted[k].first)) threshold = sorted[k - 1].first;

            bool take = false;
            if (!best) {
                take = true;
            } else if (within_tolerance(score, best_score)) {
                take = f < best->feature || (f == best->feature && threshold < best->threshold);
            } else {
                take = score > best_score;
            }
            if (take) {
                best = Split{f, threshold, 0.0, k};
                best_score = score;
            }
        }
    }

    if (!best || best_score <= parent_score || within_tolerance(best_score, parent_score)) return std::nullopt;

    double sum_sq = 0.0;
    for (auto r : members) sum_sq += y[r] * y[r];
    best->child_sse = std::max(0.0, sum_sq - best_score);
    return best;
}

std::vector<std::uint32_t> bootstrap_sample(Rng& rng, std::size_t n, std::size_t bootstrap_n) {
    if (n < 1) throw InvalidArgument("bootstrap over zero rows");
    std::vector<std::uint32_t> counts(n, 0);
    for (std::size_t k = 0; k < bootstrap_n; ++k) ++counts[rng.uniform_index(n)];
    return counts;
}

Tree grow_tree(const DataSet& data, const ForestConfig& config, std::vector<std::uint32_t> inbag, Rng& rng) {
    const std::size_t p = data.p();
    const ColumnView x(data);
    const auto y = data.response();
    if (inbag.size() != data.n()) throw InvalidArgument("in-bag vector does not match row count");

    Tree tree;
    tree.inbag = std::move(inbag);

    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < tree.inbag.size(); ++i)
        members.insert(members.end(), tree.inbag[i], i);
    if (members.empty()) throw InvalidArgument("empty bootstrap sample");

    std::vector<std::size_t> feature_pool(p);
    std::iota(feature_pool.begin(), feature_pool.end(), std::size_t{0});
    const std::size_t mtry = std::min(config.mtry, p);

    struct Pending {
        std::uint32_t node;
        std::size_t begin, end;
    };
    std::vector<Pending> stack;
    tree.nodes.emplace_back();
    tree.root = 0;
    stack.push_back({0, 0, members.size()});

    while (!stack.empty()) {
        const Pending work = stack.back();
        stack.pop_back();
        const std::span<std::uint32_t> node_members(members.data() + work.begin, work.end - work.begin);

        double sum = 0.0;
        bool constant = true;
        const double first = y[node_members.front()];
        for (auto r : node_members) {
            sum += y[r];
            constant = constant && y[r] == first;
        }
        {
            Node& node = tree.nodes[work.node];
            node.inbag_count = static_cast<std::uint32_t>(node_members.size());
            node.prediction = sum / static_cast<double>(node_members.size());
            tree.max_depth = std::max(tree.max_depth, node.depth);
        }
        if (constant || node_members.size() < 2 * config.nodesize) continue;

        // fresh mtry draw without replacement at every node
        for (std::size_t k = 0; k < mtry; ++k) {
            auto j = k + static_cast<std::size_t>(rng.uniform_index(p - k));
            std::swap(feature_pool[k], feature_pool[j]);
        }
        auto split = best_split(x, y, node_members, std::span(feature_pool.data(), mtry), config.nodesize);
        if (!split) continue;

        auto mid = std::partition(node_members.begin(), node_members.end(), [&](std::uint32_t r) {
            return x(r, split->feature) <= split->threshold;
        });
        const std::size_t left_end = work.begin + static_cast<std::size_t>(mid - node_members.begin());

        const auto left = static_cast<std::uint32_t>(tree.nodes.size());
        const auto right = left + 1;
        const std::uint32_t child_depth = tree.nodes[work.node].depth + 1;
        tree.nodes.emplace_back();
        tree.nodes.emplace_back();
        tree.nodes[left].depth = child_depth;
        tree.nodes[right].depth = child_depth;

        Node& node = tree.nodes[work.node];
        node.kind = Node::Kind::internal;
        node.split_feature = static_cast<std::uint32_t>(split->feature);
        node.split_value = split->threshold;
        node.left = left;
        node.right = right;

        stack.push_back({right, left_end, work.end});
        stack.push_back({left, work.begin, left_end});
    }
    return tree;
}

Forest train(const DataSet& data, const ForestConfig& config) {
    const ForestConfig cfg = config.resolved(data.n(), data.p());
    cfg.validate(data.p());

    Forest forest;
    forest.config = cfg;
    forest.feature_names = data.feature_names();
    forest.feature_kinds = data.feature_kinds();
    forest.response_name = data.response_name();
    forest.trees.resize(cfg.ntree);

    const Rng base(cfg.seed);
    parallel_for(cfg.ntree, [&](std::size_t t) {
        Rng rng = base.split(t);
        auto inbag = bootstrap_sample(rng, data.n(), cfg.bootstrap_n);
        forest.trees[t] = grow_tree(data, cfg, std::move(inbag), rng);
    });

    std::size_t terminals = 0;
    for (const auto& tree : forest.trees) terminals += tree.terminal_count();

    const auto oob = predict_oob(forest, data);
    forest.summary.n = data.n();
    forest.summary.p = data.p();
    forest.summary.avg_terminal_nodes = static_cast<double>(terminals) / static_cast<double>(cfg.ntree);
    forest.summary.oob_mse = oob.mse(data.response());
    forest.summary.rows_never_oob = oob.flagged();
    return forest;
}

namespace {

void require_feature_count(const Forest& forest, const ColumnView& rows) {
    if (rows.features() != forest.p())
        throw InvalidArgument("expected " + std::to_string(forest.p()) + " features, got " +
                              std::to_string(rows.features()));
}

}  // namespace

std::vector<double> predict(const Forest& forest, const ColumnView& rows) {
    require_feature_count(forest, rows);
    for (std::size_t j = 0; j < rows.features(); ++j)
        for (std::size_t i = 0; i < rows.rows(); ++i)
            if (!std::isfinite(rows(i, j)))
                throw InvalidArgument("non-finite value at row " + std::to_string(i + 1) + ", feature " +
                                      forest.feature_names[j]);

    std::vector<double> out(rows.rows(), 0.0);
    for (const auto& tree : forest.trees)
        for (std::size_t i = 0; i < rows.rows(); ++i) out[i] += tree.predict(rows, i);
    const auto b = static_cast<double>(forest.ntree());
    for (auto& v : out) v /= b;
    return out;
}

double predict_row(const Forest& forest, const ColumnView& rows, std::size_t row) {
    require_feature_count(forest, rows);
    double sum = 0.0;
    for (const auto& tree : forest.trees) sum += tree.predict(rows, row);
    return sum / static_cast<double>(forest.ntree());
}

std::size_t OobPredictions::flagged() const {
    return static_cast<std::size_t>(std::count(tree_count.begin(), tree_count.end(), 0u));
}

double OobPredictions::mse(std::span<const double> response) const {
    if (response.size() != prediction.size()) throw InvalidArgument("response length mismatch");
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < prediction.size(); ++i) {
        if (tree_count[i] == 0) continue;
        const double d = prediction[i] - response[i];
        sum += d * d;
        ++used;
    }
    return used ? sum / static_cast<double>(used) : std::numeric_limits<double>::quiet_NaN();
}

void require_training_shape(const Forest& forest, const DataSet& data) {
    if (data.p() != forest.p() || data.feature_names() != forest.feature_names)
        throw InvalidArgument("data features do not match the forest's training features");
    for (const auto& tree : forest.trees)
        if (tree.inbag.size() != data.n())
            throw InvalidArgument("data has " + std::to_string(data.n()) + " rows but the forest was trained on " +
                                  std::to_string(tree.inbag.size()));
}

OobPredictions predict_oob(const Forest& forest, const DataSet& data) {
    require_training_shape(forest, data);
    return predict_oob(forest, ColumnView(data));
}

OobPredictions predict_oob(const Forest& forest, const ColumnView& rows) {
    require_feature_count(forest, rows);
    const std::size_t n = rows.rows();
    std::vector<double> sum(n, 0.0);
    OobPredictions out;
    out.tree_count.assign(n, 0);
    for (const auto& tree : forest.trees) {
        if (tree.inbag.size() != n) throw InvalidArgument("row count differs from training data");
        for (std::size_t i = 0; i < n; ++i) {
            if (tree.inbag[i] != 0) continue;
            sum[i] += tree.predict(rows, i);
            ++out.tree_count[i];
        }
    }
    out.prediction.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.prediction[i] = out.tree_count[i] ? sum[i] / static_cast<double>(out.tree_count[i])
                                              : std::numeric_limits<double>::quiet_NaN();
    return out;
}

OobErrorTrace oob_error_trace(const Forest& forest, const DataSet& data) {
    require_training_shape(forest, data);
    const ColumnView rows(data);
    const auto y = data.response();
    const std::size_t n = data.n();

    std::vector<double> sum(n, 0.0);
    std::vector<std::uint32_t> count(n, 0);
    OobErrorTrace trace;
    trace.mse.reserve(forest.ntree());
    for (const auto& tree : forest.trees) {
        for (std::size_t i = 0; i < n; ++i) {
            if (tree.inbag[i] != 0) continue;
            sum[i] += tree.predict(rows, i);
            ++count[i];
        }
        double sq = 0.0;
        std::size_t used = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (count[i] == 0) continue;
            const double d = sum[i] / static_cast<double>(count[i]) - y[i];
            sq += d * d;
            ++used;
        }
        trace.mse.push_back(used ? sq / static_cast<double>(used) : std::numeric_limits<double>::quiet_NaN());
        trace.rows_used.push_back(used);
        trace.partial.push_back(static_cast<double>(n - used) > 0.01 * static_cast<double>(n));
    }
    return trace;
}

std::string summarize(const Forest& forest) {
    auto line = [](const char* label, const std::string& value) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%36s: %s\n", label, value.c_str());
        return std::string(buf);
    };
    auto fixed = [](double v, int places) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", places, v);
        return std::string(buf);
    };
    std::string out;
    out += line("Sample size", std::to_string(forest.summary.n));
    out += line("Number of trees", std::to_string(forest.ntree()));
    out += line("Minimum terminal node size", std::to_string(forest.config.nodesize));
    out += line("Average no. of terminal nodes", fixed(forest.summary.avg_terminal_nodes, 3));
    out += line("No. of variables tried at each split", std::to_string(forest.config.mtry));
    out += line("Total no. of variables", std::to_string(forest.summary.p));
    out += line("Analysis", "RF-R");
    out += line("Family", "regr");
    out += line("Splitting rule", "regr");
    out += "\n";
    out += line("Error rate", fixed(forest.summary.oob_mse, 2));
    return out;
}

}  // namespace arbor
