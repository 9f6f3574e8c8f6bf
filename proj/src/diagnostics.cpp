#include "arbor/diagnostics.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"
#include "arbor/parallel.hpp"

namespace arbor {

std::string_view to_string(Sign sign) {
    switch (sign) {
        case Sign::negative: return "negative";
        case Sign::positive: return "positive";
        default: return "zero";
    }
}

namespace {

template <typename Entry, typename Less>
std::vector<std::size_t> ranks_by(const std::vector<Entry>& entries, Less less) {
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return less(entries[a], entries[b]); });
    std::vector<std::size_t> rank(entries.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
    return rank;
}

template <typename Entry>
std::vector<Entry> sorted_by_rank(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.rank < b.rank; });
    return entries;
}

}  // namespace

std::vector<VimpEntry> VimpTable::by_rank() const { return sorted_by_rank(entries); }
std::vector<MinimalDepthEntry> MinimalDepthSummary::by_rank() const { return sorted_by_rank(entries); }

VimpTable vimp(const Forest& forest, const DataSet& data, std::size_t permutations, Rng& rng) {
    require_training_shape(forest, data);
    if (permutations < 1) throw InvalidArgument("permutations must be >= 1");
    const std::size_t n = data.n();
    const std::size_t p = data.p();
    const ColumnView base_view(data);
    const auto y = data.response();

    VimpTable table;
    table.permutations = permutations;
    table.baseline_mse = predict_oob(forest, base_view).mse(y);

    std::vector<std::vector<std::uint32_t>> perms(p * permutations);
    for (auto& perm : perms) {
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), 0u);
        rng.shuffle(std::span(perm));
    }

    std::vector<double> increase(perms.size());
    parallel_for(perms.size(), [&](std::size_t job) {
        const std::size_t feature = job / permutations;
        const auto source = data.column(feature);
        std::vector<double> shuffled(n);
        for (std::size_t i = 0; i < n; ++i) shuffled[i] = source[perms[job][i]];
        const auto oob = predict_oob(forest, base_view.with_column(feature, shuffled));
        increase[job] = oob.mse(y) - table.baseline_mse;
    });

    for (std::size_t j = 0; j < p; ++j) {
        double total = 0.0;
        for (std::size_t r = 0; r < permutations; ++r) total += increase[j * permutations + r];
        VimpEntry e;
        e.name = data.feature_names()[j];
        e.vimp = total / static_cast<double>(permutations);
        e.sign = e.vimp > 0 ? Sign::positive : (e.vimp < 0 ? Sign::negative : Sign::zero);
        table.entries.push_back(std::move(e));
    }
    const auto rank = ranks_by(table.entries, [](const VimpEntry& a, const VimpEntry& b) { return a.vimp > b.vimp; });
    for (std::size_t j = 0; j < p; ++j) table.entries[j].rank = rank[j];
    return table;
}

std::vector<double> first_split_depths(const Tree& tree, std::size_t p) {
    std::vector<double> depth(p, static_cast<double>(tree.max_depth) + 1.0);
    for (const auto& node : tree.nodes)
        if (!node.is_terminal())
            depth[node.split_feature] = std::min(depth[node.split_feature], static_cast<double>(node.depth));
    return depth;
}

MinimalDepthSummary minimal_depth(const Forest& forest) {
    const std::size_t p = forest.p();
    std::vector<double> total(p, 0.0);
    for (const auto& tree : forest.trees) {
        const auto d = first_split_depths(tree, p);
        for (std::size_t j = 0; j < p; ++j) total[j] += d[j];
    }

    MinimalDepthSummary out;
    double sum = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
        MinimalDepthEntry e;
        e.name = forest.feature_names[j];
        e.mean_min_depth = total[j] / static_cast<double>(forest.ntree());
        sum += e.mean_min_depth;
        out.entries.push_back(std::move(e));
    }
    out.threshold = sum / static_cast<double>(p);

    const auto rank = ranks_by(out.entries, [](const MinimalDepthEntry& a, const MinimalDepthEntry& b) {
        return a.mean_min_depth < b.mean_min_depth;
    });
    for (std::size_t j = 0; j < p; ++j) out.entries[j].rank = rank[j];
    for (const auto& e : out.by_rank())
        if (e.mean_min_depth < out.threshold) out.topvars.push_back(e.name);
    return out;
}

std::vector<RankRow> compare_rankings(const VimpTable& v, const MinimalDepthSummary& d) {
    if (v.entries.size() != d.entries.size()) throw InvalidArgument("VIMP and minimal depth cover different features");
    std::vector<RankRow> rows;
    for (const auto& de : d.entries) {
        auto it = std::find_if(v.entries.begin(), v.entries.end(),
                               [&](const VimpEntry& ve) { return ve.name == de.name; });
        if (it == v.entries.end()) throw InvalidArgument("feature " + de.name + " missing from VIMP table");
        rows.push_back({de.name, it->rank, de.rank, it->sign});
    }
    std::sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) { return a.depth_rank < b.depth_rank; });
    return rows;
}

InteractionMatrix interactions(const Forest& forest) {
    const std::size_t p = forest.p();
    std::vector<std::vector<double>> sum(p, std::vector<double>(p, 0.0));
    std::vector<std::size_t> count(p, 0);

    std::vector<std::uint32_t> parent;
    std::vector<double> first_rel(p);
    std::vector<std::uint32_t> stack;
    for (const auto& tree : forest.trees) {
        constexpr auto kNone = static_cast<std::uint32_t>(-1);
        parent.assign(tree.nodes.size(), kNone);
        for (std::uint32_t id = 0; id < tree.nodes.size(); ++id) {
            const Node& node = tree.nodes[id];
            if (node.is_terminal()) continue;
            parent[node.left] = id;
            parent[node.right] = id;
        }

        for (std::uint32_t id = 0; id < tree.nodes.size(); ++id) {
            const Node& top = tree.nodes[id];
            if (top.is_terminal()) continue;
            const std::uint32_t i = top.split_feature;
            bool maximal = true;
            for (auto a = parent[id]; a != kNone && maximal; a = parent[a])
                maximal = tree.nodes[a].split_feature != i;
            if (!maximal) continue;

            // scan the subtree: height and first relative depth per feature
            std::fill(first_rel.begin(), first_rel.end(), -1.0);
            std::uint32_t height = 0;
            stack.assign(1, id);
            while (!stack.empty()) {
                const Node& node = tree.nodes[stack.back()];
                stack.pop_back();
                const std::uint32_t rel = node.depth - top.depth;
                height = std::max(height, rel);
                if (node.is_terminal()) continue;
                double& f = first_rel[node.split_feature];
                if (f < 0 || rel < f) f = rel;
                stack.push_back(node.left);
                stack.push_back(node.right);
            }

            const double scale = static_cast<double>(height) + 1.0;
            for (std::size_t j = 0; j < p; ++j) {
                if (j == i) continue;
                sum[i][j] += first_rel[j] < 0 ? 1.0 : first_rel[j] / scale;
            }
            sum[i][i] += static_cast<double>(top.depth) / (static_cast<double>(tree.max_depth) + 1.0);
            ++count[i];
        }
    }

    InteractionMatrix out;
    out.names = forest.feature_names;
    out.subtree_counts = count;
    out.values.assign(p, std::vector<double>(p, 1.0));
    for (std::size_t i = 0; i < p; ++i) {
        if (count[i] == 0) continue;
        for (std::size_t j = 0; j < p; ++j) out.values[i][j] = sum[i][j] / static_cast<double>(count[i]);
    }
    return out;
}

}  // namespace arbor
