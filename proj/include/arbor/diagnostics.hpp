#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arbor/dataset.hpp"
#include "arbor/forest.hpp"
#include "arbor/rng.hpp"

namespace arbor {

enum class Sign { negative, zero, positive };
std::string_view to_string(Sign sign);

struct VimpEntry {
    std::string name;
    double vimp = 0.0;  // increase in OOB MSE under permutation
    Sign sign = Sign::zero;
    std::size_t rank = 0;  // 1 = largest vimp
};

/// Entries are in feature order; use `by_rank()` for the sorted view.
struct VimpTable {
    std::vector<VimpEntry> entries;
    double baseline_mse = 0.0;
    std::size_t permutations = 1;

    std::vector<VimpEntry> by_rank() const;
};

/// Permutation importance through OOB ensemble predictions.
///
/// Permutations are drawn from `rng` serially in feature order before any
/// evaluation, so the table only depends on (forest, data, permutations, rng
/// state).
VimpTable vimp(const Forest& forest, const DataSet& data, std::size_t permutations, Rng& rng);

struct MinimalDepthEntry {
    std::string name;
    double mean_min_depth = 0.0;
    std::size_t rank = 0;  // 1 = shallowest
};

struct MinimalDepthSummary {
    std::vector<MinimalDepthEntry> entries;  // feature order
    double threshold = 0.0;
    std::vector<std::string> topvars;        // strictly below threshold, ascending depth

    std::vector<MinimalDepthEntry> by_rank() const;
};

/// Depth of the shallowest split on each feature in one tree; features that
/// never split get tree.max_depth + 1.
std::vector<double> first_split_depths(const Tree& tree, std::size_t p);

MinimalDepthSummary minimal_depth(const Forest& forest);

struct RankRow {
    std::string name;
    std::size_t vimp_rank = 0;
    std::size_t depth_rank = 0;
    Sign vimp_sign = Sign::zero;
};

/// Ordered by depth_rank. Throws InvalidArgument if the feature sets differ.
std::vector<RankRow> compare_rankings(const VimpTable& v, const MinimalDepthSummary& d);

struct InteractionMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;  // values[i][j]: depth of j inside i's maximal subtrees
    std::vector<std::size_t> subtree_counts;  // maximal subtrees found per row feature
};

/// Pairwise minimal-depth interactions.
///
/// For row i, every maximal subtree of i in every tree contributes equally.
/// Off-diagonal [i][j]: levels below the subtree root of the first split on
/// j, divided by (subtree height + 1), or 1.0 if j never splits inside.
/// Diagonal [i][i]: depth of the subtree root divided by (tree max_depth +
/// 1). A feature with no maximal subtree anywhere gets a row of 1.0.
InteractionMatrix interactions(const Forest& forest);

}  // namespace arbor
