#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/dataset.hpp"
#include "arbor/rng.hpp"

namespace arbor {

/// Read-only column-major feature matrix. Columns may come from a DataSet or
/// be substituted (a permuted column for VIMP, a constant column for partial
/// dependence) without copying the rest of the table.
class ColumnView {
public:
    ColumnView() = default;
    explicit ColumnView(const DataSet& data);
    ColumnView(std::vector<std::span<const double>> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t features() const { return columns_.size(); }
    double operator()(std::size_t row, std::size_t feature) const { return columns_[feature][row]; }
    std::span<const double> column(std::size_t feature) const { return columns_[feature]; }

    /// Copy of this view with one column replaced. `values` must outlive it.
    ColumnView with_column(std::size_t feature, std::span<const double> values) const;

private:
    std::vector<std::span<const double>> columns_;
    std::size_t rows_ = 0;
};

struct ForestConfig {
    std::size_t ntree = 1000;
    std::size_t mtry = 0;         // 0: ceil(p / 3)
    std::size_t nodesize = 5;
    std::uint64_t seed = 1;
    std::size_t bootstrap_n = 0;  // 0: n

    /// Copy with the 0-valued defaults resolved against the data shape.
    ForestConfig resolved(std::size_t n, std::size_t p) const;
    /// Throws InvalidArgument naming the offending field.
    void validate(std::size_t p) const;
};

struct Node {
    enum class Kind : std::uint8_t { internal, terminal };

    Kind kind = Kind::terminal;
    std::uint32_t split_feature = 0;
    double split_value = 0.0;  // rows with x <= split_value go left
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    double prediction = 0.0;   // in-bag mean; meaningful on terminals
    std::uint32_t depth = 0;
    std::uint32_t inbag_count = 0;

    bool is_terminal() const { return kind == Kind::terminal; }
};

struct Tree {
    std::vector<Node> nodes;
    std::uint32_t root = 0;
    std::vector<std::uint32_t> inbag;  // bootstrap multiplicity per training row
    std::uint32_t max_depth = 0;

    const Node& leaf_for(const ColumnView& x, std::size_t row) const {
        const Node* node = &nodes[root];
        while (!node->is_terminal())
            node = &nodes[x(row, node->split_feature) <= node->split_value ? node->left : node->right];
        return *node;
    }
    double predict(const ColumnView& x, std::size_t row) const { return leaf_for(x, row).prediction; }

    std::size_t terminal_count() const;
};

struct TrainingSummary {
    std::size_t n = 0;
    std::size_t p = 0;
    double avg_terminal_nodes = 0.0;
    double oob_mse = 0.0;
    std::size_t rows_never_oob = 0;
};

struct Forest {
    ForestConfig config;
    std::vector<Tree> trees;
    std::vector<std::string> feature_names;
    std::vector<FeatureKind> feature_kinds;
    std::string response_name;
    TrainingSummary summary;

    std::size_t ntree() const { return trees.size(); }
    std::size_t p() const { return feature_names.size(); }
    /// Throws InvalidArgument for an unknown name.
    std::size_t feature_index(std::string_view name) const;
};

/// A candidate binary split of a node.
struct Split {
    std::size_t feature = 0;
    double threshold = 0.0;
    /// Sum of squared errors of the two children around their means.
    double child_sse = 0.0;
    std::size_t left_count = 0;
};

/// Best MSE-reducing split of `members` (row ids, repeated by bootstrap
/// multiplicity) over `features`.
///
/// Thresholds are midpoints between adjacent distinct member values. Both
/// children must hold >= nodesize members and the split must lower the SSE
/// below that of the parent. Ties within a relative 1e-12 go to the lowest
/// feature index, then the smallest threshold.
std::optional<Split> best_split(const ColumnView& x, std::span<const double> y,
                                std::span<const std::uint32_t> members, std::span<const std::size_t> features,
                                std::size_t nodesize);

/// `bootstrap_n` uniform draws with replacement over n rows.
std::vector<std::uint32_t> bootstrap_sample(Rng& rng, std::size_t n, std::size_t bootstrap_n);

/// Grows one CART regression tree on the given bootstrap multiplicities.
/// `config` must already be resolved.
Tree grow_tree(const DataSet& data, const ForestConfig& config, std::vector<std::uint32_t> inbag, Rng& rng);

/// Trains `config.ntree` trees; tree t uses stream Rng(seed).split(t), so the
/// result is identical for any worker count.
Forest train(const DataSet& data, const ForestConfig& config);

/// Ensemble mean over all trees. Throws InvalidArgument on a feature-count
/// mismatch or a non-finite value.
std::vector<double> predict(const Forest& forest, const ColumnView& rows);
double predict_row(const Forest& forest, const ColumnView& rows, std::size_t row);

struct OobPredictions {
    std::vector<double> prediction;        // NaN where no tree left the row out
    std::vector<std::uint32_t> tree_count; // trees for which the row was OOB

    std::size_t flagged() const;
    /// Mean squared error over rows with at least one OOB tree.
    double mse(std::span<const double> response) const;
};

OobPredictions predict_oob(const Forest& forest, const DataSet& data);
/// Same as above with an explicit (possibly column-substituted) matrix whose
/// rows are in training order.
OobPredictions predict_oob(const Forest& forest, const ColumnView& rows);

struct OobErrorTrace {
    std::vector<double> mse;            // entry k: forest of the first k+1 trees; NaN if no row has OOB yet
    std::vector<std::size_t> rows_used;
    std::vector<bool> partial;          // more than 1% of rows still without an OOB tree
};

OobErrorTrace oob_error_trace(const Forest& forest, const DataSet& data);

/// Print block modelled on the randomForestSRC summary.
std::string summarize(const Forest& forest);

/// Versioned JSON encoding; see kForestFormatVersion.
inline constexpr int kForestFormatVersion = 1;
std::string save(const Forest& forest);
/// Throws FormatError on malformed, truncated or wrong-version input.
Forest load(std::string_view bytes);

/// Training-set shape check shared by the OOB consumers.
void require_training_shape(const Forest& forest, const DataSet& data);

}  // namespace arbor
