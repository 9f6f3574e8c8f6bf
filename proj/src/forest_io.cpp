#include <json.hpp>

#include "arbor/errors.hpp"
#include "arbor/forest.hpp"

namespace arbor {

using nlohmann::json;

std::string save(const Forest& forest) {
    json doc;
    doc["format_version"] = kForestFormatVersion;
    doc["config"] = {{"ntree", forest.config.ntree},
                     {"mtry", forest.config.mtry},
                     {"nodesize", forest.config.nodesize},
                     {"seed", forest.config.seed},
                     {"bootstrap_n", forest.config.bootstrap_n}};
    doc["feature_names"] = forest.feature_names;
    json kinds = json::array();
    for (auto k : forest.feature_kinds) kinds.push_back(to_string(k));
    doc["feature_kinds"] = std::move(kinds);
    doc["response_name"] = forest.response_name;

    json trees = json::array();
    for (const auto& tree : forest.trees) {
        json nodes = json::array();
        for (const auto& node : tree.nodes) {
            json j = {{"depth", node.depth}, {"count", node.inbag_count}};
            if (node.is_terminal()) {
                j["prediction"] = node.prediction;
            } else {
                j["feature"] = node.split_feature;
                j["threshold"] = node.split_value;
                j["left"] = node.left;
                j["right"] = node.right;
            }
            nodes.push_back(std::move(j));
        }
        trees.push_back({{"root", tree.root}, {"nodes", std::move(nodes)}, {"inbag", tree.inbag}});
    }
    doc["trees"] = std::move(trees);
    doc["training_summary"] = {{"n", forest.summary.n},
                               {"p", forest.summary.p},
                               {"avg_terminal_nodes", forest.summary.avg_terminal_nodes},
                               {"oob_mse", forest.summary.oob_mse},
                               {"rows_never_oob", forest.summary.rows_never_oob}};
    return doc.dump();
}

namespace {

Tree decode_tree(const json& j, std::size_t p, std::size_t tree_index) {
    const std::string where = "tree " + std::to_string(tree_index) + ": ";
    Tree tree;
    tree.root = j.at("root").get<std::uint32_t>();
    tree.inbag = j.at("inbag").get<std::vector<std::uint32_t>>();
    const auto& nodes = j.at("nodes");
    if (!nodes.is_array() || nodes.empty()) throw FormatError(where + "no nodes");
    tree.nodes.reserve(nodes.size());
    for (const auto& jn : nodes) {
        Node node;
        node.depth = jn.at("depth").get<std::uint32_t>();
        node.inbag_count = jn.at("count").get<std::uint32_t>();
        if (jn.contains("prediction")) {
            node.kind = Node::Kind::terminal;
            node.prediction = jn.at("prediction").get<double>();
        } else {
            node.kind = Node::Kind::internal;
            node.split_feature = jn.at("feature").get<std::uint32_t>();
            node.split_value = jn.at("threshold").get<double>();
            node.left = jn.at("left").get<std::uint32_t>();
            node.right = jn.at("right").get<std::uint32_t>();
        }
        tree.nodes.push_back(node);
    }
    if (tree.root >= tree.nodes.size()) throw FormatError(where + "root out of range");
    for (const auto& node : tree.nodes) {
        tree.max_depth = std::max(tree.max_depth, node.depth);
        if (node.is_terminal()) continue;
        if (node.split_feature >= p) throw FormatError(where + "split feature out of range");
        if (node.left >= tree.nodes.size() || node.right >= tree.nodes.size())
            throw FormatError(where + "child id out of range");
        if (tree.nodes[node.left].depth != node.depth + 1 || tree.nodes[node.right].depth != node.depth + 1)
            throw FormatError(where + "child depth inconsistent with parent");
    }
    return tree;
}

}  // namespace

Forest load(std::string_view bytes) {
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("forest file is not valid JSON: ") + e.what());
    }
    try {
        const int version = doc.at("format_version").get<int>();
        if (version != kForestFormatVersion)
            throw FormatError("unsupported forest format_version " + std::to_string(version) + " (expected " +
                              std::to_string(kForestFormatVersion) + ")");

        Forest forest;
        const auto& cfg = doc.at("config");
        forest.config.ntree = cfg.at("ntree").get<std::size_t>();
        forest.config.mtry = cfg.at("mtry").get<std::size_t>();
        forest.config.nodesize = cfg.at("nodesize").get<std::size_t>();
        forest.config.seed = cfg.at("seed").get<std::uint64_t>();
        forest.config.bootstrap_n = cfg.at("bootstrap_n").get<std::size_t>();
        forest.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
        for (const auto& k : doc.at("feature_kinds")) {
            const auto s = k.get<std::string>();
            if (s == "boolean") forest.feature_kinds.push_back(FeatureKind::boolean);
            else if (s == "continuous") forest.feature_kinds.push_back(FeatureKind::continuous);
            else throw FormatError("unknown feature kind: " + s);
        }
        if (forest.feature_kinds.size() != forest.feature_names.size())
            throw FormatError("feature_kinds and feature_names differ in length");
        forest.response_name = doc.at("response_name").get<std::string>();

        const auto& trees = doc.at("trees");
        for (std::size_t t = 0; t < trees.size(); ++t)
            forest.trees.push_back(decode_tree(trees[t], forest.feature_names.size(), t));
        if (forest.trees.size() != forest.config.ntree)
            throw FormatError("forest declares ntree=" + std::to_string(forest.config.ntree) + " but holds " +
                              std::to_string(forest.trees.size()) + " trees");

        const auto& s = doc.at("training_summary");
        forest.summary.n = s.at("n").get<std::size_t>();
        forest.summary.p = s.at("p").get<std::size_t>();
        forest.summary.avg_terminal_nodes = s.at("avg_terminal_nodes").get<double>();
        forest.summary.oob_mse = s.at("oob_mse").is_null() ? std::nan("") : s.at("oob_mse").get<double>();
        forest.summary.rows_never_oob = s.value("rows_never_oob", std::size_t{0});
        for (const auto& tree : forest.trees)
            if (tree.inbag.size() != forest.summary.n) throw FormatError("in-bag vector length differs from n");
        return forest;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed forest document: ") + e.what());
    }
}

}  // namespace arbor
