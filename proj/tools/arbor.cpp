// arbor: train a regression forest and emit interpretability tables and figures.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arbor/contour.hpp"
#include "arbor/csv.hpp"
#include "arbor/dataset.hpp"
#include "arbor/dependence.hpp"
#include "arbor/diagnostics.hpp"
#include "arbor/errors.hpp"
#include "arbor/figures.hpp"
#include "arbor/forest.hpp"
#include "arbor/rng.hpp"
#include "arbor/table.hpp"

namespace fs = std::filesystem;
using namespace arbor;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataArgs {
    std::string builtin;
    std::string path;
    std::string response;

    void add(CLI::App& cmd) {
        auto* b = cmd.add_option("--builtin", builtin, "Embedded data set")->check(CLI::IsMember({"boston"}));
        auto* d = cmd.add_option("--data", path, "CSV file with a header row")->check(CLI::ExistingFile);
        b->excludes(d);
        cmd.add_option("--response", response, "Response column (required with --data)");
    }

    void validate() const {
        if (builtin.empty() && path.empty()) throw UsageError("one of --builtin or --data is required");
        if (!path.empty() && response.empty()) throw UsageError("--response is required with --data");
    }

    DataSet load() const {
        if (!builtin.empty()) return builtin_boston();
        return load_csv(path, response);
    }
};

struct Formats {
    std::vector<std::string> list{"csv", "json", "svg"};
    bool has(std::string_view f) const { return std::find(list.begin(), list.end(), f) != list.end(); }

    void add(CLI::App& cmd) {
        cmd.add_option("--format", list, "Outputs to write: csv, json, svg")
            ->delimiter(',')
            ->check(CLI::IsMember({"csv", "json", "svg"}))
            ->capture_default_str();
    }
};

void write(const fs::path& path, std::string_view contents) {
    csv::write_file(path.string(), contents);
    std::cout << "wrote " << path.string() << "\n";
}

/// Writes the table as CSV and/or JSON, then draws the SVG from the CSV
/// bytes so `render` on the emitted CSV reproduces it exactly.
void emit(const fs::path& dir, const std::string& stem, const Table& table, FigureKind kind, const Formats& formats,
          const RenderOptions& options, const std::optional<std::string>& json = std::nullopt) {
    const std::string csv_text = table.to_csv();
    if (formats.has("csv")) write(dir / (stem + ".csv"), csv_text);
    if (formats.has("json")) write(dir / (stem + ".json"), json ? *json : table.to_json());
    if (formats.has("svg")) write(dir / (stem + ".svg"), render_figure(kind, Table::from_csv(csv_text), options));
}

Forest load_forest(const std::string& path) { return load(csv::read_file(path)); }

void prepare_out(const std::string& out) { fs::create_directories(out); }

// ---------------------------------------------------------------- train

struct TrainArgs {
    DataArgs data;
    ForestConfig config;
    std::string output;
};

int run_train(const TrainArgs& a) {
    const DataSet data = a.data.load();
    const Forest forest = train(data, a.config);
    csv::write_file(a.output, save(forest));
    std::cout << summarize(forest);
    if (forest.summary.rows_never_oob > 0)
        std::cerr << "warning: " << forest.summary.rows_never_oob
                  << " rows were never out of bag; OOB error excludes them\n";
    std::cout << "wrote " << a.output << "\n";
    return 0;
}

// ---------------------------------------------------------------- diagnose

struct DiagnoseArgs {
    std::string forest;
    DataArgs data;
    std::string out;
    Formats formats;
    bool error = false, predictions = false, vimp = false, mindepth = false, compare = false, interact = false;
    std::size_t permutations = 1;
    std::uint64_t seed = 1;
};

int run_diagnose(DiagnoseArgs a) {
    if (!(a.error || a.predictions || a.vimp || a.mindepth || a.compare || a.interact))
        a.error = a.predictions = a.vimp = a.mindepth = a.compare = a.interact = true;

    const Forest forest = load_forest(a.forest);
    const DataSet data = a.data.load();
    require_training_shape(forest, data);
    prepare_out(a.out);
    const fs::path dir = a.out;
    const RenderOptions options{data.response_name(), 0.5};

    if (a.error) emit(dir, "error", error_trace_table(oob_error_trace(forest, data)), FigureKind::error, a.formats, options);
    if (a.predictions)
        emit(dir, "predictions", oob_prediction_table(predict_oob(forest, data), data.response()), FigureKind::predictions,
             a.formats, options);

    std::optional<VimpTable> importance;
    std::optional<MinimalDepthSummary> depth;
    if (a.vimp || a.compare) {
        Rng rng(a.seed);
        importance = vimp(forest, data, a.permutations, rng);
    }
    if (a.mindepth || a.compare) depth = minimal_depth(forest);

    if (a.vimp) emit(dir, "vimp", vimp_table(*importance), FigureKind::vimp, a.formats, options, vimp_json(*importance));
    if (a.mindepth)
        emit(dir, "mindepth", minimal_depth_table(*depth), FigureKind::mindepth, a.formats, options,
             minimal_depth_json(*depth));
    if (a.compare)
        emit(dir, "compare", rank_comparison_table(compare_rankings(*importance, *depth)), FigureKind::compare, a.formats,
             options);
    if (a.interact) {
        const InteractionMatrix m = interactions(forest);
        emit(dir, "interact", interaction_table(m), FigureKind::interact, a.formats, options, interaction_json(m));
    }
    return 0;
}

// ---------------------------------------------------------------- depend

struct DependArgs {
    std::string forest;
    DataArgs data;
    std::string out;
    Formats formats;
    bool variable = false, partial = false, coplot = false, surface = false;
    std::vector<std::string> xvars;
    std::string by, yvar;
    std::size_t groups = 6, npts = 25, nx = 50, ny = 50;
    std::string grid = "quantile";
    double level_step = 0.5;

    void validate() const {
        if (!(variable || partial || coplot || surface))
            throw UsageError("select at least one of --variable --partial --coplot --surface");
        if ((coplot || surface) && xvars.size() != 1)
            throw UsageError("--coplot and --surface need exactly one --xvar");
        if (coplot && by.empty()) throw UsageError("--coplot requires --by");
        if (surface && yvar.empty()) throw UsageError("--surface requires --yvar");
    }
};

void warn_all(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run_depend(const DependArgs& a) {
    const Forest forest = load_forest(a.forest);
    const DataSet data = a.data.load();
    require_training_shape(forest, data);
    const GridMode grid = parse_grid_mode(a.grid);
    for (const auto& name : a.xvars) data.feature_index(name);
    if (!a.by.empty()) data.feature_index(a.by);
    if (!a.yvar.empty()) data.feature_index(a.yvar);

    std::vector<std::string> xvars = a.xvars;
    if (xvars.empty()) xvars = minimal_depth(forest).topvars;
    prepare_out(a.out);
    const fs::path dir = a.out;
    const RenderOptions options{data.response_name(), a.level_step};

    if (a.variable)
        emit(dir, "variable", dependence_table(variable_dependence(forest, data, xvars)), FigureKind::variable, a.formats,
             options);

    if (a.partial) {
        std::vector<PartialData> curves;
        for (const auto& x : xvars) {
            PartialData pd = partial_dependence(forest, data, x, {a.npts, grid, {}});
            warn_all(pd.warnings);
            emit(dir, "partial_" + x, partial_table(pd), FigureKind::partial, a.formats, options);
            curves.push_back(std::move(pd));
        }
        if (curves.size() > 1)
            emit(dir, "partial_panel", partial_panel_table(curves), FigureKind::partial_panel, a.formats, options);
    }

    if (a.coplot) {
        const std::string& x = xvars.front();
        const auto by = data.column(data.feature_index(a.by));
        const GroupLabels groups = cut_intervals(by, quantile_pts(by, a.groups, true));
        if (groups.groups() < a.groups)
            std::cerr << "warning: " << a.by << " yields " << groups.groups() << " distinct groups, not " << a.groups
                      << "\n";
        const std::string stem = x + "_by_" + a.by;

        DependenceData dep = variable_dependence(forest, data, {x});
        attach_groups(dep, groups, a.by + " ");
        emit(dir, "coplot_" + stem, dependence_table(dep), FigureKind::variable, a.formats, options);

        PartialData pd = partial_coplot(forest, data, x, groups, a.npts, grid);
        for (auto& p : pd.points) p.group = a.by + " " + p.group;
        warn_all(pd.warnings);
        emit(dir, "partial_coplot_" + stem, partial_table(pd), FigureKind::partial, a.formats, options);
    }

    if (a.surface) {
        const std::string& x = xvars.front();
        const SurfaceGrid s = partial_surface(forest, data, x, a.yvar, a.nx, a.ny, grid);
        const std::string stem = "surface_" + x + "_" + a.yvar;
        const Table table = surface_table(s);
        const std::string csv_text = table.to_csv();
        if (a.formats.has("csv")) write(dir / (stem + ".csv"), csv_text);
        if (a.formats.has("json")) write(dir / (stem + ".json"), surface_json(s));
        if (a.formats.has("svg"))
            write(dir / ("contour_" + x + "_" + a.yvar + ".svg"),
                  render_figure(FigureKind::contour, Table::from_csv(csv_text), options));
    }
    return 0;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string kind, in, out, response = "medv";
    double level_step = 0.5;
};

int run_render(const RenderArgs& a) {
    const FigureKind kind = parse_figure_kind(a.kind);
    const Table table = Table::from_csv(csv::read_file(a.in));
    csv::write_file(a.out, render_figure(kind, table, {a.response, a.level_step}));
    return 0;
}

void add_forest_and_out(CLI::App& cmd, std::string& forest, std::string& out) {
    cmd.add_option("--forest", forest, "Forest JSON written by train")->required()->check(CLI::ExistingFile);
    cmd.add_option("--out", out, "Output directory")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regression random forests with interpretability tables and SVG figures"};
    app.require_subcommand(1);

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand("train", "Grow a forest and print its summary");
    train_args.data.add(*train_cmd);
    train_cmd->add_option("--ntree", train_args.config.ntree, "Number of trees")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24))
        ->capture_default_str();
    train_cmd->add_option("--mtry", train_args.config.mtry, "Candidate features per split (0: ceil(p/3))")
        ->capture_default_str();
    train_cmd->add_option("--nodesize", train_args.config.nodesize, "Minimum terminal node size")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24))
        ->capture_default_str();
    train_cmd->add_option("--seed", train_args.config.seed, "Random seed")->capture_default_str();
    train_cmd->add_option("--bootstrap-n", train_args.config.bootstrap_n, "Bootstrap sample size (0: n)")
        ->capture_default_str();
    train_cmd->add_option("-o,--output", train_args.output, "Forest JSON path")->required();

    DiagnoseArgs diag;
    auto* diag_cmd = app.add_subcommand("diagnose", "OOB error, predictions, VIMP, minimal depth, interactions");
    add_forest_and_out(*diag_cmd, diag.forest, diag.out);
    diag.data.add(*diag_cmd);
    diag.formats.add(*diag_cmd);
    diag_cmd->add_flag("--error", diag.error, "OOB error against number of trees");
    diag_cmd->add_flag("--predictions", diag.predictions, "OOB predicted values");
    diag_cmd->add_flag("--vimp", diag.vimp, "Permutation importance");
    diag_cmd->add_flag("--mindepth", diag.mindepth, "Minimal depth and threshold");
    diag_cmd->add_flag("--compare", diag.compare, "VIMP rank against minimal depth rank");
    diag_cmd->add_flag("--interact", diag.interact, "Pairwise minimal depth interactions");
    diag_cmd->add_option("--permutations", diag.permutations, "Permutations per feature for VIMP")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000}))
        ->capture_default_str();
    diag_cmd->add_option("--seed", diag.seed, "Seed for VIMP permutations")->capture_default_str();

    DependArgs dep;
    auto* dep_cmd = app.add_subcommand("depend", "Variable, partial, coplot and surface dependence");
    add_forest_and_out(*dep_cmd, dep.forest, dep.out);
    dep.data.add(*dep_cmd);
    dep.formats.add(*dep_cmd);
    dep_cmd->add_flag("--variable", dep.variable, "Per-observation OOB predictions against each xvar");
    dep_cmd->add_flag("--partial", dep.partial, "Partial dependence curves");
    dep_cmd->add_flag("--coplot", dep.coplot, "Variable and partial dependence conditioned on --by groups");
    dep_cmd->add_flag("--surface", dep.surface, "Partial dependence surface over --xvar and --yvar");
    dep_cmd->add_option("--xvar", dep.xvars, "Covariates (default: minimal depth topvars)")->delimiter(',');
    dep_cmd->add_option("--by", dep.by, "Conditioning variable for --coplot");
    dep_cmd->add_option("--yvar", dep.yvar, "Second surface variable");
    dep_cmd->add_option("--groups", dep.groups, "Conditioning groups")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}))
        ->capture_default_str();
    dep_cmd->add_option("--npts", dep.npts, "Partial grid points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
        ->capture_default_str();
    dep_cmd->add_option("--nx", dep.nx, "Surface grid points along xvar")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000}))
        ->capture_default_str();
    dep_cmd->add_option("--ny", dep.ny, "Surface grid points along yvar")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000}))
        ->capture_default_str();
    dep_cmd->add_option("--grid", dep.grid, "Grid placement")
        ->check(CLI::IsMember({"quantile", "range"}))
        ->capture_default_str();
    dep_cmd->add_option("--level-step", dep.level_step, "Contour spacing in response units")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    RenderArgs ren;
    auto* ren_cmd = app.add_subcommand("render", "Redraw an SVG from an emitted CSV table");
    ren_cmd->add_option("--kind", ren.kind, "Figure kind")
        ->required()
        ->check(CLI::IsMember({"error", "predictions", "vimp", "mindepth", "compare", "interact", "variable", "partial",
                               "partial_panel", "contour"}));
    ren_cmd->add_option("--in", ren.in, "Table CSV")->required()->check(CLI::ExistingFile);
    ren_cmd->add_option("--out", ren.out, "SVG path")->required();
    ren_cmd->add_option("--response", ren.response, "Response name for axis labels")->capture_default_str();
    ren_cmd->add_option("--level-step", ren.level_step, "Contour spacing")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (*train_cmd) train_args.data.validate();
        if (*diag_cmd) diag.data.validate();
        if (*dep_cmd) {
            dep.data.validate();
            dep.validate();
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return kExitUsage;
    }

    try {
        if (*train_cmd) return run_train(train_args);
        if (*diag_cmd) return run_diagnose(diag);
        if (*dep_cmd) return run_depend(dep);
        if (*ren_cmd) return run_render(ren);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
