#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("arbor_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, std::string* output = nullptr) {
    const fs::path out = workdir() / "stdout.txt";
    const std::string cmd = std::string(ARBOR_CLI) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string forest_path() {
    static const std::string path = [] {
        const std::string p = (workdir() / "f.json").string();
        REQUIRE(run("train --builtin boston --ntree 100 --seed 7 -o " + p) == 0);
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("train writes a forest and prints the summary") {
    std::string out;
    const std::string f = (workdir() / "t.json").string();
    CHECK(run("train --builtin boston --seed 7 --ntree 50 -o " + f, &out) == 0);
    CHECK(fs::exists(f));
    CHECK(out.find("Sample size: 506") != std::string::npos);
    CHECK(out.find("Number of trees: 50") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    std::string out;
    const std::string csv = (workdir() / "d.csv").string();
    std::ofstream(csv) << "a,y\n1,2\n3,4\n5,6\n";
    CHECK(run("train --data " + csv + " -o " + (workdir() / "x.json").string(), &out) == 2);
    CHECK(out.find("--response") != std::string::npos);

    CHECK(run("train --builtin boston --ntree 0 -o x.json", &out) == 2);
    CHECK(out.find("--ntree") != std::string::npos);

    CHECK(run("train --builtin boston --bogus -o x.json") == 2);
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("train --builtin iris -o x.json") == 2);
    CHECK(run("depend --forest " + forest_path() + " --builtin boston --out " + workdir().string()) == 2);
    CHECK(run("depend --forest " + forest_path() + " --builtin boston --out " + workdir().string() +
              " --surface --xvar lstat") == 2);
    CHECK(run("depend --forest " + forest_path() + " --builtin boston --out " + workdir().string() +
              " --partial --grid even") == 2);
    CHECK(run("diagnose --forest " + forest_path() + " --builtin boston --out " + workdir().string() +
              " --format pdf") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("runtime and data errors exit with 1") {
    std::string out;
    const fs::path bad = workdir() / "bad.csv";
    std::ofstream(bad) << "a,y\n1,2\n,4\n";
    CHECK(run("train --data " + bad.string() + " --response y -o " + (workdir() / "b.json").string(), &out) == 1);
    CHECK(out.find("line 3") != std::string::npos);

    const fs::path corrupt = workdir() / "corrupt.json";
    std::ofstream(corrupt) << "{\"format_version\": 1";
    CHECK(run("diagnose --forest " + corrupt.string() + " --builtin boston --out " + workdir().string()) == 1);

    // forest trained on other data
    const fs::path small = workdir() / "small.csv";
    std::ofstream(small) << "a,y\n1,2\n3,4\n5,6\n7,9\n";
    const std::string sf = (workdir() / "small.json").string();
    REQUIRE(run("train --data " + small.string() + " --response y --ntree 3 --nodesize 1 -o " + sf) == 0);
    CHECK(run("diagnose --forest " + sf + " --builtin boston --out " + workdir().string()) == 1);

    CHECK(run("depend --forest " + forest_path() + " --builtin boston --out " + workdir().string() +
              " --partial --xvar nosuch") == 1);
}

TEST_CASE("diagnose writes every table and figure") {
    const fs::path out = workdir() / "diag";
    REQUIRE(run("diagnose --forest " + forest_path() + " --builtin boston --out " + out.string()) == 0);
    for (const char* stem : {"error", "predictions", "vimp", "mindepth", "compare", "interact"})
        for (const char* ext : {".csv", ".json", ".svg"}) CHECK(fs::exists(out / (std::string(stem) + ext)));

    const fs::path only = workdir() / "diag_vimp";
    REQUIRE(run("diagnose --forest " + forest_path() + " --builtin boston --out " + only.string() +
                " --vimp --format csv") == 0);
    CHECK(fs::exists(only / "vimp.csv"));
    CHECK_FALSE(fs::exists(only / "vimp.svg"));
    CHECK_FALSE(fs::exists(only / "error.csv"));
}

TEST_CASE("depend outputs and render reproduces SVG bytes") {
    const fs::path out = workdir() / "dep";
    REQUIRE(run("depend --forest " + forest_path() + " --builtin boston --out " + out.string() +
                " --partial --xvar lstat") == 0);
    const std::string csv = slurp(out / "partial_lstat.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);  // header + 25 points

    const fs::path again = workdir() / "again.svg";
    REQUIRE(run("render --kind partial --in " + (out / "partial_lstat.csv").string() + " --out " + again.string()) == 0);
    CHECK(slurp(again) == slurp(out / "partial_lstat.svg"));

    REQUIRE(run("depend --forest " + forest_path() + " --builtin boston --out " + out.string() +
                " --surface --xvar lstat --yvar rm --nx 10 --ny 8 --level-step 1") == 0);
    const std::string surf = slurp(out / "surface_lstat_rm.csv");
    CHECK(std::count(surf.begin(), surf.end(), '\n') == 81);
    REQUIRE(run("render --kind contour --level-step 1 --in " + (out / "surface_lstat_rm.csv").string() + " --out " +
                again.string()) == 0);
    CHECK(slurp(again) == slurp(out / "contour_lstat_rm.svg"));

    CHECK(run("render --kind vimp --in " + (out / "surface_lstat_rm.csv").string() + " --out " + again.string()) == 1);
}
