#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "inspath/cli.hpp"
#include "inspath/errors.hpp"
#include "support/meshes.hpp"

using namespace inspath;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("inspath-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// execute() writes reports to stdout; capture them for assertions.
struct CaptureStdout {
    std::ostringstream sink;
    std::streambuf* saved;
    CaptureStdout() : saved(std::cout.rdbuf(sink.rdbuf())) {}
    ~CaptureStdout() { std::cout.rdbuf(saved); }
};

}  // namespace

TEST_CASE("solve arguments map onto the plan") {
    const auto plan = parse_args(
        {"solve", "--solver", "portfolio", "--time-limit", "5", "--seed", "7", "in.instance"});
    CHECK(plan.command == Command::Solve);
    CHECK(plan.solve.solver == "portfolio");
    CHECK(plan.solve.config.time_limit_seconds == 5.0);
    CHECK(plan.solve.config.seed == 7);
    CHECK(plan.solve.input == "in.instance");
}

TEST_CASE("bench arguments including the default run count") {
    const auto plan = parse_args({"bench", "--runs", "15", "--solver", "held_karp", "--solver",
                                  "simulated_annealing", "a.instance", "b.instance"});
    CHECK(plan.command == Command::Bench);
    CHECK(plan.bench.runs == 15);
    CHECK(plan.bench.solvers == std::vector<std::string>{"held_karp", "simulated_annealing"});
    CHECK(plan.bench.inputs == std::vector<std::string>{"a.instance", "b.instance"});
    CHECK(plan.bench.baseline == "held_karp");

    CHECK(BenchOptions{}.runs == 15);  // fifteen-run default
}

TEST_CASE("bad arguments raise UsageError") {
    CHECK_THROWS_AS(parse_args({"solve", "--time-limit", "-1", "in.instance"}), UsageError);
    CHECK_THROWS_AS(parse_args({"solve", "--no-such-flag", "in.instance"}), UsageError);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_args({}), UsageError);
    CHECK_THROWS_AS(parse_args({"solve", "--solver", "magic", "in.instance"}), UsageError);
    CHECK_THROWS_AS(parse_args({"bench", "--solver", "held_karp", "--timing", "fuzzy", "a"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--max-n", "99"}), UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--seeds", "9..1"}), UsageError);
}

TEST_CASE("gen then solve round trip through files") {
    TempDir dir;
    const auto instance_path = dir.file("s.instance");

    auto gen_plan = parse_args(
        {"gen", "--kind", "sphere", "--n", "20", "--knn", "4", "--seed", "1", "-o", instance_path});
    CHECK(execute(gen_plan) == 0);
    REQUIRE(fs::exists(instance_path));
    const std::string first_bytes = slurp(instance_path);

    // Re-running reproduces the file byte for byte.
    CHECK(execute(gen_plan) == 0);
    CHECK(slurp(instance_path) == first_bytes);

    auto solve_plan = parse_args({"solve", "--solver", "held_karp", "--geometry",
                                  dir.file("route.txt"), instance_path});
    std::string report;
    {
        CaptureStdout capture;
        CHECK(execute(solve_plan) == 0);
        report = capture.sink.str();
    }
    CHECK(report.find("solver: held_karp") != std::string::npos);
    CHECK(report.find("optimal: true") != std::string::npos);
    CHECK(report.find("cost: ") != std::string::npos);
    CHECK(report.find("expanded_waypoints: ") != std::string::npos);
    CHECK(fs::exists(dir.file("route.txt")));
}

TEST_CASE("solve reports an approximation ratio against a baseline") {
    TempDir dir;
    const auto instance_path = dir.file("t.instance");
    CHECK(execute(parse_args({"gen", "--kind", "torus", "--n", "10", "--knn", "3", "--seed", "2",
                              "-o", instance_path})) == 0);

    auto plan = parse_args({"solve", "--solver", "local_search", "--baseline", "held_karp",
                            instance_path});
    std::string report;
    {
        CaptureStdout capture;
        CHECK(execute(plan) == 0);
        report = capture.sink.str();
    }
    CHECK(report.find("baseline: held_karp") != std::string::npos);
    CHECK(report.find("ar: ") != std::string::npos);
}

TEST_CASE("bench writes csv and markdown files atomically") {
    TempDir dir;
    const auto a = dir.file("a.instance");
    const auto b = dir.file("b.instance");
    CHECK(execute(parse_args(
              {"gen", "--kind", "sphere", "--n", "8", "--knn", "3", "--seed", "3", "-o", a})) == 0);
    CHECK(execute(parse_args({"gen", "--kind", "uniform-cloud", "--n", "9", "--knn", "3", "--seed",
                              "4", "-o", b})) == 0);

    auto bench_plan = parse_args({"bench", "--runs", "2", "--solver", "held_karp", "--solver",
                                  "local_search", "--baseline", "held_karp", "--timing", "none",
                                  "--master-seed", "5", "--csv", dir.file("out.csv"), "--md",
                                  dir.file("out.md"), a, b});
    CHECK(execute(bench_plan) == 0);

    const std::string csv = slurp(dir.file("out.csv"));
    CHECK(csv.rfind("instance,nodes,edges,solver,run,seed,cost,runtime_seconds,ar\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 2 * 2);
    CHECK(slurp(dir.file("out.md")).find("| Instance (nodes, edges) |") == 0);
    CHECK_FALSE(fs::exists(dir.file("out.csv") + ".tmp"));

    // Identical plan, identical bytes.
    const std::string csv_before = csv;
    CHECK(execute(bench_plan) == 0);
    CHECK(slurp(dir.file("out.csv")) == csv_before);
}

TEST_CASE("missing input files exit with a runtime failure") {
    auto plan = parse_args({"solve", "--solver", "held_karp", "/nonexistent/nope.instance"});
    CHECK(execute(plan) == 1);

    auto bad_output = parse_args({"gen", "--kind", "sphere", "--n", "4", "--knn", "2", "--seed",
                                  "0", "-o", "/nonexistent/dir/x.instance"});
    CHECK(execute(bad_output) == 1);
}

TEST_CASE("verify passes on healthy solvers") {
    auto plan = parse_args({"verify", "--max-n", "5", "--seeds", "0..1"});
    CaptureStdout capture;
    CHECK(execute(plan) == 0);
    CHECK(capture.sink.str().find(" 0 failed") != std::string::npos);
}

TEST_CASE("ingest turns a mesh into an instance document") {
    TempDir dir;
    const auto mesh_path = dir.file("cube.stl");
    {
        std::ofstream out(mesh_path, std::ios::binary);
        out << testsupport::unit_cube_stl_ascii();
    }
    auto plan = parse_args({"ingest", mesh_path, "-o", dir.file("cube.instance"), "--max-area",
                            "10", "--max-normal-dev", "0.5", "--standoff", "0.2", "--knn", "3"});
    CHECK(execute(plan) == 0);

    const std::string bytes = slurp(dir.file("cube.instance"));
    CHECK(bytes.find("\"name\": \"cube\"") != std::string::npos);
    CHECK(bytes.find("\"n\": 6") != std::string::npos);  // six faces -> six patches
}

TEST_CASE("ingest honors an explicit binary STL format") {
    TempDir dir;
    const auto mesh_path = dir.file("cube.bin");  // extension gives no hint
    {
        std::ofstream out(mesh_path, std::ios::binary);
        out << testsupport::unit_cube_stl_binary();
    }
    auto plan = parse_args({"ingest", mesh_path, "--format", "stl-binary", "-o",
                            dir.file("bin.instance"), "--max-area", "10", "--max-normal-dev",
                            "0.5", "--knn", "3"});
    CHECK(execute(plan) == 0);
    CHECK(slurp(dir.file("bin.instance")).find("\"n\": 6") != std::string::npos);

    // Forcing the wrong format is a runtime failure, not a crash.
    auto wrong = parse_args({"ingest", mesh_path, "--format", "obj", "-o",
                             dir.file("wrong.instance")});
    CHECK(execute(wrong) == 1);
    CHECK_FALSE(fs::exists(dir.file("wrong.instance")));
}
