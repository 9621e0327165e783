#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inspath/generate.hpp"
#include "inspath/segmentation.hpp"
#include "inspath/solver.hpp"

namespace inspath {

enum class Command { Ingest, Gen, Solve, Bench, Verify };

struct IngestOptions {
    std::string input;
    std::string output;
    std::string format = "auto";  // stl-ascii | stl-binary | obj | auto
    std::string name;             // defaults to the input stem
    SegmentationConfig segmentation;
};

struct GenOptions {
    std::string kind = "sphere";
    int n = 50;
    int knn = 4;
    std::uint64_t seed = 0;
    std::string output;
};

struct SolveOptions {
    std::string input;
    std::string solver = "portfolio";
    std::string baseline;         // optional solver id for an AR line
    std::string geometry_output;  // optional route-geometry export
    SolverConfig config;
};

struct BenchOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> solvers;
    std::string baseline = "held_karp";
    int runs = 15;
    std::uint64_t master_seed = 0;
    std::string csv_output;  // stdout when empty
    std::string md_output;   // stdout when empty
    std::string timing = "measured";  // measured | none
    SolverConfig config;
};

struct VerifyOptions {
    int max_n = 9;
    std::string seeds = "0..9";  // "a..b" or a single integer
    int knn = 3;
};

struct CommandPlan {
    Command command = Command::Solve;
    int verbosity = 0;
    IngestOptions ingest;
    GenOptions gen;
    SolveOptions solve;
    BenchOptions bench;
    VerifyOptions verify;
};

// argv without the program name. Throws UsageError (exit code 2) on unknown
// flags or invalid values; file existence is checked at execution time.
CommandPlan parse_args(const std::vector<std::string>& argv);

// Returns the process exit code: 0 success, 1 runtime failure, 3 verify
// failures. Output files are written atomically (temp then rename).
int execute(const CommandPlan& plan);

std::string usage_synopsis();

}  // namespace inspath
