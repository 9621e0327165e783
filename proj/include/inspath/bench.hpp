#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inspath/instance.hpp"
#include "inspath/metric.hpp"
#include "inspath/solver.hpp"

namespace inspath {

struct SolverSpec {
    std::string id;
    SolverConfig config;
};

enum class TimingMode {
    Measured,  // wall clock around the solver call
    None,      // record zero, keeping the CSV byte-reproducible
};

struct BenchPlan {
    std::vector<Instance> instances;
    std::vector<SolverSpec> solvers;
    int runs_per_pair = 15;
    // Solver id defining the reference cost, or "stored" to read a
    // `baseline_cost` metadata entry from each instance.
    std::string baseline = "held_karp";
    std::uint64_t master_seed = 0;
    TimingMode timing = TimingMode::Measured;
};

struct BenchRecord {
    std::string instance;
    int nodes = 0;
    int edges = 0;
    std::string solver;
    int run = 0;
    std::uint64_t seed = 0;
    double cost = 0.0;
    double runtime_seconds = 0.0;
    double ar = 1.0;
};

struct SolverSummary {
    std::string solver;
    double mean_ar = 0.0;
    double mean_runtime = 0.0;
    double best_ar = 0.0;
    double cost_stddev = 0.0;  // population standard deviation
};

struct SummaryRow {
    std::string instance;
    int nodes = 0;
    int edges = 0;
    std::vector<SolverSummary> solvers;  // plan declaration order
};

// baseline / obtained, clamped to 1. Throws BaselineWorseError when the
// baseline exceeds the obtained cost beyond 1e-9 relative tolerance (a
// broken baseline on a minimization problem). Two zero costs compare equal.
double compute_ar(double obtained_cost, double baseline_cost);

// Runs every (instance, solver, run) cell with seeds derived from
// (master_seed, instance, solver, run). Instances are metric-completed
// before solving; the wall clock, when measured, covers the solver call
// only. Throws BaselineUnavailableError when the baseline cost cannot be
// established for an instance.
std::vector<BenchRecord> run_benchmark(const BenchPlan& plan);

// One row per instance (ordered by name), solver cells in declaration order.
std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

enum class ExportFormat { Csv, MarkdownTable };

// Csv: the raw records with the fixed column set. MarkdownTable: the
// summary laid out like the usual results table (instance + size, then
// AR / rt per solver). Identical inputs yield identical bytes.
std::string export_results(const std::vector<BenchRecord>& records,
                           const std::vector<SummaryRow>& summary, ExportFormat format);

// Plain-text geometry document: nodes, instance edges, then the expanded
// route polyline, for external plotting tools.
std::string export_route_geometry(const Instance& instance, const ExpandedRoute& expanded);

}  // namespace inspath
