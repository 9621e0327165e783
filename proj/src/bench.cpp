#include "inspath/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "inspath/format_util.hpp"
#include "inspath/registry.hpp"

namespace inspath {

namespace {

std::uint64_t fnv1a(std::uint64_t hash, std::string_view text) {
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::uint64_t run_seed(std::uint64_t master, const std::string& instance,
                       const std::string& solver, int run) {
    std::uint64_t h = fnv1a(0xCBF29CE484222325ULL, instance);
    h = fnv1a(h, "/");
    h = fnv1a(h, solver);
    return derive_seed(master ^ h, static_cast<std::uint64_t>(run));
}

double baseline_cost_for(const BenchPlan& plan, const Instance& original,
                         const Instance& completed) {
    if (plan.baseline == "stored") {
        const auto it = original.metadata.find("baseline_cost");
        if (it == original.metadata.end()) throw BaselineUnavailableError(original.name);
        return parse_double(it->second);
    }
    if (!is_solver_id(plan.baseline)) throw BaselineUnavailableError(original.name);

    SolverConfig config;
    for (const auto& spec : plan.solvers)
        if (spec.id == plan.baseline) config = spec.config;
    config.seed = run_seed(plan.master_seed, original.name, plan.baseline + "#baseline", 0);
    try {
        return run_solver(plan.baseline, completed, config).cost;
    } catch (const TooLargeError&) {
        throw BaselineUnavailableError(original.name);
    }
}

// Runtime cell for the summary table: one decimal, thousands as "1.2K".
std::string format_rt(double seconds) {
    char buffer[32];
    if (seconds >= 1000.0)
        std::snprintf(buffer, sizeof buffer, "%.1fK", seconds / 1000.0);
    else
        std::snprintf(buffer, sizeof buffer, "%.1f", seconds);
    return buffer;
}

std::string format_ar(double ar) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", ar);
    return buffer;
}

}  // namespace

double compute_ar(double obtained_cost, double baseline_cost) {
    if (baseline_cost < 0.0 || obtained_cost < 0.0) throw Error("costs must be non-negative");
    if (baseline_cost == 0.0 && obtained_cost == 0.0) return 1.0;
    if (baseline_cost > obtained_cost * (1.0 + 1e-9))
        throw BaselineWorseError(baseline_cost, obtained_cost);
    if (obtained_cost == 0.0) return 1.0;
    return std::min(1.0, baseline_cost / obtained_cost);
}

std::vector<BenchRecord> run_benchmark(const BenchPlan& plan) {
    if (plan.runs_per_pair < 1) throw Error("runs_per_pair must be >= 1");
    if (plan.baseline != "stored") {
        if (!is_solver_id(plan.baseline)) throw UsageError("unknown baseline '" + plan.baseline + "'");
    }

    std::vector<BenchRecord> records;
    records.reserve(plan.instances.size() * plan.solvers.size() *
                    static_cast<std::size_t>(plan.runs_per_pair));

    for (const auto& original : plan.instances) {
        const auto completion = metric_completion(original);
        const Instance& completed = completion.completed;
        const double baseline = baseline_cost_for(plan, original, completed);
        const int edges = original.edge_count();

        for (const auto& spec : plan.solvers) {
            for (int run = 0; run < plan.runs_per_pair; ++run) {
                SolverConfig config = spec.config;
                config.seed = run_seed(plan.master_seed, original.name, spec.id, run);
                const SolveResult solved = run_solver(spec.id, completed, config);

                BenchRecord record;
                record.instance = original.name;
                record.nodes = original.n();
                record.edges = edges;
                record.solver = spec.id;
                record.run = run;
                record.seed = config.seed;
                record.cost = solved.cost;
                record.runtime_seconds =
                    plan.timing == TimingMode::Measured ? solved.runtime_seconds : 0.0;
                record.ar = compute_ar(solved.cost, baseline);
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
    // Group by instance name; keep solver order as first seen (declaration
    // order of the originating plan).
    std::map<std::string, SummaryRow> rows;
    std::map<std::string, std::vector<std::string>> solver_order;
    std::map<std::string, std::map<std::string, std::vector<const BenchRecord*>>> cells;

    for (const auto& record : records) {
        auto& row = rows[record.instance];
        row.instance = record.instance;
        row.nodes = record.nodes;
        row.edges = record.edges;
        auto& order = solver_order[record.instance];
        if (std::find(order.begin(), order.end(), record.solver) == order.end())
            order.push_back(record.solver);
        cells[record.instance][record.solver].push_back(&record);
    }

    std::vector<SummaryRow> out;
    for (auto& [name, row] : rows) {
        for (const auto& solver : solver_order[name]) {
            const auto& runs = cells[name][solver];
            SolverSummary cell;
            cell.solver = solver;
            double ar_sum = 0.0, rt_sum = 0.0, cost_sum = 0.0;
            cell.best_ar = 0.0;
            for (const auto* r : runs) {
                ar_sum += r->ar;
                rt_sum += r->runtime_seconds;
                cost_sum += r->cost;
                cell.best_ar = std::max(cell.best_ar, r->ar);
            }
            const double count = static_cast<double>(runs.size());
            cell.mean_ar = ar_sum / count;
            cell.mean_runtime = rt_sum / count;
            const double cost_mean = cost_sum / count;
            double variance = 0.0;
            for (const auto* r : runs) variance += (r->cost - cost_mean) * (r->cost - cost_mean);
            cell.cost_stddev = std::sqrt(variance / count);
            row.solvers.push_back(std::move(cell));
        }
        out.push_back(std::move(row));
    }
    return out;  // std::map iteration = ordered by instance name
}

std::string export_results(const std::vector<BenchRecord>& records,
                           const std::vector<SummaryRow>& summary, ExportFormat format) {
    if (format == ExportFormat::Csv) {
        std::string out = "instance,nodes,edges,solver,run,seed,cost,runtime_seconds,ar\n";
        for (const auto& r : records) {
            out += r.instance + ',' + std::to_string(r.nodes) + ',' + std::to_string(r.edges) +
                   ',' + r.solver + ',' + std::to_string(r.run) + ',' + format_u64(r.seed) + ',' +
                   format_double(r.cost) + ',' + format_double(r.runtime_seconds) + ',' +
                   format_double(r.ar) + '\n';
        }
        return out;
    }

    // Markdown summary shaped like the usual results table.
    std::string out;
    out += "| Instance (nodes, edges) |";
    std::vector<std::string> solvers;
    if (!summary.empty())
        for (const auto& cell : summary.front().solvers) solvers.push_back(cell.solver);
    for (const auto& solver : solvers) out += " " + solver + " AR | " + solver + " rt |";
    out += "\n|---|";
    for (std::size_t i = 0; i < solvers.size(); ++i) out += "---|---|";
    out += "\n";
    for (const auto& row : summary) {
        out += "| " + row.instance + " (" + std::to_string(row.nodes) + ", " +
               std::to_string(row.edges) + ") |";
        for (const auto& cell : row.solvers)
            out += " " + format_ar(cell.mean_ar) + " | " + format_rt(cell.mean_runtime) + " |";
        out += "\n";
    }
    return out;
}

std::string export_route_geometry(const Instance& instance, const ExpandedRoute& expanded) {
    std::string out;
    out += "nodes " + std::to_string(instance.n()) + "\n";
    for (int i = 0; i < instance.n(); ++i) {
        const auto& p = instance.points[i];
        out += std::to_string(i) + " " + format_double(p.x) + " " + format_double(p.y) + " " +
               format_double(p.z) + "\n";
    }
    out += "edges " + std::to_string(instance.edge_count()) + "\n";
    for (int i = 0; i < instance.n(); ++i)
        for (int j = i + 1; j < instance.n(); ++j)
            if (instance.costs.has(i, j))
                out += std::to_string(i) + " " + std::to_string(j) + " " +
                       format_double(instance.costs.at(i, j)) + "\n";
    out += "route " + std::to_string(expanded.waypoints.size()) + " cost " +
           format_double(expanded.cost) + "\n";
    for (int w : expanded.waypoints) {
        const auto& p = instance.points[w];
        out += std::to_string(w) + " " + format_double(p.x) + " " + format_double(p.y) + " " +
               format_double(p.z) + "\n";
    }
    return out;
}

}  // namespace inspath
