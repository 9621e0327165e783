#include "inspath/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "inspath/bench.hpp"
#include "inspath/exact.hpp"
#include "inspath/format_util.hpp"
#include "inspath/graph_build.hpp"
#include "inspath/instance_io.hpp"
#include "inspath/mesh.hpp"
#include "inspath/metric.hpp"
#include "inspath/registry.hpp"

namespace inspath {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Temp-then-rename so a failure never leaves a partial artifact behind.
void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + temp + "' for writing");
        out << content;
        if (!out) throw IoError("write to '" + temp + "' failed");
    }
    std::error_code ec;
    fs::rename(temp, path, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw IoError("cannot move '" + temp + "' to '" + path + "'");
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::uint64_t single = std::stoull(text);
            return {single, single};
        }
        const std::uint64_t lo = std::stoull(text.substr(0, dots));
        const std::uint64_t hi = std::stoull(text.substr(dots + 2));
        if (hi < lo) throw UsageError("empty seed range '" + text + "'");
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad seed range '" + text + "' (expected N or A..B)");
    }
}

MeshFormat resolve_mesh_format(const std::string& name, std::string_view bytes,
                               const std::string& filename) {
    if (name == "stl-ascii") return MeshFormat::StlAscii;
    if (name == "stl-binary") return MeshFormat::StlBinary;
    if (name == "obj") return MeshFormat::ObjSubset;
    if (name == "auto") return detect_mesh_format(bytes, filename);
    throw UsageError("unknown mesh format '" + name + "'");
}

void add_solver_flags(CLI::App* cmd, SolverConfig& config) {
    cmd->add_option("--time-limit", config.time_limit_seconds, "Time limit in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", config.thread_count, "Portfolio worker count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rounds", config.portfolio_rounds,
                    "Fixed portfolio rounds per worker (0 = run until the time limit)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--cooling-rate", config.cooling_rate, "Annealing cooling rate in (0,1)");
    cmd->add_option("--moves-per-temp", config.moves_per_temperature,
                    "Annealing proposals per node per temperature level")
        ->check(CLI::PositiveNumber);
}

int run_ingest(const CommandPlan& plan);
int run_gen(const CommandPlan& plan);
int run_solve(const CommandPlan& plan);
int run_bench(const CommandPlan& plan);
int run_verify(const CommandPlan& plan);

}  // namespace

std::string usage_synopsis() {
    return "usage: inspath <ingest|gen|solve|bench|verify> [options]\n"
           "  ingest <mesh> -o <out.instance>     mesh -> patches -> instance file\n"
           "  gen --kind <k> --n <n> -o <out>     synthetic instance\n"
           "  solve --solver <id> <instance>      solve one instance\n"
           "  bench --solver <id>... <instance>.. benchmark harness (CSV + Markdown)\n"
           "  verify --max-n <n> --seeds <a..b>   exact-solver cross-checks\n"
           "run 'inspath <command> --help' for the full flag list\n";
}

CommandPlan parse_args(const std::vector<std::string>& argv) {
    CommandPlan plan;

    CLI::App app{"open-route inspection path planning toolkit"};
    app.require_subcommand(1);

    auto* ingest = app.add_subcommand("ingest", "segment a mesh into an instance");
    ingest->add_option("mesh", plan.ingest.input, "input mesh file")->required();
    ingest->add_option("-o,--output", plan.ingest.output, "output instance path")->required();
    ingest->add_option("--format", plan.ingest.format,
                       "mesh format: stl-ascii | stl-binary | obj | auto");
    ingest->add_option("--name", plan.ingest.name, "instance name (default: file stem)");
    ingest->add_option("--max-area", plan.ingest.segmentation.max_patch_area,
                       "patch area threshold, m^2 (default: 5% of mesh area)")
        ->check(CLI::PositiveNumber);
    ingest->add_option("--max-normal-dev", plan.ingest.segmentation.max_normal_deviation,
                       "patch normal deviation threshold, radians")
        ->check(CLI::Range(1e-9, 3.14159));
    ingest->add_option("--standoff", plan.ingest.segmentation.standoff,
                       "inspection standoff distance, m")
        ->check(CLI::NonNegativeNumber);
    ingest->add_option("--knn", plan.ingest.segmentation.knn, "neighbors per node")
        ->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
    gen->add_option("--kind", plan.gen.kind, "sphere | torus | box-panel | uniform-cloud");
    gen->add_option("--n", plan.gen.n, "node count")->check(CLI::PositiveNumber);
    gen->add_option("--knn", plan.gen.knn, "neighbors per node")->check(CLI::PositiveNumber);
    gen->add_option("--seed", plan.gen.seed, "generator seed");
    gen->add_option("-o,--output", plan.gen.output, "output instance path")->required();

    auto* solve = app.add_subcommand("solve", "solve a single instance");
    solve->add_option("instance", plan.solve.input, "instance file")->required();
    solve->add_option("--solver", plan.solve.solver, "solver id (see 'verify --help' list)");
    solve->add_option("--seed", plan.solve.config.seed, "solver seed");
    solve->add_option("--baseline", plan.solve.baseline,
                      "solver id used to report an approximation ratio");
    solve->add_option("--geometry", plan.solve.geometry_output,
                      "write plot-ready route geometry to this path");
    add_solver_flags(solve, plan.solve.config);

    auto* bench = app.add_subcommand("bench", "run the benchmark harness");
    bench->add_option("instances", plan.bench.inputs, "instance files")->required();
    bench->add_option("--solver", plan.bench.solvers, "solver id (repeatable)")
        ->required()
        ->type_size(1)
        ->allow_extra_args(false);
    bench->add_option("--baseline", plan.bench.baseline,
                      "baseline solver id, or 'stored' for metadata costs");
    bench->add_option("--runs", plan.bench.runs, "runs per (instance, solver) pair")
        ->check(CLI::PositiveNumber);
    bench->add_option("--master-seed", plan.bench.master_seed, "master seed for run derivation");
    bench->add_option("--csv", plan.bench.csv_output, "CSV output path (default: stdout)");
    bench->add_option("--md", plan.bench.md_output, "Markdown summary path (default: stdout)");
    bench->add_option("--timing", plan.bench.timing,
                      "runtime column: measured | none (none keeps output byte-reproducible)");
    add_solver_flags(bench, plan.bench.config);

    auto* verify = app.add_subcommand("verify", "cross-check exact solvers against brute force");
    verify->add_option("--max-n", plan.verify.max_n, "largest instance size (2..10)")
        ->check(CLI::Range(2, 10));
    verify->add_option("--seeds", plan.verify.seeds, "seed or range A..B");
    verify->add_option("--knn", plan.verify.knn, "neighbors per node")->check(CLI::PositiveNumber);

    app.add_flag("-v,--verbose", plan.verbosity, "more progress logging on stderr");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()));
    }

    if (app.got_subcommand(ingest)) plan.command = Command::Ingest;
    else if (app.got_subcommand(gen)) plan.command = Command::Gen;
    else if (app.got_subcommand(solve)) plan.command = Command::Solve;
    else if (app.got_subcommand(bench)) plan.command = Command::Bench;
    else plan.command = Command::Verify;

    // Values CLI11 ranges cannot express.
    if (plan.command == Command::Gen) parse_surface_kind(plan.gen.kind);
    if (plan.command == Command::Solve && !is_solver_id(plan.solve.solver))
        throw UsageError("unknown solver '" + plan.solve.solver + "'");
    if (plan.command == Command::Bench) {
        for (const auto& id : plan.bench.solvers)
            if (!is_solver_id(id)) throw UsageError("unknown solver '" + id + "'");
        if (plan.bench.timing != "measured" && plan.bench.timing != "none")
            throw UsageError("--timing must be 'measured' or 'none'");
        if (plan.bench.baseline != "stored" && !is_solver_id(plan.bench.baseline))
            throw UsageError("unknown baseline '" + plan.bench.baseline + "'");
    }
    if (plan.command == Command::Verify) parse_seed_range(plan.verify.seeds);
    return plan;
}

namespace {

int run_ingest(const CommandPlan& plan) {
    const auto& opt = plan.ingest;
    const std::string bytes = read_file(opt.input);
    const MeshFormat format = resolve_mesh_format(opt.format, bytes, opt.input);

    std::vector<std::string> warnings;
    const Mesh mesh = load_mesh(bytes, format, &warnings);
    for (const auto& warning : warnings) std::cerr << "warning: " << warning << "\n";

    const auto segmentation = segment_mesh(mesh, opt.segmentation);
    for (int face : segmentation.oversized_faces)
        std::cerr << "warning: face " << face << " alone exceeds the patch area threshold\n";
    std::cerr << "mesh: " << mesh.face_count() << " faces, "
              << segmentation.patches.size() << " patches\n";

    const auto points = inspection_points(segmentation.patches, opt.segmentation);
    const std::string name =
        !opt.name.empty() ? opt.name : fs::path(opt.input).stem().string();
    Instance instance = build_graph(name, points, opt.segmentation);
    instance.metadata["source_mesh"] = fs::path(opt.input).filename().string();
    instance.metadata["max_normal_deviation"] = format_double(opt.segmentation.max_normal_deviation);
    instance.metadata["standoff"] = format_double(opt.segmentation.standoff);
    instance.metadata["knn"] = std::to_string(opt.segmentation.knn);

    write_file_atomic(opt.output, write_instance(instance));
    std::cerr << "wrote " << opt.output << " (" << instance.n() << " nodes, "
              << instance.edge_count() << " edges)\n";
    return 0;
}

int run_gen(const CommandPlan& plan) {
    const auto& opt = plan.gen;
    const Instance instance =
        generate_instance(parse_surface_kind(opt.kind), opt.n, opt.knn, opt.seed);
    write_file_atomic(opt.output, write_instance(instance));
    std::cerr << "wrote " << opt.output << " (" << instance.n() << " nodes, "
              << instance.edge_count() << " edges)\n";
    return 0;
}

int run_solve(const CommandPlan& plan) {
    const auto& opt = plan.solve;
    const Instance original = read_instance(read_file(opt.input));
    const auto completion = metric_completion(original);

    const SolveResult result = run_solver(opt.solver, completion.completed, opt.config);
    const ExpandedRoute expanded = expand_route(result.route, completion.via, original);

    std::cout << "instance: " << original.name << "\n"
              << "nodes: " << original.n() << "\n"
              << "edges: " << original.edge_count() << "\n"
              << "solver: " << result.solver_id << "\n"
              << "seed: " << format_u64(result.seed) << "\n"
              << "cost: " << format_double(result.cost) << "\n"
              << "optimal: " << (result.optimal ? "true" : "false") << "\n"
              << "runtime_seconds: " << format_double(result.runtime_seconds) << "\n"
              << "expanded_waypoints: " << expanded.waypoints.size() << "\n";

    if (!opt.baseline.empty()) {
        SolverConfig baseline_config = opt.config;
        const SolveResult baseline = run_solver(opt.baseline, completion.completed, baseline_config);
        std::cout << "baseline: " << opt.baseline << "\n"
                  << "baseline_cost: " << format_double(baseline.cost) << "\n"
                  << "ar: " << format_double(compute_ar(result.cost, baseline.cost)) << "\n";
    }

    if (!opt.geometry_output.empty())
        write_file_atomic(opt.geometry_output, export_route_geometry(original, expanded));
    return 0;
}

int run_bench(const CommandPlan& plan) {
    const auto& opt = plan.bench;

    BenchPlan bench_plan;
    bench_plan.runs_per_pair = opt.runs;
    bench_plan.baseline = opt.baseline;
    bench_plan.master_seed = opt.master_seed;
    bench_plan.timing = opt.timing == "none" ? TimingMode::None : TimingMode::Measured;
    for (const auto& path : opt.inputs)
        bench_plan.instances.push_back(read_instance(read_file(path)));
    for (const auto& id : opt.solvers) bench_plan.solvers.push_back({id, opt.config});

    const auto records = run_benchmark(bench_plan);
    const auto summary = summarize(records);
    const std::string csv = export_results(records, summary, ExportFormat::Csv);
    const std::string md = export_results(records, summary, ExportFormat::MarkdownTable);

    if (!opt.csv_output.empty())
        write_file_atomic(opt.csv_output, csv);
    else
        std::cout << csv;
    if (!opt.md_output.empty())
        write_file_atomic(opt.md_output, md);
    else
        std::cout << (opt.csv_output.empty() ? "\n" : "") << md;
    return 0;
}

int run_verify(const CommandPlan& plan) {
    const auto& opt = plan.verify;
    const auto [seed_lo, seed_hi] = parse_seed_range(opt.seeds);
    const SurfaceKind kinds[] = {SurfaceKind::Sphere, SurfaceKind::Torus, SurfaceKind::BoxPanel,
                                 SurfaceKind::UniformCloud};

    int passed = 0;
    int failed = 0;
    for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
        for (int n = 2; n <= opt.max_n; ++n) {
            const auto kind = kinds[(seed + static_cast<std::uint64_t>(n)) % 4];
            const Instance instance =
                generate_instance(kind, n, opt.knn, seed);
            const Instance completed = metric_completion(instance).completed;

            const double reference = brute_force(completed).cost;
            SolverConfig config;
            config.time_limit_seconds = 3600.0;
            const double hk = held_karp(completed).cost;
            const auto bnb = branch_and_bound(completed, config);

            const double scale = std::max(1.0, std::abs(reference));
            const bool ok = std::abs(hk - reference) <= 1e-9 * scale &&
                            std::abs(bnb.result.cost - reference) <= 1e-9 * scale &&
                            bnb.result.optimal &&
                            bnb.lower_bound <= bnb.result.cost + 1e-9 * scale;
            if (ok) {
                ++passed;
            } else {
                ++failed;
                std::cerr << "verify FAIL " << instance.name << ": brute=" << reference
                          << " held_karp=" << hk << " bnb=" << bnb.result.cost << "\n";
            }
        }
    }
    std::cout << "verify: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 3;
}

}  // namespace

int execute(const CommandPlan& plan) {
    try {
        switch (plan.command) {
            case Command::Ingest: return run_ingest(plan);
            case Command::Gen: return run_gen(plan);
            case Command::Solve: return run_solve(plan);
            case Command::Bench: return run_bench(plan);
            case Command::Verify: return run_verify(plan);
        }
        return 1;
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace inspath
