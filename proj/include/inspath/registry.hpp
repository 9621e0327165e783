#pragma once

#include <string>
#include <vector>

#include "inspath/solver.hpp"

namespace inspath {

// All solvers reachable by id from the CLI and the benchmark harness.
// `nearest_neighbor` starts at node 0; `local_search` is nearest_neighbor
// followed by the full move set.
std::vector<std::string> solver_ids();

bool is_solver_id(const std::string& id);

// Runs the named solver on a metric-complete instance. Throws UsageError
// for unknown ids and TooLargeError when an exact solver's size cap is hit.
SolveResult run_solver(const std::string& id, const Instance& instance,
                       const SolverConfig& config);

}  // namespace inspath
