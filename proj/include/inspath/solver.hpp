#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "inspath/instance.hpp"
#include "inspath/rng.hpp"
#include "inspath/route.hpp"

namespace inspath {

struct MoveSet {
    bool two_opt = true;
    bool or_opt1 = true;
    bool or_opt2 = true;
};

struct SolverConfig {
    double time_limit_seconds = 5.0;
    std::uint64_t seed = 0;
    int thread_count = 4;  // portfolio only

    // Annealing schedule. The initial temperature is
    // initial_temp_factor * mean present edge cost; each level runs
    // moves_per_temperature * n proposals, then T *= cooling_rate. The
    // schedule ends at min_temp_ratio * T0, which keeps a run a pure
    // function of the seed whenever it fits inside the time limit; the
    // wall-clock deadline (checked at least every 1000 moves) is a cutoff
    // for instances too large to finish the ladder.
    double initial_temp_factor = 1.0;
    double cooling_rate = 0.995;
    int moves_per_temperature = 50;  // per node
    double min_temp_ratio = 1e-9;

    MoveSet moves;

    // Portfolio: rounds per worker; 0 = keep going until the deadline.
    int portfolio_rounds = 0;
    // Warm start for solvers that accept one.
    std::optional<Route> initial_route;

    void validate() const;
};

struct SolveResult {
    Route route;
    double cost = 0.0;
    std::string solver_id;
    std::uint64_t seed = 0;
    double runtime_seconds = 0.0;
    bool optimal = false;  // true only for exact solvers that ran to completion
};

// Proposal source injecting candidate routes into heuristic workers. The
// default implementation is a classical ruin-and-recreate sampler; the
// interface leaves room for external backends. Implementations must be
// deterministic given the rng stream and must return valid permutations.
class GuidanceOracle {
public:
    virtual ~GuidanceOracle() = default;
    virtual std::optional<Route> propose(const Instance& instance, const Route& incumbent,
                                         Rng& rng) = 0;
};

class NullOracle final : public GuidanceOracle {
public:
    std::optional<Route> propose(const Instance&, const Route&, Rng&) override {
        return std::nullopt;
    }
};

// Removes a random contiguous segment of ceil(n/5) nodes and reinserts each
// greedily at its cheapest position.
class RuinRecreateOracle final : public GuidanceOracle {
public:
    std::optional<Route> propose(const Instance& instance, const Route& incumbent,
                                 Rng& rng) override;
};

}  // namespace inspath
