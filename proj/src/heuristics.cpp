#include "inspath/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace inspath {

namespace {

using Clock = std::chrono::steady_clock;

// Gain a move must produce to count as an improvement. Strictly positive so
// local search terminates; far below the 1e-9 relative gate the tests apply.
double min_gain(double cost) { return 1e-11 * (1.0 + std::abs(cost)); }

struct DenseView {
    int n;
    std::vector<double> costs;

    explicit DenseView(const Instance& inst)
        : n(inst.n()), costs(static_cast<std::size_t>(n) * n) {
        inst.costs.require_complete();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) costs[static_cast<std::size_t>(i) * n + j] = inst.costs.at(i, j);
    }
    double operator()(int i, int j) const { return costs[static_cast<std::size_t>(i) * n + j]; }
};

// Cost change of reversing route[i..j] in an open path.
double two_opt_delta(const DenseView& c, const Route& route, int i, int j) {
    double delta = 0.0;
    if (i > 0) delta += c(route[i - 1], route[j]) - c(route[i - 1], route[i]);
    if (j + 1 < c.n) delta += c(route[i], route[j + 1]) - c(route[j], route[j + 1]);
    return delta;
}

// Cost change of moving the L-node segment at p so it starts at position q
// of the shortened route (q in [0, n-L], q != p).
double or_opt_delta(const DenseView& c, const Route& route, int p, int L, int q) {
    const int n = static_cast<int>(route.size());
    const int seg_front = route[p];
    const int seg_back = route[p + L - 1];
    const int pred = p > 0 ? route[p - 1] : -1;
    const int succ = p + L < n ? route[p + L] : -1;

    double delta = 0.0;
    if (pred >= 0) delta -= c(pred, seg_front);
    if (succ >= 0) delta -= c(seg_back, succ);
    if (pred >= 0 && succ >= 0) delta += c(pred, succ);

    // Neighbors of the insertion slot, indexed in the route with the segment
    // removed: positions < p are unchanged, positions >= p shift by L.
    const auto rest_at = [&](int idx) { return idx < p ? route[idx] : route[idx + L]; };
    const int rest_len = n - L;
    const int left = q > 0 ? rest_at(q - 1) : -1;
    const int right = q < rest_len ? rest_at(q) : -1;
    if (left >= 0) delta += c(left, seg_front);
    if (right >= 0) delta += c(seg_back, right);
    if (left >= 0 && right >= 0) delta -= c(left, right);
    return delta;
}

void apply_or_opt(Route& route, int p, int L, int q) {
    Route segment(route.begin() + p, route.begin() + p + L);
    route.erase(route.begin() + p, route.begin() + p + L);
    route.insert(route.begin() + q, segment.begin(), segment.end());
}

bool two_opt_pass(const DenseView& c, Route& route, double& cost) {
    const int n = static_cast<int>(route.size());
    bool improved = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // whole-path reversal, zero gain
            const double delta = two_opt_delta(c, route, i, j);
            if (delta < -min_gain(cost)) {
                std::reverse(route.begin() + i, route.begin() + j + 1);
                cost += delta;
                improved = true;
            }
        }
    }
    return improved;
}

bool or_opt_pass(const DenseView& c, Route& route, double& cost, int L) {
    const int n = static_cast<int>(route.size());
    if (n <= L) return false;
    bool improved = false;
    for (int p = 0; p + L <= n; ++p) {
        for (int q = 0; q <= n - L; ++q) {
            if (q == p) continue;
            const double delta = or_opt_delta(c, route, p, L, q);
            if (delta < -min_gain(cost)) {
                apply_or_opt(route, p, L, q);
                cost += delta;
                improved = true;
            }
        }
    }
    return improved;
}

}  // namespace

void SolverConfig::validate() const {
    if (time_limit_seconds <= 0.0) throw Error("time limit must be positive");
    if (thread_count < 1) throw Error("thread count must be positive");
    if (initial_temp_factor <= 0.0) throw Error("initial temperature factor must be positive");
    if (cooling_rate <= 0.0 || cooling_rate >= 1.0) throw Error("cooling rate must be in (0, 1)");
    if (moves_per_temperature < 1) throw Error("moves per temperature must be positive");
    if (min_temp_ratio <= 0.0 || min_temp_ratio >= 1.0)
        throw Error("minimum temperature ratio must be in (0, 1)");
    if (portfolio_rounds < 0) throw Error("portfolio rounds must be >= 0");
    if (!moves.two_opt && !moves.or_opt1 && !moves.or_opt2) throw Error("empty move set");
}

Route nearest_neighbor(const Instance& instance, int start) {
    const int n = instance.n();
    if (start < 0 || start >= n) throw BadStartError(start, n);
    instance.costs.require_complete();

    Route route;
    route.reserve(n);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    route.push_back(start);
    visited[start] = 1;
    while (static_cast<int>(route.size()) < n) {
        const int from = route.back();
        int next = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int u = 0; u < n; ++u) {
            if (visited[u]) continue;
            const double cost = instance.costs.at(from, u);
            if (cost < best) {
                best = cost;
                next = u;
            }
        }
        route.push_back(next);
        visited[next] = 1;
    }
    return route;
}

Route local_search(const Instance& instance, const Route& route, const SolverConfig& config) {
    config.validate();
    if (auto violation = validate_route(instance, route, false))
        throw InvalidRouteError(violation->message());

    const DenseView c(instance);
    Route current = route;
    if (current.size() < 2) return current;
    double cost = evaluate_route(instance, current);

    bool improved = true;
    while (improved) {
        improved = false;
        if (config.moves.two_opt) improved |= two_opt_pass(c, current, cost);
        if (config.moves.or_opt1) improved |= or_opt_pass(c, current, cost, 1);
        if (config.moves.or_opt2) improved |= or_opt_pass(c, current, cost, 2);
    }
    return current;
}

namespace detail {

double mean_edge_cost(const Instance& instance) {
    const int n = instance.n();
    double sum = 0.0;
    long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!instance.costs.has(i, j)) continue;
            sum += instance.costs.at(i, j);
            ++count;
        }
    return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

Route anneal_from(const Instance& instance, const Route& initial, const SolverConfig& config,
                  Rng& rng) {
    const DenseView c(instance);
    const int n = c.n;
    if (n < 3) return initial;

    const double t0 = config.initial_temp_factor * mean_edge_cost(instance);
    if (t0 <= 0.0) return initial;
    const double t_floor = config.min_temp_ratio * t0;
    const long moves_per_level = static_cast<long>(config.moves_per_temperature) * n;

    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(config.time_limit_seconds));

    Route current = initial;
    double cost = evaluate_route(instance, current);
    Route best = current;
    double best_cost = cost;
    std::uint64_t ticks = 0;
    bool out_of_time = false;

    const bool use_two_opt = config.moves.two_opt;
    const bool use_or1 = config.moves.or_opt1;
    const bool use_or2 = config.moves.or_opt2;

    for (double t = t0; t > t_floor && !out_of_time; t *= config.cooling_rate) {
        for (long move = 0; move < moves_per_level; ++move) {
            if ((++ticks & 0xFF) == 0 && Clock::now() > deadline) {
                out_of_time = true;
                break;
            }

            double delta = 0.0;
            int kind;  // 0 = 2-opt, 1 = or-opt-1, 2 = or-opt-2
            if (use_two_opt && (use_or1 || use_or2))
                kind = rng.uniform01() < 0.5 ? 0 : (use_or1 && use_or2 ? 1 + rng.below_int(2)
                                                    : use_or1         ? 1
                                                                      : 2);
            else if (use_two_opt)
                kind = 0;
            else
                kind = use_or1 && use_or2 ? 1 + rng.below_int(2) : (use_or1 ? 1 : 2);

            int i = 0, j = 0, p = 0, L = 0, q = 0;
            if (kind == 0) {
                const int a = rng.below_int(n);
                const int b = rng.below_int(n);
                if (a == b) continue;
                i = std::min(a, b);
                j = std::max(a, b);
                if (i == 0 && j == n - 1) continue;
                delta = two_opt_delta(c, current, i, j);
            } else {
                L = kind;
                if (n <= L) continue;
                p = rng.below_int(n - L + 1);
                q = rng.below_int(n - L + 1);
                if (p == q) continue;
                delta = or_opt_delta(c, current, p, L, q);
            }

            const bool accept = delta <= 0.0 || rng.uniform01() < std::exp(-delta / t);
            if (!accept) continue;
            if (kind == 0)
                std::reverse(current.begin() + i, current.begin() + j + 1);
            else
                apply_or_opt(current, p, L, q);
            cost += delta;
            if (cost < best_cost) {
                best = current;
                best_cost = cost;
            }
        }
        // Re-sum to keep accumulated deltas from drifting.
        cost = evaluate_route(instance, current);
    }
    return best;
}

}  // namespace detail

SolveResult simulated_annealing(const Instance& instance, const SolverConfig& config) {
    config.validate();
    const auto start_time = Clock::now();

    Rng rng(config.seed);
    Route route = nearest_neighbor(instance, 0);
    route = detail::anneal_from(instance, route, config, rng);

    SolveResult result;
    result.cost = evaluate_route(instance, route);
    result.route = std::move(route);
    result.solver_id = "simulated_annealing";
    result.seed = config.seed;
    result.optimal = false;
    result.runtime_seconds = std::chrono::duration<double>(Clock::now() - start_time).count();
    return result;
}

std::optional<Route> RuinRecreateOracle::propose(const Instance& instance, const Route& incumbent,
                                                 Rng& rng) {
    const int n = static_cast<int>(incumbent.size());
    if (n < 3) return std::nullopt;
    instance.costs.require_complete();
    const DenseView c(instance);

    const int ruin_len = std::min(n - 1, (n + 4) / 5);  // ceil(n/5)
    const int start = rng.below_int(n - ruin_len + 1);

    Route removed(incumbent.begin() + start, incumbent.begin() + start + ruin_len);
    Route rebuilt;
    rebuilt.reserve(n);
    rebuilt.insert(rebuilt.end(), incumbent.begin(), incumbent.begin() + start);
    rebuilt.insert(rebuilt.end(), incumbent.begin() + start + ruin_len, incumbent.end());

    // Greedy reinsertion: each removed node goes to its cheapest slot.
    for (int node : removed) {
        int best_slot = 0;
        double best_delta = std::numeric_limits<double>::infinity();
        const int len = static_cast<int>(rebuilt.size());
        for (int slot = 0; slot <= len; ++slot) {
            const int left = slot > 0 ? rebuilt[slot - 1] : -1;
            const int right = slot < len ? rebuilt[slot] : -1;
            double delta = 0.0;
            if (left >= 0) delta += c(left, node);
            if (right >= 0) delta += c(node, right);
            if (left >= 0 && right >= 0) delta -= c(left, right);
            if (delta < best_delta) {
                best_delta = delta;
                best_slot = slot;
            }
        }
        rebuilt.insert(rebuilt.begin() + best_slot, node);
    }
    return rebuilt;
}

}  // namespace inspath
