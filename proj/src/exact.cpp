#include "inspath/exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "inspath/heuristics.hpp"

namespace inspath {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> dense_costs(const Instance& instance) {
    const int n = instance.n();
    instance.costs.require_complete();
    std::vector<double> dense(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dense[static_cast<std::size_t>(i) * n + j] = instance.costs.at(i, j);
    return dense;
}

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SolveResult brute_force(const Instance& instance) {
    constexpr int kLimit = 10;
    const int n = instance.n();
    if (n > kLimit) throw TooLargeError(n, kLimit);
    const auto start_time = Clock::now();
    const auto cost_of = dense_costs(instance);
    const auto c = [&](int i, int j) { return cost_of[static_cast<std::size_t>(i) * n + j]; };

    Route order(n);
    std::iota(order.begin(), order.end(), 0);
    Route best = order;
    double best_cost = kInf;

    do {
        // Each open path has two orientations; keep the one with the
        // smaller first node so every path is scored exactly once.
        if (n > 1 && order.front() > order.back()) continue;
        double cost = 0.0;
        for (int k = 0; k + 1 < n; ++k) cost += c(order[k], order[k + 1]);
        if (cost < best_cost) {
            best_cost = cost;
            best = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    SolveResult result;
    result.route = std::move(best);
    result.cost = best_cost == kInf ? 0.0 : best_cost;
    result.solver_id = "brute_force";
    result.optimal = true;
    result.runtime_seconds = elapsed_seconds(start_time);
    return result;
}

SolveResult held_karp(const Instance& instance) {
    constexpr int kLimit = 24;
    const int n = instance.n();
    if (n > kLimit) throw TooLargeError(n, kLimit);
    const auto start_time = Clock::now();
    const auto cost_of = dense_costs(instance);
    const auto c = [&](int i, int j) { return cost_of[static_cast<std::size_t>(i) * n + j]; };

    SolveResult result;
    result.solver_id = "held_karp";
    result.optimal = true;
    if (n == 1) {
        result.route = {0};
        result.runtime_seconds = elapsed_seconds(start_time);
        return result;
    }

    const std::size_t masks = std::size_t{1} << n;
    // dp[mask][last]: cheapest open path visiting exactly `mask`, ending at
    // `last`. Every singleton starts at zero, so both endpoints stay free.
    std::vector<double> dp(masks * n, kInf);
    std::vector<std::uint8_t> parent(masks * n, 0xFF);
    for (int i = 0; i < n; ++i) dp[(std::size_t{1} << i) * n + i] = 0.0;

    for (std::size_t mask = 1; mask < masks; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // singletons are seeds
        for (int last = 0; last < n; ++last) {
            if (!(mask & (std::size_t{1} << last))) continue;
            const std::size_t without = mask ^ (std::size_t{1} << last);
            double best = kInf;
            std::uint8_t best_prev = 0xFF;
            for (int prev = 0; prev < n; ++prev) {
                if (!(without & (std::size_t{1} << prev))) continue;
                const double candidate = dp[without * n + prev] + c(prev, last);
                if (candidate < best) {
                    best = candidate;
                    best_prev = static_cast<std::uint8_t>(prev);
                }
            }
            dp[mask * n + last] = best;
            parent[mask * n + last] = best_prev;
        }
    }

    const std::size_t full = masks - 1;
    int end = 0;
    double best_cost = kInf;
    for (int last = 0; last < n; ++last) {
        if (dp[full * n + last] < best_cost) {
            best_cost = dp[full * n + last];
            end = last;
        }
    }

    Route route;
    route.reserve(n);
    std::size_t mask = full;
    int cursor = end;
    while (cursor != 0xFF) {
        route.push_back(cursor);
        const std::uint8_t prev = parent[mask * n + cursor];
        mask ^= std::size_t{1} << cursor;
        cursor = prev == 0xFF ? 0xFF : prev;
    }
    std::reverse(route.begin(), route.end());

    result.route = std::move(route);
    result.cost = best_cost;
    result.runtime_seconds = elapsed_seconds(start_time);
    return result;
}

namespace {

class BnbSearch {
public:
    BnbSearch(const Instance& instance, const SolverConfig& config, const std::vector<double>& costs)
        : n_(instance.n()), costs_(costs),
          deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(config.time_limit_seconds))) {}

    void run(Route& incumbent, double& incumbent_cost) {
        incumbent_ = &incumbent;
        incumbent_cost_ = &incumbent_cost;
        path_.reserve(n_);
        for (int start = 0; start < n_; ++start) {
            path_.assign(1, start);
            visited_ = std::uint64_t{1} << start;
            if (timed_out_) {
                // Never explored; fold its root bound into the global bound.
                pending_lb_ = std::min(pending_lb_, completion_bound(start));
                continue;
            }
            dfs(start, 0.0);
        }
    }

    bool timed_out() const { return timed_out_; }
    double pending_lower_bound() const { return pending_lb_; }

private:
    double c(int i, int j) const { return costs_[static_cast<std::size_t>(i) * n_ + j]; }

    // Admissible completion bound: over the remaining path every unvisited
    // node has degree 2 except the unknown final node, and the current
    // endpoint has degree 1. Summing per-node cheapest (and second-cheapest)
    // allowed edges therefore counts every completion edge at most twice:
    //   2 * completion >= c1(endpoint) + sum_u (c1(u) + c2(u)) - max_u c2(u).
    double completion_bound(int endpoint) const {
        double sum = kInf;  // c1 over unvisited, from endpoint
        double pair_sum = 0.0;
        double max_c2 = 0.0;
        bool any = false;
        for (int u = 0; u < n_; ++u) {
            if (visited_ & (std::uint64_t{1} << u)) continue;
            any = true;
            sum = std::min(sum, c(endpoint, u));
            double c1 = kInf, c2 = kInf;
            for (int v = 0; v < n_; ++v) {
                if (v == u) continue;
                const bool allowed = v == endpoint || !(visited_ & (std::uint64_t{1} << v));
                if (!allowed) continue;
                const double cost = c(u, v);
                if (cost < c1) {
                    c2 = c1;
                    c1 = cost;
                } else if (cost < c2) {
                    c2 = cost;
                }
            }
            if (c2 == kInf) c2 = c1;  // only one allowed partner
            pair_sum += c1 + c2;
            max_c2 = std::max(max_c2, c2);
        }
        if (!any) return 0.0;
        return 0.5 * (sum + pair_sum - max_c2);
    }

    void dfs(int endpoint, double path_cost) {
        if (timed_out_) return;
        if ((++ticks_ & 0xFF) == 0 && Clock::now() > deadline_) {
            timed_out_ = true;
            pending_lb_ = std::min(pending_lb_, path_cost + completion_bound(endpoint));
            return;
        }

        if (static_cast<int>(path_.size()) == n_) {
            if (path_cost < *incumbent_cost_) {
                *incumbent_cost_ = path_cost;
                *incumbent_ = path_;
            }
            return;
        }

        const double bound = path_cost + completion_bound(endpoint);
        if (bound >= *incumbent_cost_) return;

        // Cheapest extension first, ties to the lowest index.
        std::vector<std::pair<double, int>> children;
        for (int u = 0; u < n_; ++u)
            if (!(visited_ & (std::uint64_t{1} << u))) children.push_back({c(endpoint, u), u});
        std::sort(children.begin(), children.end());

        for (const auto& [step_cost, u] : children) {
            path_.push_back(u);
            visited_ |= std::uint64_t{1} << u;
            dfs(u, path_cost + step_cost);
            visited_ &= ~(std::uint64_t{1} << u);
            path_.pop_back();
            if (timed_out_) {
                pending_lb_ = std::min(pending_lb_, bound);
                return;
            }
        }
    }

    const int n_;
    const std::vector<double>& costs_;
    const Clock::time_point deadline_;

    Route path_;
    std::uint64_t visited_ = 0;
    Route* incumbent_ = nullptr;
    double* incumbent_cost_ = nullptr;
    std::uint64_t ticks_ = 0;
    bool timed_out_ = false;
    double pending_lb_ = kInf;
};

}  // namespace

BranchAndBoundResult branch_and_bound(const Instance& instance, const SolverConfig& config) {
    config.validate();
    const int n = instance.n();
    if (n > 64) throw TooLargeError(n, 64);
    const auto start_time = Clock::now();
    const auto costs = dense_costs(instance);

    // Warm start: caller-provided route, else nearest neighbor polished by
    // local search. A strong incumbent tightens pruning from the first node.
    Route incumbent;
    if (config.initial_route)
        incumbent = *config.initial_route;
    else
        incumbent = local_search(instance, nearest_neighbor(instance, 0), config);
    double incumbent_cost = evaluate_route(instance, incumbent);

    BnbSearch search(instance, config, costs);
    if (n > 1) search.run(incumbent, incumbent_cost);

    BranchAndBoundResult out;
    out.result.route = std::move(incumbent);
    out.result.cost = incumbent_cost;
    out.result.solver_id = "branch_and_bound";
    out.result.seed = config.seed;
    out.result.optimal = !search.timed_out();
    out.result.runtime_seconds = elapsed_seconds(start_time);
    out.lower_bound = out.result.optimal
                          ? incumbent_cost
                          : std::min(search.pending_lower_bound(), incumbent_cost);
    return out;
}

}  // namespace inspath
