#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "inspath/errors.hpp"

namespace inspath {

// Symmetric n x n matrix of non-negative edge costs; absent entries mark
// node pairs with no direct edge. Stored dense (NaN = absent), which is fine
// at the few-hundred-node scale this library targets.
class CostMatrix {
public:
    CostMatrix() = default;

    explicit CostMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, kAbsent) {
        if (n < 0) throw Error("cost matrix size must be non-negative");
        for (int i = 0; i < n; ++i) entries_[idx(i, i)] = 0.0;
    }

    int size() const { return n_; }

    bool has(int i, int j) const { return !std::isnan(entries_[idx(i, j)]); }

    // Cost of a present edge; throws for absent pairs.
    double at(int i, int j) const {
        const double c = entries_[idx(i, j)];
        if (std::isnan(c)) throw MissingEdgeError(i, j);
        return c;
    }

    std::optional<double> get(int i, int j) const {
        const double c = entries_[idx(i, j)];
        if (std::isnan(c)) return std::nullopt;
        return c;
    }

    // Sets both (i, j) and (j, i).
    void set(int i, int j, double cost) {
        if (!(cost >= 0.0) || !std::isfinite(cost))
            throw Error("edge cost must be finite and >= 0");
        if (i == j && cost != 0.0) throw Error("diagonal cost must be zero");
        entries_[idx(i, j)] = cost;
        entries_[idx(j, i)] = cost;
    }

    void erase(int i, int j) {
        entries_[idx(i, j)] = kAbsent;
        entries_[idx(j, i)] = kAbsent;
    }

    bool complete() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!has(i, j)) return false;
        return true;
    }

    // Throws NotCompleteError naming the first absent pair.
    void require_complete() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!has(i, j)) throw NotCompleteError(i, j);
    }

    // Present upper-triangle entries, i < j.
    int edge_count() const {
        int count = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has(i, j)) ++count;
        return count;
    }

    friend bool operator==(const CostMatrix& a, const CostMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k) {
            const bool pa = !std::isnan(a.entries_[k]);
            const bool pb = !std::isnan(b.entries_[k]);
            if (pa != pb) return false;
            if (pa && a.entries_[k] != b.entries_[k]) return false;
        }
        return true;
    }

private:
    static constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();

    std::size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("cost matrix index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<double> entries_;
};

}  // namespace inspath
