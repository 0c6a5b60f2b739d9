#ifndef NDTOPO_WORKSPACE_HPP
#define NDTOPO_WORKSPACE_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "ndtopo/errors.hpp"

namespace ndtopo {

struct Limits {
    // Exact canonical labeling above this vertex count raises cap_error;
    // memoized paths fall back to direct evaluation.
    std::size_t canonical_cap = 40;
    // Work units spent on simplicity checks, greedy deletions, and
    // canonical search nodes before budget_error.
    std::uint64_t step_budget = 100'000'000;
    // Cliques enumerated before budget_error.
    std::uint64_t clique_budget = 1'000'000;
    // Lattice points per generated window.
    std::size_t window_cap = 10'000;
    // Worker threads for independent rim classifications (1 = sequential).
    unsigned jobs = 1;
};

/// Shared evaluation context: work budgets plus the memoization caches
/// keyed by canonical codes. All cached values are immutable; get/insert
/// is serialized, so a Workspace may be shared across worker threads.
class Workspace {
public:
    Workspace() = default;
    explicit Workspace(Limits limits) : limits_(limits) {}
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    const Limits& limits() const { return limits_; }

    // Count work against the step budget; throws budget_error once spent.
    void charge(std::uint64_t units = 1) {
        if (steps_.fetch_add(units, std::memory_order_relaxed) + units >
            limits_.step_budget) {
            throw budget_error("step budget exceeded");
        }
    }
    void charge_clique(std::uint64_t units = 1) {
        if (cliques_.fetch_add(units, std::memory_order_relaxed) + units >
            limits_.clique_budget) {
            throw budget_error("clique budget exceeded");
        }
    }
    std::uint64_t steps_spent() const { return steps_.load(); }

    std::optional<bool> cached_contractible(const std::string& code) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = contractible_.find(code);
        if (it == contractible_.end()) return std::nullopt;
        return it->second;
    }
    void remember_contractible(const std::string& code, bool value) {
        std::lock_guard<std::mutex> lock(mu_);
        contractible_.emplace(code, value);
    }

    // Positive sphere verdicts only; negatives are recomputed so that
    // refutation witnesses stay deterministic.
    std::optional<int> cached_sphere_dim(const std::string& code) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = sphere_dim_.find(code);
        if (it == sphere_dim_.end()) return std::nullopt;
        return it->second;
    }
    void remember_sphere_dim(const std::string& code, int dim) {
        std::lock_guard<std::mutex> lock(mu_);
        sphere_dim_.emplace(code, dim);
    }

private:
    Limits limits_;
    std::atomic<std::uint64_t> steps_{0};
    std::atomic<std::uint64_t> cliques_{0};
    mutable std::mutex mu_;
    std::unordered_map<std::string, bool> contractible_;
    std::unordered_map<std::string, int> sphere_dim_;
};

}  // namespace ndtopo

#endif
