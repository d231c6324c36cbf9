#ifndef SCM_SOLVER_HPP
#define SCM_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "scm/instance.hpp"

namespace scm {

enum class Status { consistent, inconsistent, budget_exceeded };

struct SolveStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t backtracks = 0;

    SolveStats& operator+=(const SolveStats& o) {
        decisions += o.decisions;
        propagations += o.propagations;
        backtracks += o.backtracks;
        return *this;
    }
};

/// Optional limits; zero means unlimited. Hitting a limit yields
/// Status::budget_exceeded, never a wrong inconsistency verdict.
struct Budget {
    std::uint64_t max_decisions = 0;
    std::chrono::milliseconds time_limit{0};
};

struct SolveResult {
    Status status = Status::inconsistent;
    std::optional<Witness> witness; // present iff consistent
    SolveStats stats;
};

/// Decides whether total extensions of the edge and vertex labelings exist
/// under which every non-input vertex receives a matching influence from
/// some in-edge. Complete backtracking search with contraposition
/// propagation; deterministic for a fixed instance.
SolveResult check_consistency(const Instance& inst, const Budget& budget = {});

/// Same, but only the vertices in scope (which must be non-input) need to be
/// explained. Search variables are limited to scope vertices, their
/// regulators, and the connecting edges; everything else defaults to plus in
/// the returned witness.
SolveResult check_restricted(const Instance& inst, std::span<const int> scope,
                             const Budget& budget = {});

/// Pure evaluation: true iff w extends the given edge labels and
/// observations and every scope vertex receives a matching influence.
/// Throws std::invalid_argument if w is not total over vertices and edges.
bool verify_witness(const Instance& inst, std::span<const int> scope, const Witness& w);

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Independent oracle: enumerates all total extensions of the labelings and
/// accepts iff one satisfies verify_witness. Throws TooLargeError when more
/// than 26 signs are free.
bool brute_force_consistent(const Instance& inst, std::span<const int> scope);

} // namespace scm

#endif
