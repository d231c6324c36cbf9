#ifndef SCM_DIAGNOSE_HPP
#define SCM_DIAGNOSE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scm/instance.hpp"
#include "scm/solver.hpp"

namespace scm {

/// Over-approximation digraph E': every edge whose target is not an input,
/// plus an inverse edge back to each unobserved regulator.
struct Digraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // sorted, unique

    std::vector<std::vector<int>> adjacency() const;
};

Digraph overapprox_digraph(const Instance& inst);

/// Mutual-reachability relation on E': {u,v} related iff u != v and both lie
/// in the same nontrivial strongly connected component. A necessary
/// condition for joint MIC membership.
struct CycleRelation {
    std::vector<int> component;               // per vertex: SCC id in E'
    std::vector<std::vector<int>> nontrivial; // members of each SCC of size >= 2

    bool related(int u, int v) const;
    std::vector<std::pair<int, int>> pairs() const; // u < v, sorted
};

CycleRelation cycle_relation(const Instance& inst);

/// Neighborhood graph of a vertex set W: W plus its regulators; the in-edges
/// of W plus inverse edges toward unobserved regulators.
struct MicGraph {
    std::vector<int> vertices;              // sorted
    std::vector<std::pair<int, int>> edges; // sorted, unique
};

MicGraph mic_graph(const Instance& inst, std::span<const int> members);

/// True iff all of `members` lie in one strongly connected component of g.
bool members_in_one_scc(const MicGraph& g, std::span<const int> members);

MicGraph merge_mics(const Instance& inst, std::span<const Mic> mics);

enum class DiagnosisMode { one, all, approx };

struct DiagnoseOptions {
    int max_cardinality = 8;
    std::uint64_t max_solver_calls = 1'000'000;
    Budget per_call_budget;
    bool scc_precheck = false; // reject candidates whose members span SCCs of
                               // their own neighborhood graph before solving
};

struct DiagnoseStats {
    std::uint64_t solver_calls = 0;
    std::uint64_t candidates = 0;
    SolveStats solve;
};

struct MicCheck {
    bool is_mic = false;
    bool budget_exceeded = false;
    std::vector<std::pair<int, Witness>> removal_witnesses;
};

/// Definition test: the scope restricted to W is inconsistent while every
/// W minus one vertex admits a witnessing labeling (collected per removal).
MicCheck is_mic(const Instance& inst, std::span<const int> members,
                const DiagnoseOptions& opts = {});

struct DiagnosisReport {
    DiagnosisMode mode = DiagnosisMode::one;
    std::vector<Mic> mics; // sorted, pairwise incomparable
    bool complete = false; // meaningful in all mode
    bool budget_exceeded = false;
    bool order_dependent = false; // approx mode results depend on MIC order
    MicGraph merged;
    DiagnoseStats stats;
};

/// Deletion-based shrinking from the full non-input set; empty when the
/// instance is consistent.
DiagnosisReport find_one_mic(const Instance& inst, const DiagnoseOptions& opts = {});

/// All MICs up to opts.max_cardinality: candidates are enumerated in
/// increasing cardinality inside cycle-connected vertex sets, supersets of
/// found MICs are skipped, and every survivor is confirmed by is_mic.
DiagnosisReport find_all_mics(const Instance& inst, const DiagnoseOptions& opts = {});

/// Repeatedly extracts one MIC and re-marks its members as inputs until the
/// instance becomes consistent.
DiagnosisReport approximate_all_mics(const Instance& inst, const DiagnoseOptions& opts = {});

} // namespace scm

#endif
