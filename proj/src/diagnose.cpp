#include "scm/diagnose.hpp"

#include <algorithm>

#include "scm/scc.hpp"

namespace scm {

std::vector<std::vector<int>> Digraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count));
    for (auto [u, v] : edges) adj[static_cast<size_t>(u)].push_back(v);
    return adj;
}

Digraph overapprox_digraph(const Instance& inst) {
    Digraph g;
    g.vertex_count = inst.vertex_count();
    for (const auto& e : inst.edges()) {
        if (inst.is_input(e.dst)) continue;
        g.edges.emplace_back(e.src, e.dst);
        if (!inst.observation(e.src)) g.edges.emplace_back(e.dst, e.src);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

bool CycleRelation::related(int u, int v) const {
    // distinct vertices sharing a component are mutually reachable, and the
    // component is then necessarily nontrivial
    return u != v &&
           component[static_cast<size_t>(u)] == component[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> CycleRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& comp : nontrivial)
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j) out.emplace_back(comp[i], comp[j]);
    std::sort(out.begin(), out.end());
    return out;
}

CycleRelation cycle_relation(const Instance& inst) {
    auto scc = strongly_connected_components(overapprox_digraph(inst).adjacency());
    CycleRelation rel;
    for (auto& comp : scc.members())
        if (comp.size() >= 2) rel.nontrivial.push_back(std::move(comp));
    rel.component = std::move(scc.component);
    std::sort(rel.nontrivial.begin(), rel.nontrivial.end());
    return rel;
}

MicGraph mic_graph(const Instance& inst, std::span<const int> members) {
    MicGraph g;
    std::vector<char> in_w(static_cast<size_t>(inst.vertex_count()), 0);
    for (int v : members) in_w[static_cast<size_t>(v)] = 1;
    for (int v : members) {
        g.vertices.push_back(v);
        for (int e : inst.in_edges(v)) {
            int j = inst.edge(e).src;
            g.vertices.push_back(j);
            g.edges.emplace_back(j, v);
            if (!inst.observation(j)) g.edges.emplace_back(v, j);
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

bool members_in_one_scc(const MicGraph& g, std::span<const int> members) {
    if (members.size() <= 1) return true;
    auto local = [&](int v) {
        return static_cast<int>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
    };
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (auto [u, v] : g.edges) adj[static_cast<size_t>(local(u))].push_back(local(v));
    auto scc = strongly_connected_components(adj);
    int comp = scc.component[static_cast<size_t>(local(members[0]))];
    for (int v : members)
        if (scc.component[static_cast<size_t>(local(v))] != comp) return false;
    return true;
}

MicGraph merge_mics(const Instance& inst, std::span<const Mic> mics) {
    MicGraph g;
    for (const auto& mic : mics) {
        MicGraph part = mic_graph(inst, mic.members);
        g.vertices.insert(g.vertices.end(), part.vertices.begin(), part.vertices.end());
        g.edges.insert(g.edges.end(), part.edges.begin(), part.edges.end());
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

namespace {

struct Ctx {
    const DiagnoseOptions& opts;
    DiagnoseStats stats;
    bool exceeded = false;

    SolveResult solve(const Instance& inst, std::span<const int> scope) {
        if (exceeded || stats.solver_calls >= opts.max_solver_calls) {
            exceeded = true;
            return {Status::budget_exceeded, std::nullopt, {}};
        }
        ++stats.solver_calls;
        SolveResult r = check_restricted(inst, scope, opts.per_call_budget);
        stats.solve += r.stats;
        if (r.status == Status::budget_exceeded) exceeded = true;
        return r;
    }
};

MicCheck check_mic(const Instance& inst, std::span<const int> members, Ctx& ctx) {
    MicCheck out;
    if (ctx.opts.scc_precheck && !members_in_one_scc(mic_graph(inst, members), members))
        return out;
    SolveResult whole = ctx.solve(inst, members);
    if (whole.status == Status::budget_exceeded) {
        out.budget_exceeded = true;
        return out;
    }
    if (whole.status == Status::consistent) return out;

    std::vector<int> rest;
    for (int k : members) {
        rest.clear();
        for (int v : members)
            if (v != k) rest.push_back(v);
        SolveResult r = ctx.solve(inst, rest);
        if (r.status == Status::budget_exceeded) {
            out.budget_exceeded = true;
            return out;
        }
        if (r.status == Status::inconsistent) return out; // a proper subset already conflicts
        out.removal_witnesses.emplace_back(k, std::move(*r.witness));
    }
    out.is_mic = true;
    return out;
}

Mic make_mic(std::span<const int> members, MicCheck&& chk) {
    Mic mic;
    mic.members.assign(members.begin(), members.end());
    mic.removal_witnesses = std::move(chk.removal_witnesses);
    return mic;
}

// Finds one MIC of `inst` by deletion-based shrinking, sharing the budget in
// ctx. Returns nullopt when consistent or when the budget ran out (the
// latter sets ctx.exceeded).
std::optional<Mic> shrink_one(const Instance& inst, Ctx& ctx) {
    std::vector<int> current = inst.non_input_vertices();
    SolveResult base = ctx.solve(inst, current);
    if (base.status != Status::inconsistent) return std::nullopt;

    std::vector<int> candidate;
    for (int k : inst.non_input_vertices()) {
        if (current.size() == 1) break;
        candidate.clear();
        for (int v : current)
            if (v != k) candidate.push_back(v);
        if (candidate.size() == current.size()) continue;
        SolveResult r = ctx.solve(inst, candidate);
        if (r.status == Status::budget_exceeded) return std::nullopt;
        if (r.status == Status::inconsistent) current = candidate;
    }
    MicCheck chk = check_mic(inst, current, ctx);
    if (!chk.is_mic) return std::nullopt; // only possible on budget exhaustion
    return make_mic(current, std::move(chk));
}

// Enumerates cardinality-c subsets of pool (sorted) that do not contain any
// already-found MIC, pruning whole subtrees as soon as a prefix does.
// Returns false when the callback aborts the walk.
template <typename F>
bool combinations(const std::vector<int>& pool, size_t start, size_t want,
                  const std::vector<std::vector<int>>& found, std::vector<int>& prefix, F&& f) {
    if (want == 0) return f(prefix);
    for (size_t i = start; pool.size() - i >= want; ++i) {
        prefix.push_back(pool[i]);
        bool pruned = false;
        for (const auto& m : found)
            if (std::includes(prefix.begin(), prefix.end(), m.begin(), m.end())) {
                pruned = true;
                break;
            }
        if (!pruned && !combinations(pool, i + 1, want - 1, found, prefix, f)) {
            prefix.pop_back();
            return false;
        }
        prefix.pop_back();
    }
    return true;
}

void finalize(DiagnosisReport& report, const Instance& inst, Ctx& ctx) {
    std::sort(report.mics.begin(), report.mics.end());
    report.merged = merge_mics(inst, report.mics);
    report.budget_exceeded = ctx.exceeded;
    report.stats = ctx.stats;
}

} // namespace

MicCheck is_mic(const Instance& inst, std::span<const int> members, const DiagnoseOptions& opts) {
    Ctx ctx{opts};
    return check_mic(inst, members, ctx);
}

DiagnosisReport find_one_mic(const Instance& inst, const DiagnoseOptions& opts) {
    DiagnosisReport report;
    report.mode = DiagnosisMode::one;
    Ctx ctx{opts};
    if (auto mic = shrink_one(inst, ctx)) {
        // independent re-verification before reporting
        MicCheck again = check_mic(inst, mic->members, ctx);
        if (again.is_mic || again.budget_exceeded) report.mics.push_back(std::move(*mic));
    }
    finalize(report, inst, ctx);
    return report;
}

DiagnosisReport find_all_mics(const Instance& inst, const DiagnoseOptions& opts) {
    DiagnosisReport report;
    report.mode = DiagnosisMode::all;
    Ctx ctx{opts};

    const int max_card = std::max(1, opts.max_cardinality);
    CycleRelation rel = cycle_relation(inst);

    std::vector<int> singles = inst.non_input_vertices();
    std::vector<std::vector<int>> pools;
    for (const auto& comp : rel.nontrivial) {
        std::vector<int> pool;
        for (int v : comp)
            if (!inst.is_input(v)) pool.push_back(v);
        if (pool.size() >= 2) pools.push_back(std::move(pool));
    }

    bool card_truncated = false;
    for (const auto& pool : pools)
        if (static_cast<int>(pool.size()) > max_card) card_truncated = true;

    // Candidates normally consume at least one solver call each, so the call
    // budget bounds the walk. Precheck-rejected candidates do not, so cap
    // the walk itself as well (a rejection costs a small fraction of a call).
    const std::uint64_t candidate_cap =
        opts.max_solver_calls > (std::uint64_t{1} << 59) ? std::uint64_t(-1)
                                                         : opts.max_solver_calls * 16;
    std::vector<std::vector<int>> found;
    auto test = [&](const std::vector<int>& candidate) {
        if (ctx.stats.candidates >= candidate_cap) {
            ctx.exceeded = true;
            return false;
        }
        ++ctx.stats.candidates;
        MicCheck chk = check_mic(inst, candidate, ctx);
        if (chk.is_mic) {
            found.push_back(candidate);
            report.mics.push_back(make_mic(candidate, std::move(chk)));
        }
        return !ctx.exceeded;
    };

    bool keep_going = true;
    std::vector<int> prefix;
    for (int card = 1; keep_going && card <= max_card; ++card) {
        if (card == 1) {
            for (int v : singles) {
                prefix.assign(1, v);
                if (!(keep_going = test(prefix))) break;
            }
        } else {
            for (const auto& pool : pools) {
                if (static_cast<int>(pool.size()) < card) continue;
                prefix.clear();
                if (!(keep_going = combinations(pool, 0, static_cast<size_t>(card), found,
                                                prefix, test)))
                    break;
            }
        }
    }

    // independent re-verification of everything reported; cores found before
    // the budget ran out are kept when re-verification itself hits the limit
    for (auto it = report.mics.begin(); it != report.mics.end();) {
        if (ctx.exceeded) break;
        MicCheck again = check_mic(inst, it->members, ctx);
        it = (again.is_mic || again.budget_exceeded) ? it + 1 : report.mics.erase(it);
    }

    finalize(report, inst, ctx);
    report.complete = !ctx.exceeded && !card_truncated;
    return report;
}

DiagnosisReport approximate_all_mics(const Instance& inst, const DiagnoseOptions& opts) {
    DiagnosisReport report;
    report.mode = DiagnosisMode::approx;
    report.order_dependent = true;
    Ctx ctx{opts};

    Instance work = inst;
    while (!ctx.exceeded) {
        auto mic = shrink_one(work, ctx);
        if (!mic) break;
        MicCheck again = check_mic(work, mic->members, ctx);
        if (!again.is_mic && !again.budget_exceeded) break;
        Instance next = work.with_inputs(mic->members);
        report.mics.push_back(std::move(*mic));
        work = std::move(next);
    }
    finalize(report, inst, ctx);
    return report;
}

} // namespace scm
