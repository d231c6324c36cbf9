#include "scm/reduce.hpp"

#include <algorithm>

namespace scm {

namespace {

// First condition (in order 1..6) under which vertex v is effectively
// unconstrained, or 0 if none applies. `input` is the current input set.
int first_condition(const Instance& inst, int v, const std::vector<char>& input) {
    for (int e : inst.in_edges(v)) {
        const auto& ed = inst.edge(e);
        if (ed.src == v && ed.sign == Sign::plus) return 1;
    }
    for (int e : inst.in_edges(v))
        if (!inst.edge(e).sign) return 2;

    bool got_plus = false;
    bool got_minus = false;
    for (int e : inst.in_edges(v)) {
        const auto& ed = inst.edge(e);
        if (auto obs_j = inst.observation(ed.src))
            (influence(*obs_j, *ed.sign) == Sign::plus ? got_plus : got_minus) = true;
    }
    if (got_plus && got_minus) return 3;

    if (auto obs_v = inst.observation(v)) {
        if (*obs_v == Sign::plus ? got_plus : got_minus) return 4;
    } else if (!inst.in_edges(v).empty()) {
        bool all_targets_input = true;
        for (int e : inst.out_edges(v))
            if (!input[static_cast<size_t>(inst.edge(e).dst)]) {
                all_targets_input = false;
                break;
            }
        if (all_targets_input) return 5;
    }

    for (int e : inst.in_edges(v)) {
        int j = inst.edge(e).src;
        if (inst.observation(j) || !input[static_cast<size_t>(j)]) continue;
        bool others_input = true;
        for (int f : inst.out_edges(j)) {
            int k = inst.edge(f).dst;
            if (k != v && !input[static_cast<size_t>(k)]) {
                others_input = false;
                break;
            }
        }
        if (others_input) return 6;
    }
    return 0;
}

} // namespace

std::pair<Instance, ReductionReport> reduce_inputs(const Instance& inst) {
    const int n = inst.vertex_count();
    std::vector<char> input(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) input[static_cast<size_t>(v)] = inst.is_input(v);

    ReductionReport report;
    std::vector<int> round = inst.non_input_vertices();
    std::vector<char> queued(static_cast<size_t>(n), 0);
    int iteration = 1;

    while (!round.empty()) {
        std::vector<int> next;
        auto requeue = [&](int u) {
            if (!input[static_cast<size_t>(u)] && !queued[static_cast<size_t>(u)]) {
                queued[static_cast<size_t>(u)] = 1;
                next.push_back(u);
            }
        };
        for (int v : round) {
            queued[static_cast<size_t>(v)] = 0;
            if (input[static_cast<size_t>(v)]) continue;
            int cond = first_condition(inst, v, input);
            if (cond == 0) continue;
            input[static_cast<size_t>(v)] = 1;
            report.added.push_back({v, cond, iteration});
            // Conditions 5 and 6 can newly apply to predecessors, successors,
            // and co-targets sharing a regulator with v.
            for (int e : inst.out_edges(v)) requeue(inst.edge(e).dst);
            for (int e : inst.in_edges(v)) {
                int p = inst.edge(e).src;
                requeue(p);
                for (int f : inst.out_edges(p)) requeue(inst.edge(f).dst);
            }
        }
        std::sort(next.begin(), next.end());
        round = std::move(next);
        ++iteration;
    }

    std::vector<int> added;
    for (const auto& step : report.added) added.push_back(step.vertex);
    return {inst.with_inputs(added), std::move(report)};
}

void repair_witness(const Instance& original, const ReductionReport& report, Witness& w) {
    auto vsign = [&](int v) -> Sign& { return w.vertex_signs[static_cast<size_t>(v)]; };
    auto esign = [&](int e) -> Sign& { return w.edge_signs[static_cast<size_t>(e)]; };

    // Input set as seen when each mark fired, rebuilt by peeling marks off
    // the final set newest-first.
    std::vector<char> input(static_cast<size_t>(original.vertex_count()), 0);
    for (int v = 0; v < original.vertex_count(); ++v)
        input[static_cast<size_t>(v)] = original.is_input(v);
    for (const auto& step : report.added) input[static_cast<size_t>(step.vertex)] = 1;

    for (auto it = report.added.rbegin(); it != report.added.rend(); ++it) {
        const int v = it->vertex;
        input[static_cast<size_t>(v)] = 0;
        switch (it->condition) {
        case 2: {
            for (int e : original.in_edges(v)) {
                const auto& ed = original.edge(e);
                if (!ed.sign) {
                    esign(e) = vsign(v) * vsign(ed.src);
                    break;
                }
            }
            break;
        }
        case 5: {
            // Any in-edge works; prefer one whose influence the data fixes.
            // Condition 2 fired first if any in-edge were unlabeled, and a
            // self-loop would have kept condition 5 from firing at all.
            int chosen = original.in_edges(v).front();
            for (int e : original.in_edges(v)) {
                const auto& ed = original.edge(e);
                if (ed.sign && original.observation(ed.src)) {
                    chosen = e;
                    break;
                }
            }
            vsign(v) = influence(vsign(original.edge(chosen).src), esign(chosen));
            break;
        }
        case 6: {
            // Re-find the regulator that satisfied the condition at mark time.
            for (int e : original.in_edges(v)) {
                int j = original.edge(e).src;
                if (original.observation(j) || !input[static_cast<size_t>(j)]) continue;
                bool others_input = true;
                for (int f : original.out_edges(j)) {
                    int k = original.edge(f).dst;
                    if (k != v && !input[static_cast<size_t>(k)]) {
                        others_input = false;
                        break;
                    }
                }
                if (!others_input) continue;
                vsign(j) = vsign(v) * *original.edge(e).sign;
                break;
            }
            break;
        }
        default:
            break; // 1, 3, 4 hold under every total extension
        }
    }
}

} // namespace scm
