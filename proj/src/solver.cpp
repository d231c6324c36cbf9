#include "scm/solver.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace scm {

namespace {

inline std::int8_t to_i8(Sign s) { return s == Sign::plus ? 1 : -1; }
inline Sign to_sign(std::int8_t v) { return v < 0 ? Sign::minus : Sign::plus; }

// Backtracking search over unknown vertex and edge signs. One support
// clause per constrained vertex: the disjunction over its in-edges of
// [sign(i) = sign(j) * sign(j->i)]. Contraposition propagation: once all
// but one disjunct of a clause are falsified, the last disjunct's single
// remaining unknown sign (if it is single) is forced.
class Search {
public:
    Search(const Instance& inst, std::span<const int> scope) : inst_(inst) {
        nv_ = inst.vertex_count();
        ne_ = inst.edge_count();
        val_.assign(static_cast<size_t>(nv_ + ne_), 0);
        occ_.assign(static_cast<size_t>(nv_ + ne_), {});

        std::vector<int> sorted_scope(scope.begin(), scope.end());
        std::sort(sorted_scope.begin(), sorted_scope.end());
        sorted_scope.erase(std::unique(sorted_scope.begin(), sorted_scope.end()),
                           sorted_scope.end());

        std::vector<char> vrel(static_cast<size_t>(nv_), 0);
        std::vector<char> erel(static_cast<size_t>(ne_), 0);
        clause_target_ = std::move(sorted_scope);
        for (size_t c = 0; c < clause_target_.size(); ++c) {
            int i = clause_target_[c];
            assert(!inst.is_input(i));
            vrel[static_cast<size_t>(i)] = 1;
            occ_[static_cast<size_t>(i)].push_back(static_cast<int>(c));
            for (int e : inst.in_edges(i)) {
                erel[static_cast<size_t>(e)] = 1;
                occ_[static_cast<size_t>(edge_var(e))].push_back(static_cast<int>(c));
                int j = inst.edge(e).src;
                vrel[static_cast<size_t>(j)] = 1;
                if (j != i) occ_[static_cast<size_t>(j)].push_back(static_cast<int>(c));
            }
        }

        for (int v = 0; v < nv_; ++v)
            if (vrel[static_cast<size_t>(v)] && !inst.observation(v)) decision_vars_.push_back(v);
        for (int e = 0; e < ne_; ++e)
            if (erel[static_cast<size_t>(e)] && !inst.edge(e).sign)
                decision_vars_.push_back(edge_var(e));

        // Decision seed: the influence fixed by the canonically first
        // observed regulator over a labeled edge, if any. Reproduces the
        // extension a reader derives from the given data.
        seed_.assign(static_cast<size_t>(nv_), 1);
        for (int v = 0; v < nv_; ++v) {
            for (int e : inst.in_edges(v)) {
                const auto& ed = inst.edge(e);
                auto obs = inst.observation(ed.src);
                if (obs && ed.sign) {
                    seed_[static_cast<size_t>(v)] = to_i8(influence(*obs, *ed.sign));
                    break;
                }
            }
        }

        queued_.assign(clause_target_.size(), 0);
        for (int v = 0; v < nv_; ++v)
            if (auto s = inst.observation(v)) val_[static_cast<size_t>(v)] = to_i8(*s);
        for (int e = 0; e < ne_; ++e)
            if (auto s = inst.edge(e).sign) val_[static_cast<size_t>(edge_var(e))] = to_i8(*s);
        for (size_t c = 0; c < clause_target_.size(); ++c) enqueue(static_cast<int>(c));
        root_ok_ = propagate();
    }

    SolveResult run(const Budget& budget) {
        SolveResult res;
        if (!root_ok_) {
            res.status = Status::inconsistent;
            res.stats = stats_;
            return res;
        }
        const bool timed = budget.time_limit.count() > 0;
        const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;

        size_t dv_pos = 0;
        for (;;) {
            while (dv_pos < decision_vars_.size() &&
                   val_[static_cast<size_t>(decision_vars_[dv_pos])] != 0)
                ++dv_pos;
            if (dv_pos == decision_vars_.size()) {
                res.status = Status::consistent;
                res.witness = extract_witness();
                res.stats = stats_;
                return res;
            }

            ++stats_.decisions;
            if (budget.max_decisions && stats_.decisions > budget.max_decisions)
                return {Status::budget_exceeded, std::nullopt, stats_};
            if (timed && (stats_.decisions & 0xff) == 0 &&
                std::chrono::steady_clock::now() > deadline)
                return {Status::budget_exceeded, std::nullopt, stats_};

            int var = decision_vars_[dv_pos];
            std::int8_t first = var < nv_ ? seed_[static_cast<size_t>(var)] : std::int8_t{1};
            frames_.push_back({var, trail_.size(), first, false, dv_pos});
            assign(var, first);

            while (!propagate()) {
                ++stats_.backtracks;
                bool flipped = false;
                while (!frames_.empty()) {
                    Frame& f = frames_.back();
                    while (trail_.size() > f.trail_mark) {
                        val_[static_cast<size_t>(trail_.back())] = 0;
                        trail_.pop_back();
                    }
                    if (!f.flipped) {
                        f.flipped = true;
                        dv_pos = f.next_dv;
                        assign(f.var, static_cast<std::int8_t>(-f.first));
                        flipped = true;
                        break;
                    }
                    frames_.pop_back();
                }
                if (!flipped) {
                    res.status = Status::inconsistent;
                    res.stats = stats_;
                    return res;
                }
            }
        }
    }

private:
    struct Frame {
        int var;
        size_t trail_mark;
        std::int8_t first;
        bool flipped;
        size_t next_dv;
    };

    int edge_var(int e) const { return nv_ + e; }

    void enqueue(int c) {
        if (!queued_[static_cast<size_t>(c)]) {
            queued_[static_cast<size_t>(c)] = 1;
            queue_.push_back(c);
        }
    }

    void assign(int var, std::int8_t v) {
        val_[static_cast<size_t>(var)] = v;
        trail_.push_back(var);
        for (int c : occ_[static_cast<size_t>(var)]) enqueue(c);
    }

    bool propagate() {
        while (!queue_.empty()) {
            int c = queue_.back();
            queue_.pop_back();
            queued_[static_cast<size_t>(c)] = 0;
            if (!check_clause(c)) {
                for (int q : queue_) queued_[static_cast<size_t>(q)] = 0;
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    // Evaluates the support clause of one constrained vertex and applies a
    // forced assignment when only one undetermined disjunct is left.
    // Returns false when every disjunct is falsified.
    bool check_clause(int c) {
        const int tv = clause_target_[static_cast<size_t>(c)];
        const std::int8_t ti = val_[static_cast<size_t>(tv)];
        int open = 0;
        int open_edge = -1;
        for (int e : inst_.in_edges(tv)) {
            const auto& ed = inst_.edge(e);
            const std::int8_t se = val_[static_cast<size_t>(edge_var(e))];
            if (ed.src == tv) {
                // self-loop: supported iff its edge sign is plus
                if (se > 0) return true;
                if (se < 0) continue;
            } else {
                const std::int8_t sj = val_[static_cast<size_t>(ed.src)];
                if (ti != 0 && sj != 0 && se != 0) {
                    if (ti == sj * se) return true;
                    continue;
                }
            }
            ++open;
            open_edge = e;
        }
        if (open == 0) return false;
        if (open == 1) force(tv, ti, open_edge);
        return true;
    }

    void force(int tv, std::int8_t ti, int e) {
        const auto& ed = inst_.edge(e);
        if (ed.src == tv) {
            ++stats_.propagations;
            assign(edge_var(e), 1);
            return;
        }
        const std::int8_t sj = val_[static_cast<size_t>(ed.src)];
        const std::int8_t se = val_[static_cast<size_t>(edge_var(e))];
        const int unset = (ti == 0) + (sj == 0) + (se == 0);
        if (unset != 1) return; // more than one unknown: nothing is forced yet
        ++stats_.propagations;
        if (ti == 0)
            assign(tv, static_cast<std::int8_t>(sj * se));
        else if (sj == 0)
            assign(ed.src, static_cast<std::int8_t>(ti * se));
        else
            assign(edge_var(e), static_cast<std::int8_t>(ti * sj));
    }

    Witness extract_witness() const {
        Witness w;
        w.vertex_signs.reserve(static_cast<size_t>(nv_));
        w.edge_signs.reserve(static_cast<size_t>(ne_));
        for (int v = 0; v < nv_; ++v) w.vertex_signs.push_back(to_sign(val_[static_cast<size_t>(v)]));
        for (int e = 0; e < ne_; ++e)
            w.edge_signs.push_back(to_sign(val_[static_cast<size_t>(edge_var(e))]));
        return w;
    }

    const Instance& inst_;
    int nv_ = 0;
    int ne_ = 0;
    std::vector<std::int8_t> val_; // 0 = unset, else +1/-1
    std::vector<std::vector<int>> occ_;
    std::vector<int> clause_target_;
    std::vector<int> decision_vars_;
    std::vector<std::int8_t> seed_;
    std::vector<int> trail_;
    std::vector<Frame> frames_;
    std::vector<int> queue_;
    std::vector<char> queued_;
    SolveStats stats_;
    bool root_ok_ = false;
};

} // namespace

SolveResult check_restricted(const Instance& inst, std::span<const int> scope,
                             const Budget& budget) {
    Search search(inst, scope);
    return search.run(budget);
}

SolveResult check_consistency(const Instance& inst, const Budget& budget) {
    return check_restricted(inst, inst.non_input_vertices(), budget);
}

bool verify_witness(const Instance& inst, std::span<const int> scope, const Witness& w) {
    if (static_cast<int>(w.vertex_signs.size()) != inst.vertex_count() ||
        static_cast<int>(w.edge_signs.size()) != inst.edge_count())
        throw std::invalid_argument("witness is not total over vertices and edges");
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (auto obs = inst.observation(v); obs && *obs != w.vertex_signs[static_cast<size_t>(v)])
            return false;
    for (int e = 0; e < inst.edge_count(); ++e)
        if (auto s = inst.edge(e).sign; s && *s != w.edge_signs[static_cast<size_t>(e)])
            return false;
    for (int i : scope) {
        bool explained = false;
        for (int e : inst.in_edges(i)) {
            const auto& ed = inst.edge(e);
            if (w.vertex_signs[static_cast<size_t>(i)] ==
                influence(w.vertex_signs[static_cast<size_t>(ed.src)],
                          w.edge_signs[static_cast<size_t>(e)])) {
                explained = true;
                break;
            }
        }
        if (!explained) return false;
    }
    return true;
}

bool brute_force_consistent(const Instance& inst, std::span<const int> scope) {
    std::vector<int> free_vertices;
    std::vector<int> free_edges;
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (!inst.observation(v)) free_vertices.push_back(v);
    for (int e = 0; e < inst.edge_count(); ++e)
        if (!inst.edge(e).sign) free_edges.push_back(e);

    const size_t k = free_vertices.size() + free_edges.size();
    if (k > 26)
        throw TooLargeError("too many free signs for exhaustive enumeration: " +
                            std::to_string(k));

    Witness w;
    w.vertex_signs.assign(static_cast<size_t>(inst.vertex_count()), Sign::plus);
    w.edge_signs.assign(static_cast<size_t>(inst.edge_count()), Sign::plus);
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (auto s = inst.observation(v)) w.vertex_signs[static_cast<size_t>(v)] = *s;
    for (int e = 0; e < inst.edge_count(); ++e)
        if (auto s = inst.edge(e).sign) w.edge_signs[static_cast<size_t>(e)] = *s;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        size_t bit = 0;
        for (int v : free_vertices)
            w.vertex_signs[static_cast<size_t>(v)] =
                (mask >> bit++) & 1 ? Sign::minus : Sign::plus;
        for (int e : free_edges)
            w.edge_signs[static_cast<size_t>(e)] = (mask >> bit++) & 1 ? Sign::minus : Sign::plus;
        if (verify_witness(inst, scope, w)) return true;
    }
    return false;
}

} // namespace scm
