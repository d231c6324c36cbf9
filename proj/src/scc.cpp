#include "scm/scc.hpp"

#include <algorithm>

namespace scm {

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    SccResult res;
    res.component.assign(static_cast<size_t>(n), -1);

    std::vector<int> index(static_cast<size_t>(n), -1);
    std::vector<int> lowlink(static_cast<size_t>(n), 0);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        size_t child;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child == 0) {
                index[static_cast<size_t>(v)] = lowlink[static_cast<size_t>(v)] = next_index++;
                stack.push_back(v);
                on_stack[static_cast<size_t>(v)] = 1;
            }
            bool descended = false;
            while (child < adj[static_cast<size_t>(v)].size()) {
                int w = adj[static_cast<size_t>(v)][child++];
                if (index[static_cast<size_t>(w)] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<size_t>(w)])
                    lowlink[static_cast<size_t>(v)] =
                        std::min(lowlink[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
            }
            if (descended) continue;
            if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                int comp = res.count++;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = 0;
                    res.component[static_cast<size_t>(w)] = comp;
                } while (w != v);
            }
            int finished = v;
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().v;
                lowlink[static_cast<size_t>(parent)] = std::min(
                    lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(finished)]);
            }
        }
    }
    return res;
}

} // namespace scm
