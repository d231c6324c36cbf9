#ifndef SCM_SCC_HPP
#define SCM_SCC_HPP

#include <vector>

namespace scm {

/// Tarjan's algorithm, iterative. Returns one component id per vertex;
/// ids are assigned in reverse topological order of the condensation.
struct SccResult {
    std::vector<int> component;
    int count = 0;

    std::vector<std::vector<int>> members() const {
        std::vector<std::vector<int>> out(static_cast<size_t>(count));
        for (int v = 0; v < static_cast<int>(component.size()); ++v)
            out[static_cast<size_t>(component[static_cast<size_t>(v)])].push_back(v);
        return out;
    }
};

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj);

} // namespace scm

#endif
