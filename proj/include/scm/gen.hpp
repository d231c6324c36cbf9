#ifndef SCM_GEN_HPP
#define SCM_GEN_HPP

#include <cstdint>
#include <optional>

#include "scm/instance.hpp"

namespace scm {

/// Parameters of the random benchmark family: alpha vertices, average total
/// degree beta (so round(beta*alpha/2) directed edges, overridable), and a
/// gamma fraction of observed vertices.
struct GenParams {
    int alpha = 0;
    double beta = 2.5;
    double gamma = 0.1;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> edges; // explicit edge count override
};

/// Erdős–Rényi style instance: distinct ordered vertex pairs sampled
/// uniformly without replacement (no self-loops), every edge labeled with a
/// fair sign, exactly floor(gamma*alpha) vertices observed with fair signs,
/// and every vertex of in-degree zero declared an input. Byte-identical
/// output for a fixed seed. Throws std::invalid_argument on bad parameters.
Instance generate(const GenParams& params);

} // namespace scm

#endif
