#ifndef SCM_REDUCE_HPP
#define SCM_REDUCE_HPP

#include <utility>
#include <vector>

#include "scm/instance.hpp"

namespace scm {

/// Trace of the input reduction: which vertex was marked, the first of the
/// six conditions that fired (1..6), and the fixpoint round it fired in.
struct ReductionStep {
    int vertex;
    int condition;
    int iteration;

    bool operator==(const ReductionStep&) const = default;
};

struct ReductionReport {
    std::vector<ReductionStep> added;
};

/// Marks every effectively unconstrained vertex as an additional input,
/// iterated to the (unique) fixpoint. A non-input vertex i is marked when
///   1. it has a positive self-loop,
///   2. some in-edge of i is unlabeled,
///   3. two in-edges carry observed influences of opposite sign,
///   4. i is observed and some in-edge carries a matching observed influence,
///   5. i is unobserved, has an in-edge, and all its targets are inputs, or
///   6. some regulator j of i is an unobserved input whose other targets are
///      all inputs.
/// Conditions read only the given labelings; 5 and 6 also read the growing
/// input set, so marking is re-triggered through the affected neighborhood.
std::pair<Instance, ReductionReport> reduce_inputs(const Instance& inst);

/// Rewrites a witness of the reduced instance into one for the original:
/// processes the marks newest-first and re-labels the sign each condition
/// leaves free (the marked vertex for 5, its regulator for 6, the unlabeled
/// edge for 2). Conditions 1, 3, and 4 hold under any extension.
void repair_witness(const Instance& original, const ReductionReport& report, Witness& w);

} // namespace scm

#endif
