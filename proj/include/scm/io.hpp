#ifndef SCM_IO_HPP
#define SCM_IO_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scm/instance.hpp"

namespace scm {

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// Native instance format, one statement per line:
///   vertex <name>
///   edge <src> <dst> <+|-|?>     (? = unlabeled)
///   obs <name> <+|->
///   input <name>
/// Blank lines are skipped; lines starting with '#' are comments. Vertex
/// names may contain any non-whitespace bytes except '"'. Vertices that only
/// appear in edge/obs/input statements are declared implicitly.
RawInstance parse_raw(std::string_view text);
Instance parse_instance(std::string_view text);

/// Canonical serialization: vertex, edge, obs, input statements, each group
/// sorted. parse_instance(write_instance(x)) == x.
std::string write_instance(const Instance& inst);

/// Ground facts over vertex/1, edge/2, observedE/3, observedV/2, input/1.
/// Vertex names are double-quoted; signs render as 1 and -1.
std::string export_asp_facts(const Instance& inst);

/// Graphviz rendering. Positive edges get normal arrowheads, negative ones
/// tee heads, unlabeled ones are dashed. Observed-increase vertices are
/// filled lightgray, observed-decrease ones black with white text. Members
/// of the given MICs get bold outlines, and the union of the MIC
/// neighborhoods is grouped into a cluster.
std::string export_dot(const Instance& inst, std::span<const Mic> mics);

} // namespace scm

#endif
