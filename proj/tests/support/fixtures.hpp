#ifndef SCM_TESTS_FIXTURES_HPP
#define SCM_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "scm/instance.hpp"
#include "scm/io.hpp"

namespace scm::tests {

// Simplified lactose operon model of E. coli: 8 species, 13 regulations,
// external inputs Le (extracellular lactose) and G (glucose).
inline Instance operon(const std::string& obs_lines = "") {
    static const char* graph =
        "edge A LacI -\n"
        "edge G cAMP-CRP -\n"
        "edge LacI LacY -\n"
        "edge LacI LacZ -\n"
        "edge LacY Le -\n"
        "edge LacY Li +\n"
        "edge LacZ A +\n"
        "edge LacZ G +\n"
        "edge LacZ Li -\n"
        "edge Le Li +\n"
        "edge Li G +\n"
        "edge cAMP-CRP LacY +\n"
        "edge cAMP-CRP LacZ +\n"
        "input G\n"
        "input Le\n";
    return parse_instance(std::string(graph) + obs_lines);
}

inline const char* operon_mu1() {
    return "obs Le -\nobs Li -\nobs G -\nobs LacY -\nobs LacZ -\nobs LacI +\nobs A -\n"
           "obs cAMP-CRP +\n";
}
inline const char* operon_mu2() {
    return "obs Le +\nobs Li +\nobs G -\nobs LacY +\nobs LacZ -\nobs LacI +\nobs A -\n"
           "obs cAMP-CRP -\n";
}
inline const char* operon_mu3() { return "obs Le +\nobs G -\nobs LacI +\n"; }
inline const char* operon_mu4() { return "obs LacY -\nobs LacZ +\nobs cAMP-CRP +\n"; }

// Five-vertex example: B and D are observed to increase, which cannot be
// explained jointly; {A, D} is the unique minimal inconsistent core.
inline Instance demo5() {
    return parse_instance(
        "edge A B +\n"
        "edge A D -\n"
        "edge A E -\n"
        "edge B A +\n"
        "edge B C +\n"
        "edge C E -\n"
        "edge D B +\n"
        "edge D C +\n"
        "edge D E +\n"
        "obs B +\n"
        "obs D +\n");
}

inline int vid(const Instance& inst, const std::string& name) {
    auto v = inst.find(name);
    if (!v) throw std::runtime_error("no vertex " + name);
    return *v;
}

inline std::vector<int> vids(const Instance& inst, std::initializer_list<const char*> names) {
    std::vector<int> out;
    for (const char* n : names) out.push_back(vid(inst, n));
    return out;
}

inline std::vector<std::string> names_of(const Instance& inst, const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(inst.name(v));
    return out;
}

} // namespace scm::tests

#endif
