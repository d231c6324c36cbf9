#ifndef SCM_INSTANCE_HPP
#define SCM_INSTANCE_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scm/sign.hpp"

namespace scm {

struct ValidationError : std::runtime_error {
    enum class Kind { duplicate_edge, unknown_vertex, conflicting_observation };
    ValidationError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

/// Unvalidated instance description, as collected from a file or builder calls.
/// Vertices are referred to by name; nothing is interned yet.
struct RawInstance {
    struct RawEdge {
        std::string src;
        std::string dst;
        std::optional<Sign> sign; // nullopt = unlabeled
    };

    std::vector<std::string> vertices;
    std::vector<RawEdge> edges;
    std::vector<std::pair<std::string, Sign>> observations;
    std::vector<std::string> inputs;

    /// Declare every vertex that is only mentioned by an edge, observation,
    /// or input statement. Parsers call this before validate().
    void declare_referenced();
};

/// Validated, immutable influence graph with a partial observation profile
/// and an input-vertex set. Vertex indices run 0..vertex_count() in
/// lexicographic name order, so index order is the canonical order used for
/// all deterministic output.
class Instance {
public:
    struct Edge {
        int src;
        int dst;
        std::optional<Sign> sign;

        bool operator==(const Edge&) const = default;
    };

    Instance() = default;

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }
    std::span<const std::string> names() const { return names_; }
    std::optional<int> find(std::string_view name) const;

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    /// Edge ids with dst == v, ascending (canonical in-edge order).
    std::span<const int> in_edges(int v) const { return in_edges_[static_cast<size_t>(v)]; }
    std::span<const int> out_edges(int v) const { return out_edges_[static_cast<size_t>(v)]; }

    std::optional<Sign> observation(int v) const { return profile_[static_cast<size_t>(v)]; }
    bool is_input(int v) const { return inputs_[static_cast<size_t>(v)] != 0; }
    std::vector<int> input_vertices() const;
    std::vector<int> non_input_vertices() const;
    int observation_count() const;
    int unlabeled_edge_count() const;

    /// Copy with extra vertices marked as inputs (indices into this instance).
    Instance with_inputs(std::span<const int> more) const;

    RawInstance to_raw() const;

    bool operator==(const Instance& other) const = default;

private:
    friend Instance validate(const RawInstance& raw);

    std::vector<std::string> names_;
    std::vector<Edge> edges_; // sorted by (src, dst)
    std::vector<std::optional<Sign>> profile_;
    std::vector<char> inputs_;
    std::vector<std::vector<int>> in_edges_;
    std::vector<std::vector<int>> out_edges_;
};

/// Interns vertices and builds adjacency. Throws ValidationError when an
/// edge endpoint, observation, or input names an undeclared vertex, when an
/// ordered (src, dst) pair occurs twice, or when a vertex is observed with
/// two different signs.
Instance validate(const RawInstance& raw);

/// Copy with every vertex of in-degree zero added to the input set.
Instance guess_inputs(const Instance& inst);

/// Total labeling of all vertices and edges, parallel to Instance indices.
struct Witness {
    std::vector<Sign> vertex_signs;
    std::vector<Sign> edge_signs;
};

/// A minimal set of non-input vertices whose constraints cannot jointly be
/// satisfied. removal_witnesses[k] labels everything consistently for
/// members minus k.
struct Mic {
    std::vector<int> members; // sorted
    std::vector<std::pair<int, Witness>> removal_witnesses;

    friend bool operator==(const Mic& a, const Mic& b) { return a.members == b.members; }
    friend bool operator<(const Mic& a, const Mic& b) { return a.members < b.members; }
};

} // namespace scm

#endif
