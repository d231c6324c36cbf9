#include "scm/instance.hpp"

#include <algorithm>

namespace scm {

void RawInstance::declare_referenced() {
    std::vector<std::string> extra;
    for (const auto& e : edges) {
        extra.push_back(e.src);
        extra.push_back(e.dst);
    }
    for (const auto& [v, s] : observations) {
        (void)s;
        extra.push_back(v);
    }
    for (const auto& v : inputs) extra.push_back(v);
    vertices.insert(vertices.end(), extra.begin(), extra.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

std::optional<int> Instance::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

std::vector<int> Instance::input_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (inputs_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<int> Instance::non_input_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (!inputs_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

int Instance::observation_count() const {
    int n = 0;
    for (const auto& o : profile_) n += o.has_value();
    return n;
}

int Instance::unlabeled_edge_count() const {
    int n = 0;
    for (const auto& e : edges_) n += !e.sign.has_value();
    return n;
}

Instance Instance::with_inputs(std::span<const int> more) const {
    Instance copy = *this;
    for (int v : more) copy.inputs_[static_cast<size_t>(v)] = 1;
    return copy;
}

RawInstance Instance::to_raw() const {
    RawInstance raw;
    raw.vertices = names_;
    for (const auto& e : edges_)
        raw.edges.push_back({name(e.src), name(e.dst), e.sign});
    for (int v = 0; v < vertex_count(); ++v)
        if (auto s = observation(v)) raw.observations.emplace_back(name(v), *s);
    for (int v : input_vertices()) raw.inputs.push_back(name(v));
    return raw;
}

Instance validate(const RawInstance& raw) {
    Instance inst;
    inst.names_ = raw.vertices;
    std::sort(inst.names_.begin(), inst.names_.end());
    inst.names_.erase(std::unique(inst.names_.begin(), inst.names_.end()), inst.names_.end());

    const int n = inst.vertex_count();
    inst.profile_.assign(static_cast<size_t>(n), std::nullopt);
    inst.inputs_.assign(static_cast<size_t>(n), 0);
    inst.in_edges_.assign(static_cast<size_t>(n), {});
    inst.out_edges_.assign(static_cast<size_t>(n), {});

    auto resolve = [&](const std::string& name, const char* what) {
        auto idx = inst.find(name);
        if (!idx)
            throw ValidationError(ValidationError::Kind::unknown_vertex,
                                  std::string(what) + " references undeclared vertex '" + name + "'");
        return *idx;
    };

    inst.edges_.reserve(raw.edges.size());
    for (const auto& e : raw.edges) {
        int s = resolve(e.src, "edge");
        int d = resolve(e.dst, "edge");
        inst.edges_.push_back({s, d, e.sign});
    }
    std::sort(inst.edges_.begin(), inst.edges_.end(), [](const auto& a, const auto& b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    for (size_t i = 1; i < inst.edges_.size(); ++i) {
        const auto& a = inst.edges_[i - 1];
        const auto& b = inst.edges_[i];
        if (a.src == b.src && a.dst == b.dst)
            throw ValidationError(ValidationError::Kind::duplicate_edge,
                                  "duplicate edge " + inst.name(a.src) + " -> " + inst.name(a.dst));
    }
    for (int e = 0; e < inst.edge_count(); ++e) {
        inst.in_edges_[static_cast<size_t>(inst.edges_[static_cast<size_t>(e)].dst)].push_back(e);
        inst.out_edges_[static_cast<size_t>(inst.edges_[static_cast<size_t>(e)].src)].push_back(e);
    }

    for (const auto& [name, sign] : raw.observations) {
        int v = resolve(name, "observation");
        auto& slot = inst.profile_[static_cast<size_t>(v)];
        if (slot && *slot != sign)
            throw ValidationError(ValidationError::Kind::conflicting_observation,
                                  "conflicting observation for vertex '" + name + "'");
        slot = sign;
    }
    for (const auto& name : raw.inputs)
        inst.inputs_[static_cast<size_t>(resolve(name, "input"))] = 1;
    return inst;
}

Instance guess_inputs(const Instance& inst) {
    std::vector<int> roots;
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (inst.in_edges(v).empty()) roots.push_back(v);
    return inst.with_inputs(roots);
}

} // namespace scm
