#include "scm/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace scm {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::string check_name(std::string_view tok, int line_no) {
    if (tok.find('"') != std::string_view::npos)
        throw ParseError(line_no, "vertex name must not contain '\"'");
    return std::string(tok);
}

Sign parse_sign(std::string_view tok, int line_no) {
    if (tok.size() == 1)
        if (auto s = sign_from_char(tok[0])) return *s;
    throw ParseError(line_no, "bad sign '" + std::string(tok) + "'");
}

} // namespace

RawInstance parse_raw(std::string_view text) {
    RawInstance raw;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0][0] == '#') continue;

        std::string_view kw = tokens[0];
        if (kw == "vertex") {
            if (tokens.size() != 2) throw ParseError(line_no, "expected: vertex <name>");
            raw.vertices.push_back(check_name(tokens[1], line_no));
        } else if (kw == "edge") {
            if (tokens.size() != 4) throw ParseError(line_no, "expected: edge <src> <dst> <+|-|?>");
            std::optional<Sign> sign;
            if (tokens[3] != "?") sign = parse_sign(tokens[3], line_no);
            raw.edges.push_back(
                {check_name(tokens[1], line_no), check_name(tokens[2], line_no), sign});
        } else if (kw == "obs") {
            if (tokens.size() != 3) throw ParseError(line_no, "expected: obs <name> <+|->");
            raw.observations.emplace_back(check_name(tokens[1], line_no),
                                          parse_sign(tokens[2], line_no));
        } else if (kw == "input") {
            if (tokens.size() != 2) throw ParseError(line_no, "expected: input <name>");
            raw.inputs.push_back(check_name(tokens[1], line_no));
        } else {
            throw ParseError(line_no, "unknown statement '" + std::string(kw) + "'");
        }
    }
    return raw;
}

Instance parse_instance(std::string_view text) {
    RawInstance raw = parse_raw(text);
    raw.declare_referenced();
    return validate(raw);
}

std::string write_instance(const Instance& inst) {
    std::string out;
    for (int v = 0; v < inst.vertex_count(); ++v) {
        out += "vertex ";
        out += inst.name(v);
        out += '\n';
    }
    for (const auto& e : inst.edges()) {
        out += "edge ";
        out += inst.name(e.src);
        out += ' ';
        out += inst.name(e.dst);
        out += ' ';
        out += e.sign ? sign_char(*e.sign) : '?';
        out += '\n';
    }
    for (int v = 0; v < inst.vertex_count(); ++v) {
        if (auto s = inst.observation(v)) {
            out += "obs ";
            out += inst.name(v);
            out += ' ';
            out += sign_char(*s);
            out += '\n';
        }
    }
    for (int v : inst.input_vertices()) {
        out += "input ";
        out += inst.name(v);
        out += '\n';
    }
    return out;
}

std::string export_asp_facts(const Instance& inst) {
    std::string out;
    auto quoted = [&](int v) { return '"' + inst.name(v) + '"'; };
    for (int v = 0; v < inst.vertex_count(); ++v)
        out += "vertex(" + quoted(v) + ").\n";
    for (const auto& e : inst.edges())
        out += "edge(" + quoted(e.src) + "," + quoted(e.dst) + ").\n";
    for (const auto& e : inst.edges())
        if (e.sign)
            out += "observedE(" + quoted(e.src) + "," + quoted(e.dst) + "," +
                   std::to_string(sign_int(*e.sign)) + ").\n";
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (auto s = inst.observation(v))
            out += "observedV(" + quoted(v) + "," + std::to_string(sign_int(*s)) + ").\n";
    for (int v : inst.input_vertices())
        out += "input(" + quoted(v) + ").\n";
    return out;
}

namespace {

// DOT quoted IDs: '"' cannot occur in vertex names, but a backslash would
// start an escape sequence and must be doubled.
std::string dot_quote(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string export_dot(const Instance& inst, std::span<const Mic> mics) {
    const int n = inst.vertex_count();
    std::vector<char> in_mic(static_cast<size_t>(n), 0);
    std::vector<char> in_merged(static_cast<size_t>(n), 0);
    for (const auto& mic : mics) {
        for (int v : mic.members) {
            in_mic[static_cast<size_t>(v)] = 1;
            in_merged[static_cast<size_t>(v)] = 1;
            for (int e : inst.in_edges(v))
                in_merged[static_cast<size_t>(inst.edge(e).src)] = 1;
        }
    }

    std::string out = "digraph {\n";
    auto node_stmt = [&](int v) {
        std::vector<std::string> attrs;
        std::string style;
        if (inst.observation(v)) style = "filled";
        if (inst.is_input(v)) style += style.empty() ? "dotted" : ",dotted";
        if (!style.empty()) attrs.push_back("style=\"" + style + "\"");
        if (auto obs = inst.observation(v)) {
            if (*obs == Sign::plus)
                attrs.push_back("fillcolor=lightgray");
            else {
                attrs.push_back("fillcolor=black");
                attrs.push_back("fontcolor=white");
            }
        }
        if (in_mic[static_cast<size_t>(v)]) attrs.push_back("penwidth=2.5");
        if (attrs.empty()) return "  " + dot_quote(inst.name(v)) + ";\n";
        std::string s = "  " + dot_quote(inst.name(v)) + " [";
        for (size_t i = 0; i < attrs.size(); ++i) s += (i ? ", " : "") + attrs[i];
        return s + "];\n";
    };

    bool any_merged = std::find(in_merged.begin(), in_merged.end(), 1) != in_merged.end();
    if (any_merged) {
        out += "  subgraph cluster_mics {\n  label=\"inconsistency region\";\n";
        for (int v = 0; v < n; ++v)
            if (in_merged[static_cast<size_t>(v)]) out += "  " + node_stmt(v);
        out += "  }\n";
    }
    for (int v = 0; v < n; ++v)
        if (!in_merged[static_cast<size_t>(v)]) out += node_stmt(v);

    for (const auto& e : inst.edges()) {
        out += "  " + dot_quote(inst.name(e.src)) + " -> " + dot_quote(inst.name(e.dst));
        if (!e.sign)
            out += " [style=dashed]";
        else if (*e.sign == Sign::minus)
            out += " [arrowhead=tee]";
        else
            out += " [arrowhead=normal]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace scm
