#pragma once

#include <sstream>
#include <string>

#include "snc/graph.hpp"
#include "snc/resolution_sim.hpp"

// Graphviz export. Vertices appear in id order, edges in normalized multiset
// order, so output is deterministic. Decorated graphs are colored by the sign
// of the divisor coefficient.

namespace snc {

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

inline std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

} // namespace detail

inline std::string graph_to_dot(const WeightedDualGraph& g) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=box];\n";
    for (const auto& [id, data] : g.vertices())
        out << "  " << detail::dot_quote(id) << " [label=\"" << detail::dot_escape(id)
            << "\\n" << data.weight << "\"];\n";
    for (const auto& [a, b] : g.edges())
        out << "  " << detail::dot_quote(a) << " -- " << detail::dot_quote(b) << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string coefficient_color(long long coefficient) {
    if (coefficient < 0)
        return "lightcoral";
    if (coefficient > 0)
        return "palegreen";
    return "gold";
}

inline std::string decorated_to_dot(const DecoratedGraph& d) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=box, style=filled];\n";
    for (const auto& [id, data] : d.graph.vertices()) {
        const auto c = d.coefficient(id);
        out << "  " << detail::dot_quote(id) << " [label=\"" << detail::dot_escape(id)
            << "\\n" << data.weight << "\\ncoef " << c << "\", fillcolor=\""
            << coefficient_color(c) << "\"];\n";
    }
    for (const auto& [a, b] : d.graph.edges())
        out << "  " << detail::dot_quote(a) << " -- " << detail::dot_quote(b) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace snc
