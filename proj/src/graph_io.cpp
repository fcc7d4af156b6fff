#include "zdg/graph_io.hpp"

#include <ostream>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

ExportFormat parse_export_format(std::string_view name) {
    if (name == "edgelist") return ExportFormat::edgelist;
    if (name == "dot") return ExportFormat::dot;
    if (name == "graphml") return ExportFormat::graphml;
    throw invalid_parameter("unknown export format '" + std::string(name) +
                            "' (expected edgelist, dot, or graphml)");
}

namespace {

void write_edgelist(std::ostream& out, const ZDGraph& g) {
    const std::size_t v = g.vertex_count();
    for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = u + 1; w < v; ++w) {
            if (g.adjacent(u, w)) {
                out << u << " " << w << "\n";
            }
        }
    }
}

void write_dot(std::ostream& out, const ZDGraph& g) {
    const std::size_t v = g.vertex_count();
    out << "graph zdg {\n";
    for (std::size_t u = 0; u < v; ++u) {
        out << "  " << u << " [elem=" << g.element_of(u) << ", class=\""
            << g.class_of(u).to_string() << "\"];\n";
    }
    for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = u + 1; w < v; ++w) {
            if (g.adjacent(u, w)) {
                out << "  " << u << " -- " << w << ";\n";
            }
        }
    }
    out << "}\n";
}

void write_graphml(std::ostream& out, const ZDGraph& g) {
    const std::size_t v = g.vertex_count();
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"elem\" for=\"node\" attr.name=\"elem\" attr.type=\"string\"/>\n"
        << "  <key id=\"class\" for=\"node\" attr.name=\"class\" attr.type=\"string\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t u = 0; u < v; ++u) {
        out << "    <node id=\"n" << u << "\">"
            << "<data key=\"elem\">" << g.element_of(u) << "</data>"
            << "<data key=\"class\">" << g.class_of(u).to_string() << "</data>"
            << "</node>\n";
    }
    for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = u + 1; w < v; ++w) {
            if (g.adjacent(u, w)) {
                out << "    <edge source=\"n" << u << "\" target=\"n" << w << "\"/>\n";
            }
        }
    }
    out << "  </graph>\n</graphml>\n";
}

} // namespace

void export_graph(std::ostream& out, const ZDGraph& g, ExportFormat format) {
    switch (format) {
    case ExportFormat::edgelist:
        write_edgelist(out, g);
        break;
    case ExportFormat::dot:
        write_dot(out, g);
        break;
    case ExportFormat::graphml:
        write_graphml(out, g);
        break;
    }
}

} // namespace zdg
