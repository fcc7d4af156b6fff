#ifndef ZDG_GRAPH_IO_HPP
#define ZDG_GRAPH_IO_HPP

#include <iosfwd>
#include <string_view>

#include "zdg/zdgraph.hpp"

namespace zdg {

enum class ExportFormat { edgelist, dot, graphml };

/// Parse "edgelist" / "dot" / "graphml"; throws invalid_parameter otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Write the graph deterministically. Vertices are graph ids (ascending
/// element index); DOT and GraphML nodes carry the element index and the
/// class string "k1,...,kl|sq". Edge list lines are "u v" with u < v,
/// ascending.
void export_graph(std::ostream& out, const ZDGraph& g, ExportFormat format);

} // namespace zdg

#endif // ZDG_GRAPH_IO_HPP
