#ifndef MODEC_IO_HPP
#define MODEC_IO_HPP

#include <string>

#include "modec/digraph.hpp"

namespace modec {

/// Parses the edge-list text format.
///
/// One record per line: two tokens form an edge `<src-label> <dst-label>`,
/// a single token declares an isolated vertex. `#` starts a comment, blank
/// lines are skipped. Vertex ids are assigned densely in first-appearance
/// order. Duplicate edges are deduplicated; a self-loop raises SelfLoopError
/// with its line number.
Digraph parse_edge_list(const std::string& text);

/// Canonical edge-list serialization: every vertex label on its own line in
/// id order, then all edges sorted by (src, dst). parse_edge_list inverts it
/// exactly, labels included.
std::string serialize_edge_list(const Digraph& g);

/// DOT rendering of a digraph.
std::string to_dot(const Digraph& g);

}  // namespace modec

#endif
