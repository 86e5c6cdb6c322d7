#pragma once

#include "starmoments/digraph.hpp"

#include <filesystem>
#include <iosfwd>

namespace starmoments {

/// A graph together with the degree recorded in its file header.
struct GraphFile {
    Digraph graph;
    int degree = 0;
};

/// Plain-text format: a header line "n d", then one "tail head multiplicity"
/// line per distinct arc, vertices 1-based. Blank lines and lines starting
/// with '#' are ignored on input. Throws GraphFormatError with line numbers.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::filesystem::path& path);

/// Writes arcs sorted by (tail, head).
void write_graph(std::ostream& out, const Digraph& g, int degree);
void write_graph_file(const std::filesystem::path& path, const Digraph& g, int degree);

} // namespace starmoments
