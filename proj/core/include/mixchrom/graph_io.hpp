#pragma once

#include "mixchrom/mixed_graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mixchrom {

/// Parses the line-oriented graph format:
///
///     vertex <name>
///     edge <u> <v>
///     arc <tail> <head>
///
/// '#' starts a comment. Names are nonempty [A-Za-z0-9_] tokens. Duplicate
/// declarations, loops and undeclared endpoints raise ParseError.
MixedGraph parse_graph(std::string_view text);

MixedGraph read_graph_file(const std::filesystem::path& path);

// Vertices first, then edges, then arcs; parse_graph(format_graph(g)) == g.
std::string format_graph(const MixedGraph& g);

} // namespace mixchrom
