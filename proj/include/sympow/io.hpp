#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sympow/hypergraph.hpp"
#include "sympow/path_ideals.hpp"

namespace sympow {

/// Parse the line-oriented hypergraph format:
///   # comment
///   edge: v1 v2 v3
/// Blank lines are ignored; names match [A-Za-z_][A-Za-z0-9_]*. Errors carry
/// line numbers.
Hypergraph parse_hypergraph_text(std::istream& in);

/// Parse {"edges": [["v1","v2"], ...]} with an optional "vertices" list that
/// must match the union of the edges exactly.
Hypergraph parse_hypergraph_json(const std::string& text);

/// Sniff the format (leading '{' means JSON) and parse.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);

/// Canonical text serialization; re-parsing yields an equal hypergraph.
std::string serialize_hypergraph_text(const Hypergraph& h);

/// Parse a rooted tree file: one "parent child" pair per line, # comments.
RootedTree parse_tree_text(std::istream& in);
RootedTree load_tree(const std::string& path);

} // namespace sympow
