#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/hypergraph.hpp"
#include "sympow/rational.hpp"

namespace sympow {

/// A rooted tree given by a parent map. Validated on construction: one root,
/// connected, acyclic.
struct RootedTree {
    std::vector<std::string> vertex_names;
    std::vector<int> parent; // parent id per vertex, -1 at the root
    int root = -1;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }

    static RootedTree from_edges(
        const std::vector<std::pair<std::string, std::string>>& parent_child);
};

/// t-path hypergraph of the n-cycle: vertices x1..xn, one edge per vertex
/// set of a t-vertex path (the consecutive windows). n edges for t < n, a
/// single edge for t = n.
Hypergraph path_hypergraph_cycle(int n, int t);

/// t-path hypergraph of a rooted tree: edges are the vertex sets of all
/// downward paths on t vertices. Vertices on no such path do not appear.
Hypergraph path_hypergraph_tree(const RootedTree& tree, int t);

struct PartiteCheck {
    bool is_partite = false;
    std::optional<Partition> partition;
};

/// t-partiteness of the cycle path hypergraph: when t divides n the residue
/// classes mod t form a t-partition; otherwise none exists.
PartiteCheck check_t_partite_cycle(int n, int t);

/// Closed-form Waldschmidt constant of the t-path ideal of the n-cycle:
/// with n = qt + r, the value is t when r = 0 and n/(q+1) otherwise.
Rational waldschmidt_cycle_path(int n, int t);

} // namespace sympow
