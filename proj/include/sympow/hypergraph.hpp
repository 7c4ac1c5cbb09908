#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympow/error.hpp"

namespace sympow {

using VertexId = int;
// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

/// A simple hypergraph in canonical form: vertex ids are assigned by first
/// appearance in the raw input, edges are stored as sorted id sets and the
/// edge list is sorted lexicographically. Edges are nonempty, pairwise
/// incomparable under inclusion, and their union is the whole vertex set.
/// Immutable after construction; all operations below are pure.
struct Hypergraph {
    std::vector<std::string> vertex_names;
    std::vector<VertexSet> edges;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    const std::string& name(VertexId v) const { return vertex_names.at(v); }
    std::vector<std::string> edge_as_names(int e) const;
    bool has_edge(const VertexSet& edge) const; // binary search on the sorted list

    /// Structural equality at the vertex-name level: same named edge sets,
    /// regardless of the id assignment either object happens to carry.
    bool operator==(const Hypergraph& other) const;
    bool operator!=(const Hypergraph& other) const { return !(*this == other); }
};

/// Build a canonical Hypergraph from raw named edges, rejecting anything
/// that is not a simple hypergraph: empty edges, duplicate edges, nested
/// edges (the offending pair is reported), and empty input.
Hypergraph validate_simple(const std::vector<std::vector<std::string>>& raw_edges);

/// True iff every edge has exactly r vertices.
bool is_uniform(const Hypergraph& h, int r);

/// A partition of the vertex set into r blocks such that every edge meets
/// every block in exactly one vertex. Blocks are sorted vertex sets.
struct Partition {
    std::vector<VertexSet> blocks;
};

/// Check the Partition invariants against h (disjoint cover blocks, each a
/// vertex cover, |block ∩ edge| = 1 everywhere).
bool is_valid_partition(const Hypergraph& h, const Partition& p, int r);

/// Deterministic backtracking search for an r-partition of an r-uniform
/// hypergraph: vertices are assigned in id order, blocks tried in index
/// order, and the first complete assignment is returned.
std::optional<Partition> find_r_partition(const Hypergraph& h, int r);

/// All inclusion-minimal vertex covers (transversals), computed by expanding
/// the product of edges with minimalization after every step. Sorted by
/// (size, then lex). `max_covers` = 0 means unlimited; a nonzero cap makes
/// the expansion fail with TooLarge once exceeded.
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h,
                                             std::size_t max_covers = 0);

struct IndependenceResult {
    int number = 0;     // maximum size of a set containing no full edge
    VertexSet witness;  // lexicographically least maximum independent set
};
IndependenceResult independence_number(const Hypergraph& h);

/// Three edges of a host hypergraph forming the 6-vertex pattern
///   {x1,x2,x3}, {x3,x4,x5}, {x5,x6,x2}
/// with pairwise singleton intersections and no common vertex. `labeling[i]`
/// is the vertex playing role x_{i+1}; edge_indices is increasing.
struct BadWitness {
    std::array<int, 3> edge_indices{};
    std::array<VertexId, 6> labeling{};

    VertexSet vertex_set() const; // the six labeled vertices, sorted
};

/// Validate a witness against its host (pattern structure and labeling).
bool is_valid_bad_witness(const Hypergraph& h, const BadWitness& w);

/// All edge triples matching the bad pattern, one canonical witness per
/// triple, ordered by increasing (i, j, k). Roles are fixed by the
/// intersection structure: x3 = e_i∩e_j, x5 = e_j∩e_k, x2 = e_k∩e_i.
std::vector<BadWitness> find_bad_subhypergraphs(const Hypergraph& h);

/// Brute force over vertex permutations: true iff the automorphism group
/// acts transitively on the vertices. Guarded by `max_vertices`.
bool is_vertex_transitive(const Hypergraph& h, int max_vertices = 10);

/// 0/1 edge-vertex incidence matrix, rows in edge order, columns in vertex
/// order.
struct IncidenceMatrix {
    std::vector<std::vector<int>> entries;

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};
IncidenceMatrix edge_vertex_incidence(const Hypergraph& h);

/// Complete multipartite hypergraph on the given part sizes: one vertex per
/// slot (parts named a, b, c, ...), one edge for every choice of a single
/// vertex from each part.
Hypergraph complete_multipartite(const std::vector<int>& part_sizes);

// --- shared helpers ---------------------------------------------------------

/// Edge sets as bitmasks over vertex ids (requires vertex_count <= 64).
std::vector<std::uint64_t> edge_masks(const Hypergraph& h);

VertexSet set_from_mask(std::uint64_t mask, int n);
std::uint64_t mask_from_set(const VertexSet& s);

} // namespace sympow
