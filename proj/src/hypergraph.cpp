#include "sympow/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sympow {

namespace {

std::string edge_to_text(const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os << ",";
        os << names[i];
    }
    os << "}";
    return os.str();
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<std::string> Hypergraph::edge_as_names(int e) const {
    std::vector<std::string> out;
    out.reserve(edges.at(e).size());
    for (VertexId v : edges.at(e)) out.push_back(vertex_names.at(v));
    return out;
}

bool Hypergraph::has_edge(const VertexSet& edge) const {
    return std::binary_search(edges.begin(), edges.end(), edge);
}

bool Hypergraph::operator==(const Hypergraph& other) const {
    auto named_edges = [](const Hypergraph& h) {
        std::vector<std::vector<std::string>> out;
        out.reserve(h.edges.size());
        for (int e = 0; e < h.edge_count(); ++e) {
            auto names = h.edge_as_names(e);
            std::sort(names.begin(), names.end());
            out.push_back(std::move(names));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return named_edges(*this) == named_edges(other);
}

Hypergraph validate_simple(const std::vector<std::vector<std::string>>& raw_edges) {
    if (raw_edges.empty())
        fail(Errc::NoEdges, "a hypergraph needs at least one edge");

    // Vertex ids by first appearance across the raw input.
    Hypergraph h;
    std::map<std::string, VertexId> ids;
    std::vector<VertexSet> edges;
    edges.reserve(raw_edges.size());
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
        if (raw_edges[e].empty())
            fail(Errc::EmptyEdge, "edge " + std::to_string(e) + " is empty",
                 {static_cast<int>(e)});
        VertexSet edge;
        for (const std::string& name : raw_edges[e]) {
            auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(ids.size()));
            if (inserted) h.vertex_names.push_back(name);
            edge.push_back(it->second);
        }
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        edges.push_back(std::move(edge));
    }

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i] == edges[j])
                fail(Errc::DuplicateEdge,
                     "duplicate edge " + edge_to_text(raw_edges[i]),
                     {static_cast<int>(i), static_cast<int>(j)});
            if (subset_of(edges[i], edges[j]) || subset_of(edges[j], edges[i]))
                fail(Errc::NestedEdges,
                     "nested edges " + edge_to_text(raw_edges[i]) + " and " +
                         edge_to_text(raw_edges[j]),
                     {static_cast<int>(i), static_cast<int>(j)});
        }
    }

    std::sort(edges.begin(), edges.end());
    h.edges = std::move(edges);
    return h;
}

bool is_uniform(const Hypergraph& h, int r) {
    if (r < 1) fail(Errc::BadParams, "uniformity parameter must be positive");
    return std::all_of(h.edges.begin(), h.edges.end(),
                       [r](const VertexSet& e) { return static_cast<int>(e.size()) == r; });
}

bool is_valid_partition(const Hypergraph& h, const Partition& p, int r) {
    if (static_cast<int>(p.blocks.size()) != r) return false;
    std::vector<int> block_of(h.vertex_count(), -1);
    for (int b = 0; b < r; ++b) {
        if (p.blocks[b].empty()) return false;
        for (VertexId v : p.blocks[b]) {
            if (v < 0 || v >= h.vertex_count() || block_of[v] != -1) return false;
            block_of[v] = b;
        }
    }
    if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) return false;
    for (const VertexSet& e : h.edges) {
        std::vector<int> hits(r, 0);
        for (VertexId v : e) ++hits[block_of[v]];
        for (int b = 0; b < r; ++b)
            if (hits[b] != 1) return false;
    }
    return true;
}

std::optional<Partition> find_r_partition(const Hypergraph& h, int r) {
    if (r < 1) fail(Errc::BadParams, "partition size must be positive");
    if (!is_uniform(h, r))
        fail(Errc::NotUniform, "r-partition requires an r-uniform hypergraph");

    const int n = h.vertex_count();
    std::vector<std::vector<int>> edges_at(n);
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (VertexId v : h.edges[e]) edges_at[v].push_back(static_cast<int>(e));

    std::vector<int> block_of(n, -1);
    // |block ∩ edge| = 1 for an r-edge over r blocks is exactly "no two
    // vertices of an edge share a block".
    auto consistent = [&](VertexId v, int b) {
        for (int e : edges_at[v])
            for (VertexId u : h.edges[e])
                if (u != v && block_of[u] == b) return false;
        return true;
    };

    // Blocks are interchangeable, so restrict each vertex to the blocks seen
    // so far plus one fresh block (restricted growth); any partition can be
    // relabeled into this form, and refutations get r! times cheaper.
    auto search = [&](auto&& self, VertexId v, int used) -> bool {
        if (v == n) return used == r;
        const int limit = std::min(used, r - 1);
        for (int b = 0; b <= limit; ++b) {
            if (!consistent(v, b)) continue;
            block_of[v] = b;
            if (self(self, v + 1, std::max(used, b + 1))) return true;
            block_of[v] = -1;
        }
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;

    Partition p;
    p.blocks.assign(r, {});
    for (VertexId v = 0; v < n; ++v) p.blocks[block_of[v]].push_back(v);
    internal_check(is_valid_partition(h, p, r), "backtracking produced a bad partition");
    return p;
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
    if (h.vertex_count() > 64)
        fail(Errc::TooLarge, "bitmask operations support at most 64 vertices");
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edges.size());
    for (const VertexSet& e : h.edges) masks.push_back(mask_from_set(e));
    return masks;
}

VertexSet set_from_mask(std::uint64_t mask, int n) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) out.push_back(v);
    return out;
}

std::uint64_t mask_from_set(const VertexSet& s) {
    std::uint64_t m = 0;
    for (VertexId v : s) m |= std::uint64_t{1} << v;
    return m;
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h,
                                             std::size_t max_covers) {
    const auto masks = edge_masks(h);
    const int n = h.vertex_count();

    // Berge expansion: the transversals of the first k edges, kept minimal.
    std::vector<std::uint64_t> partial{0};
    for (std::uint64_t em : masks) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t t : partial) {
            if (t & em) { // already hits the new edge
                next.push_back(t);
                continue;
            }
            for (int v = 0; v < n; ++v)
                if (em >> v & 1u) next.push_back(t | std::uint64_t{1} << v);
        }
        // Numeric order on masks extends the subset order, so a single pass
        // over the sorted list keeps exactly the minimal transversals.
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<std::uint64_t> minimal;
        for (std::uint64_t t : next) {
            bool dominated = false;
            for (std::uint64_t m : minimal)
                if ((m & t) == m) { dominated = true; break; }
            if (!dominated) minimal.push_back(t);
        }
        partial = std::move(minimal);
        if (max_covers && partial.size() > max_covers)
            fail(Errc::TooLarge, "more than " + std::to_string(max_covers) +
                                     " minimal covers");
    }

    std::vector<VertexSet> covers;
    covers.reserve(partial.size());
    for (std::uint64_t m : partial) covers.push_back(set_from_mask(m, n));
    std::sort(covers.begin(), covers.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return covers;
}

IndependenceResult independence_number(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > 24)
        fail(Errc::TooLarge, "independence number enumeration capped at 24 vertices");
    const auto masks = edge_masks(h);

    IndependenceResult best;
    best.number = -1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool independent = true;
        for (std::uint64_t em : masks)
            if ((s & em) == em) { independent = false; break; }
        if (!independent) continue;
        int size = std::popcount(s);
        if (size < best.number) continue;
        VertexSet w = set_from_mask(s, n);
        if (size > best.number || w < best.witness) {
            best.number = size;
            best.witness = std::move(w);
        }
    }
    return best;
}

VertexSet BadWitness::vertex_set() const {
    VertexSet s(labeling.begin(), labeling.end());
    std::sort(s.begin(), s.end());
    return s;
}

bool is_valid_bad_witness(const Hypergraph& h, const BadWitness& w) {
    const auto& [i, j, k] = w.edge_indices;
    if (!(0 <= i && i < j && j < k && k < h.edge_count())) return false;
    std::array<VertexId, 6> lab = w.labeling;
    auto role = [&](int r) { return lab[r - 1]; };

    VertexSet verts(lab.begin(), lab.end());
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;

    auto sorted3 = [](VertexId a, VertexId b, VertexId c) {
        VertexSet s{a, b, c};
        std::sort(s.begin(), s.end());
        return s;
    };
    if (h.edges[i] != sorted3(role(1), role(2), role(3))) return false;
    if (h.edges[j] != sorted3(role(3), role(4), role(5))) return false;
    if (h.edges[k] != sorted3(role(5), role(6), role(2))) return false;

    auto inter = [](const VertexSet& a, const VertexSet& b) {
        VertexSet out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return out;
    };
    if (inter(h.edges[i], h.edges[j]) != VertexSet{role(3)}) return false;
    if (inter(h.edges[j], h.edges[k]) != VertexSet{role(5)}) return false;
    if (inter(h.edges[k], h.edges[i]) != VertexSet{role(2)}) return false;
    if (!inter(inter(h.edges[i], h.edges[j]), h.edges[k]).empty()) return false;
    return true;
}

std::vector<BadWitness> find_bad_subhypergraphs(const Hypergraph& h) {
    std::vector<int> cubic;
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.edges[e].size() == 3) cubic.push_back(e);

    auto single_intersection = [&](int a, int b, VertexId& out) {
        VertexSet inter;
        std::set_intersection(h.edges[a].begin(), h.edges[a].end(),
                              h.edges[b].begin(), h.edges[b].end(),
                              std::back_inserter(inter));
        if (inter.size() != 1) return false;
        out = inter[0];
        return true;
    };

    std::vector<BadWitness> found;
    for (std::size_t a = 0; a < cubic.size(); ++a) {
        for (std::size_t b = a + 1; b < cubic.size(); ++b) {
            VertexId x3;
            if (!single_intersection(cubic[a], cubic[b], x3)) continue;
            for (std::size_t c = b + 1; c < cubic.size(); ++c) {
                VertexId x5, x2;
                if (!single_intersection(cubic[b], cubic[c], x5)) continue;
                if (!single_intersection(cubic[c], cubic[a], x2)) continue;
                if (x2 == x3 || x3 == x5 || x2 == x5) continue;

                auto third = [&](int e, VertexId u, VertexId v) {
                    for (VertexId w : h.edges[e])
                        if (w != u && w != v) return w;
                    return VertexId{-1};
                };
                BadWitness w;
                w.edge_indices = {cubic[a], cubic[b], cubic[c]};
                w.labeling = {third(cubic[a], x2, x3), x2, x3,
                              third(cubic[b], x3, x5), x5,
                              third(cubic[c], x5, x2)};
                internal_check(is_valid_bad_witness(h, w),
                               "bad-triple labeling does not verify");
                found.push_back(w);
            }
        }
    }
    return found;
}

namespace {

// Deterministic search for an automorphism with image[0] == target: vertices
// are assigned images in id order, candidates tried in id order, and every
// fully mapped edge must land on an edge.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Hypergraph& h) : h_(h), n_(h.vertex_count()) {
        edges_at_.resize(n_);
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (VertexId v : h.edges[e]) edges_at_[v].push_back(static_cast<int>(e));
    }

    bool exists_mapping_zero_to(VertexId target) {
        image_.assign(n_, -1);
        used_.assign(n_, false);
        image_[0] = target;
        used_[target] = true;
        bool ok = extend(1);
        used_[target] = false;
        return ok;
    }

private:
    bool extend(VertexId v) {
        if (v == n_) return true;
        for (VertexId img = 0; img < n_; ++img) {
            if (used_[img]) continue;
            image_[v] = img;
            used_[img] = true;
            if (consistent(v) && extend(v + 1)) {
                used_[img] = false;
                image_[v] = -1;
                return true;
            }
            used_[img] = false;
            image_[v] = -1;
        }
        return false;
    }

    bool consistent(VertexId v) {
        for (int e : edges_at_[v]) {
            VertexSet mapped;
            bool complete = true;
            for (VertexId u : h_.edges[e]) {
                if (image_[u] < 0) { complete = false; break; }
                mapped.push_back(image_[u]);
            }
            if (!complete) continue;
            std::sort(mapped.begin(), mapped.end());
            if (!h_.has_edge(mapped)) return false;
        }
        return true;
    }

    const Hypergraph& h_;
    int n_;
    std::vector<std::vector<int>> edges_at_;
    std::vector<VertexId> image_;
    std::vector<bool> used_;
};

} // namespace

bool is_vertex_transitive(const Hypergraph& h, int max_vertices) {
    const int n = h.vertex_count();
    if (n > max_vertices)
        fail(Errc::TooLarge, "transitivity check capped at " +
                                 std::to_string(max_vertices) + " vertices");
    if (n == 1) return true;
    // Transitive iff the orbit of vertex 0 is everything: an automorphism
    // sending 0 to v and one sending 0 to u compose to send u to v.
    AutomorphismSearch search(h);
    for (VertexId target = 1; target < n; ++target)
        if (!search.exists_mapping_zero_to(target)) return false;
    return true;
}

IncidenceMatrix edge_vertex_incidence(const Hypergraph& h) {
    IncidenceMatrix m;
    m.entries.assign(h.edge_count(), std::vector<int>(h.vertex_count(), 0));
    for (int e = 0; e < h.edge_count(); ++e)
        for (VertexId v : h.edges[e]) m.entries[e][v] = 1;
    return m;
}

Hypergraph complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        fail(Errc::BadParams, "need at least one part");
    if (part_sizes.size() > 26)
        fail(Errc::BadParams, "at most 26 parts supported");
    for (int s : part_sizes)
        if (s < 1) fail(Errc::BadParams, "part sizes must be positive");

    std::vector<std::vector<std::string>> parts;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        std::vector<std::string> names;
        for (int i = 1; i <= part_sizes[p]; ++i)
            names.push_back(std::string(1, static_cast<char>('a' + p)) +
                            std::to_string(i));
        parts.push_back(std::move(names));
    }

    std::vector<std::vector<std::string>> raw;
    std::vector<std::string> current;
    auto expand = [&](auto&& self, std::size_t p) -> void {
        if (p == parts.size()) {
            raw.push_back(current);
            return;
        }
        for (const std::string& name : parts[p]) {
            current.push_back(name);
            self(self, p + 1);
            current.pop_back();
        }
    };
    expand(expand, 0);
    return validate_simple(raw);
}

} // namespace sympow
