#include "sympow/path_ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sympow {

namespace {

void check_cycle_params(int n, int t) {
    if (n < 2 || t < 2 || t > n)
        fail(Errc::BadParams, "cycle path hypergraph wants 2 <= t <= n");
}

std::string cycle_vertex(int i) { return "x" + std::to_string(i + 1); }

} // namespace

RootedTree RootedTree::from_edges(
    const std::vector<std::pair<std::string, std::string>>& parent_child) {
    if (parent_child.empty()) fail(Errc::BadParams, "tree needs at least one edge");

    RootedTree tree;
    std::map<std::string, int> ids;
    auto id_of = [&](const std::string& name) {
        auto [it, inserted] = ids.try_emplace(name, static_cast<int>(ids.size()));
        if (inserted) tree.vertex_names.push_back(name);
        return it->second;
    };

    std::vector<int> parent;
    for (const auto& [p, c] : parent_child) {
        int pid = id_of(p), cid = id_of(c);
        parent.resize(tree.vertex_names.size(), -1);
        if (pid == cid) fail(Errc::BadParams, "self-loop at " + p);
        if (parent[cid] != -1)
            fail(Errc::BadParams, "vertex " + c + " has two parents");
        parent[cid] = pid;
    }
    parent.resize(tree.vertex_names.size(), -1);
    tree.parent = std::move(parent);

    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.parent[v] != -1) continue;
        if (tree.root != -1)
            fail(Errc::BadParams, "two roots: " + tree.vertex_names[tree.root] +
                                      " and " + tree.vertex_names[v]);
        tree.root = v;
    }
    if (tree.root == -1) fail(Errc::BadParams, "no root: the parent map has a cycle");

    // Every vertex must reach the root without revisiting anything.
    for (int v = 0; v < tree.vertex_count(); ++v) {
        int steps = 0;
        for (int u = v; u != tree.root; u = tree.parent[u])
            if (++steps > tree.vertex_count())
                fail(Errc::BadParams, "cycle in the parent map near " +
                                          tree.vertex_names[v]);
    }
    return tree;
}

Hypergraph path_hypergraph_cycle(int n, int t) {
    check_cycle_params(n, t);
    std::set<std::vector<std::string>> seen;
    std::vector<std::vector<std::string>> raw;
    for (int start = 0; start < n; ++start) {
        std::vector<std::string> window;
        window.reserve(t);
        for (int k = 0; k < t; ++k) window.push_back(cycle_vertex((start + k) % n));
        std::vector<std::string> key = window;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) raw.push_back(std::move(window));
    }
    return validate_simple(raw);
}

Hypergraph path_hypergraph_tree(const RootedTree& tree, int t) {
    if (t < 2) fail(Errc::BadParams, "tree path hypergraph wants t >= 2");

    std::vector<std::vector<int>> children(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.parent[v] != -1) children[tree.parent[v]].push_back(v);

    std::vector<std::vector<std::string>> raw;
    std::vector<int> path;
    auto descend = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (static_cast<int>(path.size()) == t) {
            std::vector<std::string> edge;
            for (int u : path) edge.push_back(tree.vertex_names[u]);
            raw.push_back(std::move(edge));
        } else {
            for (int c : children[v]) self(self, c);
        }
        path.pop_back();
    };
    for (int v = 0; v < tree.vertex_count(); ++v) descend(descend, v);

    if (raw.empty())
        fail(Errc::NoPathsOfLength,
             "the tree has no downward path on " + std::to_string(t) + " vertices");
    return validate_simple(raw);
}

PartiteCheck check_t_partite_cycle(int n, int t) {
    check_cycle_params(n, t);
    PartiteCheck result;
    if (n % t != 0) return result;

    // Residue classes mod t; vertex ids in the generated hypergraph follow
    // the cycle order, so block i collects ids congruent to i.
    Partition p;
    p.blocks.assign(t, {});
    for (int v = 0; v < n; ++v) p.blocks[v % t].push_back(v);
    internal_check(is_valid_partition(path_hypergraph_cycle(n, t), p, t),
                   "residue classes fail the partition invariants");
    result.is_partite = true;
    result.partition = std::move(p);
    return result;
}

Rational waldschmidt_cycle_path(int n, int t) {
    check_cycle_params(n, t);
    const int q = n / t;
    if (n % t == 0) return Rational(t);
    return Rational(n) / (q + 1);
}

} // namespace sympow
