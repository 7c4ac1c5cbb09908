#include "sympow/waldschmidt.hpp"

#include <algorithm>
#include <string>

#include "sympow/lp.hpp"

namespace sympow {

std::vector<VertexSet> maximal_independent_sets(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > 24)
        fail(Errc::TooLarge, "independent-set enumeration capped at 24 vertices");
    for (const VertexSet& e : h.edges)
        if (e.size() == 1)
            fail(Errc::TrivialHypergraph,
                 "vertex " + h.name(e[0]) +
                     " carries a singleton edge and lies in no independent set");

    const auto masks = edge_masks(h);
    std::vector<std::uint64_t> independent;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::uint64_t em : masks)
            if ((s & em) == em) { ok = false; break; }
        if (ok) independent.push_back(s);
    }
    // Maximal = no strict independent superset. Adding any one vertex must
    // break independence.
    std::vector<VertexSet> maximal;
    for (std::uint64_t s : independent) {
        bool extendable = false;
        for (int v = 0; v < n && !extendable; ++v) {
            if (s >> v & 1u) continue;
            std::uint64_t bigger = s | std::uint64_t{1} << v;
            bool ok = true;
            for (std::uint64_t em : masks)
                if ((bigger & em) == em) { ok = false; break; }
            extendable = ok;
        }
        if (!extendable) maximal.push_back(set_from_mask(s, n));
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::vector<std::pair<int, long long>> alpha_sequence(const Hypergraph& h, int m_max,
                                                      const SymbolicOptions& opts) {
    if (m_max < 1) fail(Errc::BadParams, "alpha sequence wants m_max >= 1");
    std::vector<std::pair<int, long long>> seq;
    seq.reserve(m_max);
    for (int m = 1; m <= m_max; ++m)
        seq.emplace_back(m, alpha(symbolic_power(h, m, opts)));
    return seq;
}

LpSolution fractional_chromatic(const Hypergraph& h, int max_vertices) {
    const int n = h.vertex_count();
    if (n > max_vertices)
        fail(Errc::TooLarge, "fractional chromatic number capped at " +
                                 std::to_string(max_vertices) + " vertices");

    const auto sets = maximal_independent_sets(h);

    // Covering LP: min sum y_S with sum_{S contains v} y_S >= 1, y >= 0.
    // We run the simplex on its packing dual max sum x_v, sum_{v in S} x_v
    // <= 1, x >= 0, whose slack basis is feasible from the start; the
    // covering weights come back as the dual values.
    std::vector<std::vector<Rational>> a(sets.size(), std::vector<Rational>(n, Rational(0)));
    for (std::size_t s = 0; s < sets.size(); ++s)
        for (VertexId v : sets[s]) a[s][v] = 1;
    const std::vector<Rational> b(sets.size(), Rational(1));
    const std::vector<Rational> c(n, Rational(1));
    const LpResult lp = simplex_max(a, b, c);

    LpSolution solution;
    solution.optimum = lp.value;
    Rational total = 0;
    std::vector<Rational> coverage(n, Rational(0));
    for (std::size_t s = 0; s < sets.size(); ++s) {
        if (lp.dual[s] == 0) continue;
        internal_check(lp.dual[s] > 0, "negative covering weight");
        solution.weights.push_back({sets[s], lp.dual[s]});
        total += lp.dual[s];
        for (VertexId v : sets[s]) coverage[v] += lp.dual[s];
    }
    internal_check(total == solution.optimum,
                   "certificate weight does not match the LP optimum");
    for (int v = 0; v < n; ++v)
        internal_check(coverage[v] >= 1, "vertex " + h.name(v) + " is undercovered");
    return solution;
}

Rational waldschmidt_via_chi(const Hypergraph& h, int max_vertices) {
    bool nontrivial = std::any_of(h.edges.begin(), h.edges.end(),
                                  [](const VertexSet& e) { return e.size() >= 2; });
    if (!nontrivial)
        fail(Errc::TrivialHypergraph,
             "Waldschmidt via chi* needs an edge with at least two vertices");
    const Rational chi = fractional_chromatic(h, max_vertices).optimum;
    internal_check(chi > 1, "fractional chromatic number at most 1");
    return chi / (chi - 1);
}

Rational waldschmidt_r_partite(const Hypergraph& h, int r) {
    if (r < 1) fail(Errc::BadParams, "partite parameter must be positive");
    if (!is_uniform(h, r) || !find_r_partition(h, r))
        fail(Errc::NotRPartite, "hypergraph is not " + std::to_string(r) +
                                    "-uniform and " + std::to_string(r) + "-partite");
    return Rational(r);
}

std::vector<Rational> waldschmidt_upper_bounds(const Hypergraph& h, int m_max,
                                               const SymbolicOptions& opts) {
    std::vector<Rational> bounds;
    bounds.reserve(m_max);
    for (const auto& [m, a] : alpha_sequence(h, m_max, opts))
        bounds.push_back(Rational(a) / m);
    return bounds;
}

} // namespace sympow
