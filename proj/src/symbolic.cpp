#include "sympow/symbolic.hpp"

#include <algorithm>
#include <string>

namespace sympow {

namespace {

// All monomials of total degree n in the variables of `support`: the minimal
// generators of the n-th power of the prime those variables generate.
std::vector<Monomial> prime_power_generators(int nvars, const VertexSet& support, int n) {
    std::vector<Monomial> out;
    Monomial current = Monomial::one(nvars);
    auto place = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == support.size()) {
            current.exponents[support[pos]] = remaining;
            out.push_back(current);
            current.exponents[support[pos]] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current.exponents[support[pos]] = e;
            self(self, pos + 1, remaining - e);
        }
        current.exponents[support[pos]] = 0;
    };
    place(place, 0, n);
    return out;
}

} // namespace

MonomialIdeal edge_ideal(const Hypergraph& h) {
    std::vector<Monomial> gens;
    gens.reserve(h.edges.size());
    for (const VertexSet& e : h.edges)
        gens.push_back(Monomial::from_support(h.vertex_count(), e));
    return MonomialIdeal::from_generators(h.vertex_count(), std::move(gens));
}

MonomialIdeal symbolic_power(const Hypergraph& h, int n, const SymbolicOptions& opts) {
    if (n < 1) fail(Errc::BadParams, "symbolic power wants n >= 1");
    if (h.vertex_count() > opts.max_vertices)
        fail(Errc::TooLarge, "symbolic power capped at " +
                                 std::to_string(opts.max_vertices) + " vertices");

    const auto covers = minimal_vertex_covers(h, opts.max_covers);
    const int nvars = h.vertex_count();

    MonomialIdeal result =
        MonomialIdeal::from_generators(nvars, prime_power_generators(nvars, covers[0], n));
    for (std::size_t i = 1; i < covers.size(); ++i) {
        MonomialIdeal prime_power =
            MonomialIdeal::from_generators(nvars, prime_power_generators(nvars, covers[i], n));
        result = intersect(result, prime_power);
    }
    return result;
}

bool sullivant_member(const Hypergraph& h, const Monomial& m, int k) {
    if (k < 1) fail(Errc::BadParams, "symbolic membership wants k >= 1");
    const MonomialIdeal ideal = edge_ideal(h);
    if (m.nvars() != ideal.nvars())
        fail(Errc::MixedAmbient, "monomial does not live over the hypergraph's vertices");

    // Walk every divisor X^b of m with deg(X^b) <= k-1 and test m / X^b in I.
    Monomial divisor = Monomial::one(m.nvars());
    auto walk = [&](auto&& self, int var, long long budget) -> bool {
        if (var == m.nvars()) return ideal.contains(m.quotient_by(divisor));
        int cap = static_cast<int>(std::min<long long>(m.exponents[var], budget));
        for (int e = 0; e <= cap; ++e) {
            divisor.exponents[var] = e;
            if (!self(self, var + 1, budget - e)) {
                divisor.exponents[var] = 0;
                return false;
            }
        }
        divisor.exponents[var] = 0;
        return true;
    };
    return walk(walk, 0, k - 1);
}

EqualityReport check_equality(const Hypergraph& h, int n, const SymbolicOptions& opts) {
    const MonomialIdeal symbolic = symbolic_power(h, n, opts);
    const MonomialIdeal ordinary = power(edge_ideal(h), n);

    EqualityReport report;
    report.n = n;
    for (const Monomial& g : symbolic.generators())
        if (!ordinary.contains(g)) report.extra_generators.push_back(g);
    report.equal = report.extra_generators.empty();

    // The ordinary power always sits inside the symbolic power; if it does
    // not, the cover enumeration or the intersection is broken.
    for (const Monomial& g : ordinary.generators())
        internal_check(symbolic.contains(g), "ordinary power escapes symbolic power");
    internal_check(report.equal == equals(symbolic, ordinary),
                   "difference generators disagree with canonical equality");
    return report;
}

MonomialIdeal second_symbolic_via_bad(const Hypergraph& h) {
    if (!is_uniform(h, 3) || !find_r_partition(h, 3))
        fail(Errc::NotThreePartite,
             "bad-subhypergraph formula needs a 3-uniform 3-partite hypergraph");

    MonomialIdeal result = power(edge_ideal(h), 2);
    std::vector<Monomial> sextics;
    for (const BadWitness& w : find_bad_subhypergraphs(h))
        sextics.push_back(Monomial::from_support(h.vertex_count(), w.vertex_set()));
    if (!sextics.empty())
        result = sum(result, MonomialIdeal::from_generators(h.vertex_count(),
                                                            std::move(sextics)));
    return result;
}

const char* to_string(EqualityVerdict v) {
    switch (v) {
    case EqualityVerdict::NoBad: return "NO_BAD";
    case EqualityVerdict::AllBadComplemented: return "ALL_BAD_COMPLEMENTED";
    case EqualityVerdict::BadUncomplemented: return "BAD_UNCOMPLEMENTED";
    }
    return "?";
}

Classification classify_3partite_equality(const Hypergraph& h) {
    if (!is_uniform(h, 3) || !find_r_partition(h, 3))
        fail(Errc::NotThreePartite,
             "classification needs a 3-uniform 3-partite hypergraph");

    Classification c;
    c.witnesses = find_bad_subhypergraphs(h);
    if (c.witnesses.empty()) {
        c.verdict = EqualityVerdict::NoBad;
        return c;
    }

    // A bad triple is harmless exactly when its six vertices split into two
    // disjoint hyperedges of H: that factors the sextic into I^2. The two
    // halves need not be edges of the triple itself (a triple can be rescued
    // by a perfect matching from elsewhere in H).
    auto complemented = [&](const BadWitness& w) {
        const VertexSet all = w.vertex_set();
        for (const VertexSet& e : h.edges) {
            if (!std::includes(all.begin(), all.end(), e.begin(), e.end())) continue;
            VertexSet rest;
            std::set_difference(all.begin(), all.end(), e.begin(), e.end(),
                                std::back_inserter(rest));
            if (h.has_edge(rest)) return true;
        }
        return false;
    };

    for (const BadWitness& w : c.witnesses) {
        if (!complemented(w)) {
            c.verdict = EqualityVerdict::BadUncomplemented;
            c.uncomplemented_witness = w;
            return c;
        }
    }
    c.verdict = EqualityVerdict::AllBadComplemented;
    return c;
}

} // namespace sympow
