#pragma once

#include <utility>
#include <vector>

#include "sympow/hypergraph.hpp"
#include "sympow/rational.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

/// All maximal independent sets (no full edge inside, no independent proper
/// superset), sorted lexicographically. Fails with TrivialHypergraph when a
/// singleton edge makes some vertex uncolorable.
std::vector<VertexSet> maximal_independent_sets(const Hypergraph& h);

/// A fractional coloring: weights on maximal independent sets covering every
/// vertex with total weight 1 or more, of minimum total weight. Exact.
struct LpWeight {
    VertexSet set;
    Rational weight; // > 0; zero-weight sets are omitted
};
struct LpSolution {
    Rational optimum;
    std::vector<LpWeight> weights;
};

/// (m, alpha(I^(m))) for m = 1..m_max.
std::vector<std::pair<int, long long>> alpha_sequence(const Hypergraph& h, int m_max,
                                                      const SymbolicOptions& opts = {});

/// Exact fractional chromatic number: the covering LP over maximal
/// independent sets, solved through its packing dual by rational simplex
/// (Bland's rule). The returned certificate is re-verified before returning.
LpSolution fractional_chromatic(const Hypergraph& h, int max_vertices = 14);

/// Waldschmidt constant of the edge ideal via chi* / (chi* - 1).
Rational waldschmidt_via_chi(const Hypergraph& h, int max_vertices = 14);

/// Waldschmidt constant of an r-uniform r-partite hypergraph: exactly r.
Rational waldschmidt_r_partite(const Hypergraph& h, int r);

/// alpha(I^(m)) / m for m = 1..m_max; every term bounds the Waldschmidt
/// constant from above.
std::vector<Rational> waldschmidt_upper_bounds(const Hypergraph& h, int m_max,
                                               const SymbolicOptions& opts = {});

} // namespace sympow
