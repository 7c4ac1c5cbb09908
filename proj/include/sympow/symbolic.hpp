#pragma once

#include <optional>
#include <vector>

#include "sympow/hypergraph.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

/// Size limits for the symbolic-power machinery (cover enumeration and the
/// iterated intersection both blow up past desk scale).
struct SymbolicOptions {
    int max_vertices = 14;
    std::size_t max_covers = 200;
};

/// One squarefree generator per edge (the product of its vertex variables).
/// Minimal as given because the edges form an antichain.
MonomialIdeal edge_ideal(const Hypergraph& h);

/// n-th symbolic power of the edge ideal, computed as the intersection over
/// all minimal vertex covers C of the n-th power of the prime generated by
/// C's variables. For squarefree edge ideals the minimal primes are exactly
/// the cover primes and the associated primes coincide with them, so this
/// matches the localization definition.
MonomialIdeal symbolic_power(const Hypergraph& h, int n,
                             const SymbolicOptions& opts = {});

/// Sullivant's divisor criterion: m lies in the k-th symbolic power iff
/// m / X^b lies in the edge ideal for every monomial divisor X^b of m with
/// deg(X^b) <= k-1 (including the trivial divisor, i.e. m itself must lie
/// in the edge ideal). Independent of the intersection route above.
bool sullivant_member(const Hypergraph& h, const Monomial& m, int k);

/// Comparison of the n-th symbolic and ordinary powers, with the minimal
/// generators of the symbolic power missing from the ordinary power as the
/// inequality certificate.
struct EqualityReport {
    int n = 0;
    bool equal = false;
    std::vector<Monomial> extra_generators;
};
EqualityReport check_equality(const Hypergraph& h, int n,
                              const SymbolicOptions& opts = {});

/// Second symbolic power of a 3-uniform 3-partite hypergraph, assembled as
/// I^2 plus one squarefree sextic per bad subhypergraph.
MonomialIdeal second_symbolic_via_bad(const Hypergraph& h);

enum class EqualityVerdict {
    NoBad,              // no bad subhypergraph: second powers agree
    AllBadComplemented, // every bad triple's vertex set splits into two
                        // disjoint hyperedges: second powers agree
    BadUncomplemented,  // some bad triple admits no such split: they differ
};

const char* to_string(EqualityVerdict v);

/// Structural prediction of whether the second symbolic and ordinary powers
/// coincide, for 3-uniform 3-partite hypergraphs.
struct Classification {
    EqualityVerdict verdict = EqualityVerdict::NoBad;
    std::vector<BadWitness> witnesses;
    std::optional<BadWitness> uncomplemented_witness;

    bool predicts_equal() const { return verdict != EqualityVerdict::BadUncomplemented; }
};
Classification classify_3partite_equality(const Hypergraph& h);

} // namespace sympow
