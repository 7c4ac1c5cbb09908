#pragma once

#include <string>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/hypergraph.hpp"

namespace sympow {

/// A monomial over a fixed ambient variable set, stored as an exponent
/// vector indexed by vertex id. Exponents are machine integers; operations
/// that could overflow raise instead of wrapping.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int v);
    /// Squarefree monomial with the given support.
    static Monomial from_support(int nvars, const VertexSet& support);

    int nvars() const { return static_cast<int>(exponents.size()); }
    long long degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    VertexSet support() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    /// Exponent-wise max(this - other, 0); the generator map behind colon.
    Monomial quotient_by(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exponents == other.exponents; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    std::string to_string(const std::vector<std::string>& names) const;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Canonical generator order: ascending degree, then descending
/// lexicographic on the exponent vector (x^2 before xy before y^2).
bool canonical_less(const Monomial& a, const Monomial& b);

/// A monomial ideal as its unique minimal generating set, canonically
/// sorted. The zero ideal has no generators; the unit ideal is {1}.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

    /// Minimalize: drop every generator divisible by another, sort, dedupe.
    static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;

    std::vector<std::string> generator_strings(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::vector<Monomial> gens_; // divisibility antichain, canonical order
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
/// Minimum generator degree; fails on the zero ideal.
long long alpha(const MonomialIdeal& a);
/// Generator-list equality; valid because minimal generating sets are unique.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace sympow
