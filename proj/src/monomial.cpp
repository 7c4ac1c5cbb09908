#include "sympow/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace sympow {

namespace {

void require_same_ambient(int a, int b) {
    if (a != b)
        fail(Errc::MixedAmbient, "ideals/monomials live over different variable sets (" +
                                     std::to_string(a) + " vs " + std::to_string(b) + ")");
}

int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > std::numeric_limits<int>::max())
        fail(Errc::Overflow, "monomial exponent overflow");
    return static_cast<int>(s);
}

} // namespace

Monomial Monomial::variable(int nvars, int v) {
    Monomial m = one(nvars);
    m.exponents.at(v) = 1;
    return m;
}

Monomial Monomial::from_support(int nvars, const VertexSet& support) {
    Monomial m = one(nvars);
    for (VertexId v : support) m.exponents.at(v) = 1;
    return m;
}

long long Monomial::degree() const {
    long long d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (int v = 0; v < nvars(); ++v)
        if (exponents[v] > 0) s.push_back(v);
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_ambient(nvars(), other.nvars());
    for (int v = 0; v < nvars(); ++v)
        if (exponents[v] > other.exponents[v]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_ambient(nvars(), other.nvars());
    Monomial out = *this;
    for (int v = 0; v < nvars(); ++v)
        out.exponents[v] = checked_add(out.exponents[v], other.exponents[v]);
    return out;
}

Monomial Monomial::quotient_by(const Monomial& other) const {
    require_same_ambient(nvars(), other.nvars());
    Monomial out = *this;
    for (int v = 0; v < nvars(); ++v)
        out.exponents[v] = std::max(out.exponents[v] - other.exponents[v], 0);
    return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < nvars(); ++v) {
        if (exponents[v] == 0) continue;
        if (!first) os << "*";
        os << names.at(v);
        if (exponents[v] > 1) os << "^" << exponents[v];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ambient(a.nvars(), b.nvars());
    Monomial out = a;
    for (int v = 0; v < a.nvars(); ++v)
        out.exponents[v] = std::max(out.exponents[v], b.exponents[v]);
    return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents > b.exponents;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
    for (const Monomial& g : gens) require_same_ambient(nvars, g.nvars());
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    MonomialIdeal ideal(nvars);
    // Divisors have smaller-or-equal degree, and equal-degree divisibility is
    // equality, so scanning in canonical order sees a divisor before anything
    // it divides.
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : ideal.gens_)
            if (kept.divides(g)) { redundant = true; break; }
        if (!redundant) ideal.gens_.push_back(g);
    }
    return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    require_same_ambient(nvars_, m.nvars());
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::vector<std::string>
MonomialIdeal::generator_strings(const std::vector<std::string>& names) const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const Monomial& g : gens_) out.push_back(g.to_string(names));
    return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a.nvars(), b.nvars());
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a.nvars(), b.nvars());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators()) gens.push_back(g.times(h));
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int n) {
    if (n < 1) fail(Errc::BadParams, "ideal power wants n >= 1");
    MonomialIdeal result = a;
    for (int i = 1; i < n; ++i) result = product(result, a);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a.nvars(), b.nvars());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    require_same_ambient(a.nvars(), m.nvars());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) gens.push_back(g.quotient_by(m));
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

long long alpha(const MonomialIdeal& a) {
    if (a.is_zero()) fail(Errc::ZeroIdeal, "alpha of the zero ideal is undefined");
    return a.generators().front().degree(); // canonical order puts least degree first
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a.nvars(), b.nvars());
    return a.generators() == b.generators();
}

} // namespace sympow
