#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "sympow/monomial.hpp"
#include "sympow/symbolic.hpp"
#include "test_util.hpp"

using namespace sympow;
using namespace sympow::testutil;

namespace {

// Two-variable helpers over names {x, y} (and a third z where needed).
Hypergraph xy() { return hg({{"x", "y"}}); }
Hypergraph xyz() { return hg({{"x", "y"}, {"y", "z"}}); }

MonomialIdeal ideal(const Hypergraph& h, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(h.vertex_count(), std::move(gens));
}

// Every monomial with exponents <= cap over n variables.
std::vector<Monomial> exponent_sweep(int nvars, int cap) {
    std::vector<Monomial> out;
    Monomial m = Monomial::one(nvars);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nvars) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= cap; ++e) {
            m.exponents[v] = e;
            self(self, v + 1);
        }
        m.exponents[v] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<MonomialIdeal> random_ideals(int nvars, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> gens_dist(1, 4), exp_dist(0, 3);
    std::vector<MonomialIdeal> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Monomial> gens;
        int k = gens_dist(rng);
        for (int g = 0; g < k; ++g) {
            Monomial m = Monomial::one(nvars);
            for (int v = 0; v < nvars; ++v) m.exponents[v] = exp_dist(rng);
            if (m.is_one()) m.exponents[0] = 1; // keep it a proper ideal
            gens.push_back(m);
        }
        out.push_back(MonomialIdeal::from_generators(nvars, std::move(gens)));
    }
    return out;
}

} // namespace

TEST_SUITE_BEGIN("monomial");

TEST_CASE("minimalize removes divisible generators and canonicalizes") {
    Hypergraph h = xy();
    auto x = mono(h, {{"x", 1}});
    auto y = mono(h, {{"y", 1}});
    auto xy_ = mono(h, {{"x", 1}, {"y", 1}});
    auto x2 = mono(h, {{"x", 2}});
    auto y2 = mono(h, {{"y", 2}});

    CHECK(ideal(h, {x, xy_}).generators() == std::vector<Monomial>{x});
    CHECK(ideal(h, {x2, xy_, y2, x}).generators() == std::vector<Monomial>{x, y2});

    Hypergraph g = xyz();
    auto xy3 = sqfree(g, {"x", "y"});
    auto yz3 = sqfree(g, {"y", "z"});
    CHECK(ideal(g, {xy3, yz3}).generators() == std::vector<Monomial>{xy3, yz3});
}

TEST_CASE("minimalize is idempotent and input-order independent") {
    std::mt19937 rng(7);
    for (const MonomialIdeal& I : random_ideals(3, 40, 11)) {
        std::vector<Monomial> gens = I.generators();
        auto again = MonomialIdeal::from_generators(3, gens);
        CHECK(equals(I, again));
        std::shuffle(gens.begin(), gens.end(), rng);
        gens.insert(gens.end(), I.generators().begin(), I.generators().end());
        CHECK(equals(I, MonomialIdeal::from_generators(3, gens)));
    }
}

TEST_CASE("sum") {
    Hypergraph h = xy();
    auto x = mono(h, {{"x", 1}});
    auto y = mono(h, {{"y", 1}});
    auto xy_ = mono(h, {{"x", 1}, {"y", 1}});
    CHECK(sum(ideal(h, {x}), ideal(h, {y})).generators() ==
          std::vector<Monomial>{x, y});
    CHECK(sum(ideal(h, {x}), ideal(h, {xy_})).generators() ==
          std::vector<Monomial>{x});
}

TEST_CASE("product and power") {
    Hypergraph h = xy();
    auto x = mono(h, {{"x", 1}});
    auto y = mono(h, {{"y", 1}});
    auto I = ideal(h, {x, y});
    CHECK(power(I, 2).generators() ==
          std::vector<Monomial>{mono(h, {{"x", 2}}), mono(h, {{"x", 1}, {"y", 1}}),
                                mono(h, {{"y", 2}})});

    Hypergraph g = xyz();
    CHECK(product(ideal(g, {sqfree(g, {"x", "y"})}), ideal(g, {sqfree(g, {"z"})}))
              .generators() == std::vector<Monomial>{sqfree(g, {"x", "y", "z"})});

    // I(B)^2 has the six pairwise products as minimal generators
    Hypergraph b = bad_hypergraph();
    auto sq = power(edge_ideal(b), 2);
    CHECK(sq.generators().size() == 6);
    CHECK(sq.contains(mono(b, {{"x1", 1}, {"x2", 1}, {"x3", 2}, {"x4", 1}, {"x5", 1}})));

    CHECK_THROWS_AS(power(I, 0), Error);
}

TEST_CASE("intersect") {
    Hypergraph h = xy();
    auto x = mono(h, {{"x", 1}});
    auto y = mono(h, {{"y", 1}});
    CHECK(intersect(ideal(h, {x}), ideal(h, {y})).generators() ==
          std::vector<Monomial>{mono(h, {{"x", 1}, {"y", 1}})});
    CHECK(intersect(ideal(h, {mono(h, {{"x", 2}})}), ideal(h, {x})).generators() ==
          std::vector<Monomial>{mono(h, {{"x", 2}})});

    Hypergraph g = xyz();
    auto I = ideal(g, {sqfree(g, {"x"}), sqfree(g, {"y"})});
    auto J = ideal(g, {sqfree(g, {"y"}), sqfree(g, {"z"})});
    CHECK(intersect(I, J).generators() ==
          std::vector<Monomial>{sqfree(g, {"y"}), sqfree(g, {"x", "z"})});
}

TEST_CASE("intersect membership matches joint membership (sweep)") {
    // brute-force equivalence with AND of memberships: exponents <= 3 over
    // 3 variables for many random pairs, then over the full 6 variables
    auto sweep = exponent_sweep(3, 3);
    auto ideals = random_ideals(3, 12, 23);
    for (std::size_t i = 0; i + 1 < ideals.size(); i += 2) {
        const auto& I = ideals[i];
        const auto& J = ideals[i + 1];
        auto meet = intersect(I, J);
        for (const Monomial& m : sweep)
            CHECK(meet.contains(m) == (I.contains(m) && J.contains(m)));
    }

    auto wide_sweep = exponent_sweep(6, 3);
    auto wide = random_ideals(6, 4, 29);
    for (std::size_t i = 0; i + 1 < wide.size(); i += 2) {
        auto meet = intersect(wide[i], wide[i + 1]);
        for (const Monomial& m : wide_sweep)
            CHECK(meet.contains(m) == (wide[i].contains(m) && wide[i + 1].contains(m)));
    }
}

TEST_CASE("colon") {
    Hypergraph g = xyz();
    auto I = ideal(g, {sqfree(g, {"x", "y"}), sqfree(g, {"y", "z"})});
    CHECK(colon(I, sqfree(g, {"y"})).generators() ==
          std::vector<Monomial>{sqfree(g, {"x"}), sqfree(g, {"z"})});
    auto J = ideal(g, {sqfree(g, {"x"})});
    CHECK(equals(colon(J, sqfree(g, {"y"})), J));

    Hypergraph b = bad_hypergraph();
    auto colon_b = colon(edge_ideal(b), sqfree(b, {"x3"}));
    CHECK(colon_b.generators() ==
          std::vector<Monomial>{sqfree(b, {"x1", "x2"}), sqfree(b, {"x4", "x5"}),
                                sqfree(b, {"x2", "x5", "x6"})});
}

TEST_CASE("colon adjunction: g in (I:m) iff m*g in I (sweep)") {
    auto sweep = exponent_sweep(3, 2);
    for (const MonomialIdeal& I : random_ideals(3, 8, 37)) {
        for (const Monomial& m : sweep) {
            auto quotient = colon(I, m);
            for (const Monomial& g : sweep)
                CHECK(quotient.contains(g) == I.contains(m.times(g)));
        }
    }
}

TEST_CASE("contains") {
    Hypergraph h = xy();
    auto I = ideal(h, {mono(h, {{"x", 1}}), mono(h, {{"y", 1}})});
    CHECK(I.contains(mono(h, {{"x", 1}, {"y", 2}})));
    CHECK_FALSE(ideal(h, {mono(h, {{"x", 2}})}).contains(mono(h, {{"x", 1}})));

    Hypergraph b = bad_hypergraph();
    CHECK_FALSE(power(edge_ideal(b), 2)
                    .contains(sqfree(b, {"x1", "x2", "x3", "x4", "x5", "x6"})));
}

TEST_CASE("alpha") {
    Hypergraph g = xyz();
    CHECK(alpha(ideal(g, {sqfree(g, {"x", "y"}), mono(g, {{"z", 3}})})) == 2);
    CHECK(alpha(edge_ideal(bad_hypergraph())) == 3);
    CHECK(alpha(symbolic_power(bad_hypergraph(), 2)) == 6);
    CHECK_THROWS_AS(alpha(MonomialIdeal(2)), Error);
}

TEST_CASE("equals") {
    Hypergraph h = xy();
    auto x = mono(h, {{"x", 1}});
    CHECK(equals(ideal(h, {x, mono(h, {{"x", 1}, {"y", 1}})}), ideal(h, {x})));
    CHECK_FALSE(equals(ideal(h, {x}), ideal(h, {mono(h, {{"x", 2}})})));
    CHECK_FALSE(equals(symbolic_power(bad_hypergraph(), 2),
                       power(edge_ideal(bad_hypergraph()), 2)));
}

TEST_CASE("mixed ambients are rejected") {
    MonomialIdeal two(2), three(3);
    CHECK_THROWS_AS(sum(two, three), Error);
    CHECK_THROWS_AS(two.contains(Monomial::one(3)), Error);
    try {
        intersect(two, three);
        FAIL("expected MixedAmbient");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MixedAmbient);
    }
}

TEST_CASE("zero and unit ideals") {
    MonomialIdeal zero(2);
    CHECK(zero.is_zero());
    auto unit = MonomialIdeal::from_generators(2, {Monomial::one(2)});
    CHECK(unit.is_unit());
    CHECK(unit.contains(Monomial::one(2)));
    CHECK_FALSE(zero.contains(Monomial::variable(2, 0)));

    auto I = MonomialIdeal::from_generators(2, {Monomial::variable(2, 0)});
    CHECK(equals(intersect(I, zero), zero));
    CHECK(equals(product(I, zero), zero));
    CHECK(equals(sum(I, zero), I));
    CHECK(equals(intersect(I, unit), I));
    CHECK(equals(product(I, unit), I));
    CHECK(equals(colon(zero, Monomial::variable(2, 1)), zero));
    // a generator dividing m turns the colon into the unit ideal
    CHECK(colon(I, Monomial::variable(2, 0)).is_unit());
    // anything above the unit ideal collapses to it
    CHECK(MonomialIdeal::from_generators(2, {Monomial::one(2), Monomial::variable(2, 0)})
              .is_unit());
    CHECK(alpha(unit) == 0);
}

TEST_CASE("power is associative under splitting (property)") {
    for (const MonomialIdeal& I : random_ideals(3, 10, 51)) {
        CHECK(equals(power(I, 3), product(power(I, 1), power(I, 2))));
        CHECK(equals(power(I, 4), product(power(I, 2), power(I, 2))));
    }
}

TEST_CASE("alpha scales linearly on equigenerated ideals") {
    // generators all of one degree: alpha(I^n) = n * alpha(I)
    Hypergraph b = bad_hypergraph();
    auto I = edge_ideal(b);
    for (int n = 1; n <= 4; ++n) CHECK(alpha(power(I, n)) == 3 * n);

    Hypergraph t = triangle();
    auto J = edge_ideal(t);
    for (int n = 1; n <= 4; ++n) CHECK(alpha(power(J, n)) == 2 * n);
}

TEST_CASE("exponent overflow raises instead of wrapping") {
    Monomial big(std::vector<int>{std::numeric_limits<int>::max(), 0});
    Monomial one_more(std::vector<int>{1, 0});
    CHECK_THROWS_AS(big.times(one_more), Error);
    try {
        big.times(big);
        FAIL("expected Overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Overflow);
    }
}

TEST_CASE("monomial serialization") {
    Hypergraph b = bad_hypergraph();
    CHECK(mono(b, {{"x1", 2}, {"x3", 1}}).to_string(b.vertex_names) == "x1^2*x3");
    CHECK(Monomial::one(6).to_string(b.vertex_names) == "1");
    CHECK(sqfree(b, {"x2", "x5", "x6"}).to_string(b.vertex_names) == "x2*x5*x6");
}

TEST_SUITE_END();
