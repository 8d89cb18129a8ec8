#include <doctest.h>

#include <set>

#include "strand/betti.hpp"
#include "strand/groebner.hpp"
#include "strand/hilbert.hpp"
#include "strand/monideal.hpp"
#include "test_util.hpp"

using namespace strand;

namespace {

MonomialIdeal paper_gin_2_4(RingContext ring) {
    return MonomialIdeal(
        ring, {Monomial({4, 0, 0, 0, 0, 0}), Monomial({3, 2, 0, 0, 0, 0}),
               Monomial({2, 3, 0, 0, 0, 0}), Monomial({1, 5, 0, 0, 0, 0}),
               Monomial({0, 6, 0, 0, 0, 0}), Monomial({1, 4, 2, 0, 0, 0}),
               Monomial({0, 5, 2, 0, 0, 0}), Monomial({3, 1, 4, 0, 0, 0}),
               Monomial({2, 2, 5, 0, 0, 0})});
}

}  // namespace

TEST_CASE("minimal generators") {
    RingContext ring = make_ring(32003, 2);
    MonomialIdeal a = minimal_generators(
        ring, {Monomial({1, 0}), Monomial({2, 0})});
    CHECK(a.num_gens() == 1);
    CHECK(a.min_gens()[0] == Monomial({1, 0}));
    RingContext r3 = make_ring(32003, 3);
    MonomialIdeal b = minimal_generators(
        r3, {Monomial({1, 1, 0}), Monomial({0, 1, 1})});
    CHECK(b.num_gens() == 2);
    MonomialIdeal gin24 = paper_gin_2_4(make_ring(32003, 6));
    CHECK(gin24.num_gens() == 9);
}

TEST_CASE("borel-fixedness test") {
    RingContext r3 = make_ring(32003, 3);
    CHECK(is_borel_fixed(MonomialIdeal(
        r3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0})})));
    CHECK_FALSE(is_borel_fixed(MonomialIdeal(r3, {Monomial({0, 2, 0})})));
    CHECK(is_borel_fixed(paper_gin_2_4(make_ring(32003, 6))));
    CHECK(is_borel_fixed(MonomialIdeal(r3, {})));  // zero ideal, vacuously
}

TEST_CASE("stable-ideal betti numbers from the generator statistic") {
    SUBCASE("principal power") {
        RingContext r2 = make_ring(32003, 2);
        for (int k = 1; k <= 4; ++k) {
            BettiTable t = ek_betti(MonomialIdeal(r2, {Monomial({k, 0})}));
            CHECK(t.at(0, 0) == 1);
            CHECK(t.at(1, k - 1) == 1);
            CHECK(t.proj_dim() == 1);
        }
    }
    SUBCASE("(x0,x1,x2)^2") {
        RingContext r3 = make_ring(32003, 3);
        BettiTable t = ek_betti(power_ideal(r3, 3, 1));
        CHECK(t.at(1, 1) == 6);
        CHECK(t.at(2, 1) == 8);
        CHECK(t.at(3, 1) == 3);
    }
    SUBCASE("projective dimension of the worked gin is 3") {
        BettiTable t = ek_betti(paper_gin_2_4(make_ring(32003, 6)));
        CHECK(t.proj_dim() == 3);  // depth 3 by Auslander-Buchsbaum in P^5
    }
    SUBCASE("non-Borel input is rejected") {
        RingContext r3 = make_ring(32003, 3);
        CHECK_THROWS_AS(ek_betti(MonomialIdeal(r3, {Monomial({0, 2, 0})})),
                        std::invalid_argument);
    }
}

TEST_CASE("power ideal and its closed-form betti numbers") {
    SUBCASE("e=3, l=1 matches the direct sum") {
        CHECK(power_ideal_betti(3, 1, 1) == 6);
        CHECK(power_ideal_betti(3, 1, 2) == 8);
        CHECK(power_ideal_betti(3, 1, 3) == 3);
    }
    SUBCASE("e=1 is a principal power") {
        RingContext r2 = make_ring(32003, 2);
        for (int ell = 0; ell <= 3; ++ell) {
            MonomialIdeal j0 = power_ideal(r2, 1, ell);
            CHECK(j0.num_gens() == 1);
            BettiTable t = ek_betti(j0);
            CHECK(t.at(1, ell) == 1);
            CHECK(power_ideal_betti(1, ell, 1) == 1);
        }
    }
    SUBCASE("the (e,l)=(4,2) row is the secant-scroll table 20,45,36,10") {
        CHECK(power_ideal_betti(4, 2, 1) == 20);
        CHECK(power_ideal_betti(4, 2, 2) == 45);
        CHECK(power_ideal_betti(4, 2, 3) == 36);
        CHECK(power_ideal_betti(4, 2, 4) == 10);
    }
    SUBCASE("closed form equals the generator-statistic sum, e <= 6, l <= 4") {
        for (int e = 1; e <= 6; ++e) {
            RingContext ring = make_ring(32003, e + 1);
            for (int ell = 1; ell <= 4; ++ell) {
                BettiTable t = ek_betti(power_ideal(ring, e, ell));
                for (int i = 1; i <= e; ++i)
                    CHECK(t.at(i, ell) == power_ideal_betti(e, ell, i));
                for (int i = e + 1; i <= ring.nvars; ++i)
                    CHECK(t.at(i, ell) == 0);
            }
        }
    }
}

TEST_CASE("the binomial identity behind the equality case") {
    for (int e = 1; e <= 8; ++e) {
        for (int ell = 1; ell <= 6; ++ell) {
            for (int i = 1; i <= e; ++i) {
                std::int64_t rhs = 0;
                for (int j = i - 1; j <= e - 1; ++j)
                    rhs += binomial(j, i - 1) * binomial(j + ell, ell);
                CHECK(binomial(i + ell - 1, ell) * binomial(e + ell, i + ell) ==
                      rhs);
            }
        }
    }
}

TEST_CASE("borel point sections") {
    SUBCASE("the t=5 monomial scheme sections to (x0^2, x0*x1^2, x1^5)") {
        RingContext r4 = make_ring(32003, 4);
        MonomialIdeal m(r4, {Monomial({3, 0, 0, 0}), Monomial({2, 1, 0, 0}),
                             Monomial({1, 2, 0, 0}), Monomial({0, 5, 0, 0}),
                             Monomial({2, 0, 1, 0})});
        REQUIRE(is_borel_fixed(m));
        MonomialIdeal sec = borel_point_section(m, 2);
        CHECK(sec.ring().nvars == 3);
        MonomialIdeal expect(sec.ring(), {Monomial({2, 0, 0}),
                                          Monomial({1, 2, 0}),
                                          Monomial({0, 5, 0})});
        CHECK(sec == expect);
    }
    SUBCASE("a power ideal sections to itself in e+1 variables") {
        RingContext r5 = make_ring(32003, 5);
        MonomialIdeal j0 = power_ideal(r5, 2, 2);
        MonomialIdeal sec = borel_point_section(j0, 2);
        CHECK(sec == power_ideal(make_ring(32003, 3), 2, 2));
    }
    SUBCASE("(x0) in three variables, e=1") {
        RingContext r3 = make_ring(32003, 3);
        MonomialIdeal sec =
            borel_point_section(MonomialIdeal(r3, {Monomial({1, 0, 0})}), 1);
        CHECK(sec == MonomialIdeal(make_ring(32003, 2), {Monomial({1, 0})}));
    }
    SUBCASE("non-Borel input is rejected") {
        RingContext r3 = make_ring(32003, 3);
        CHECK_THROWS_AS(
            borel_point_section(MonomialIdeal(r3, {Monomial({0, 2, 0})}), 1),
            std::invalid_argument);
    }
}

TEST_CASE("distraction") {
    SUBCASE("(x0^2) becomes a product of two linear forms") {
        RingContext r3 = make_ring(32003, 3);
        Rng rng(17);
        Ideal d = distraction(MonomialIdeal(r3, {Monomial({2, 0, 0})}), rng);
        REQUIRE(d.gens.size() == 1);
        CHECK(d.gens[0].degree() == 2);
        CHECK(d.gens[0].is_homogeneous());
        CHECK(d.gens[0].num_terms() > 1);  // generic, not a monomial
    }
    SUBCASE("the t=5 example keeps the generator degree pattern 3,3,3,5,3") {
        RingContext r4 = make_ring(32003, 4);
        MonomialIdeal m(r4, {Monomial({3, 0, 0, 0}), Monomial({2, 1, 0, 0}),
                             Monomial({1, 2, 0, 0}), Monomial({0, 5, 0, 0}),
                             Monomial({2, 0, 1, 0})});
        Rng rng(29);
        Ideal d = distraction(m, rng);
        std::multiset<int> degrees;
        for (auto& g : d.gens) degrees.insert(g.degree());
        CHECK(degrees == std::multiset<int>{3, 3, 3, 3, 5});
    }
    SUBCASE("hilbert function is preserved") {
        Rng rng(31);
        RingContext r3 = make_ring(32003, 3);
        for (int it = 0; it < 5; ++it) {
            MonomialIdeal m = testing::random_borel_ideal(r3, 3, 4, rng);
            if (m.is_unit()) continue;
            Ideal d = distraction(m, rng);
            GroebnerBasis gb = buchberger(d, MonomialOrder::DegRevLex);
            for (int deg = 0; deg <= 6; ++deg)
                CHECK(hilbert_function(m, deg) == hilbert_function(gb, deg));
        }
    }
}

TEST_CASE("binomial coefficients, exact and guarded") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) > 0);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}
