#include <doctest.h>

#include "strand/constructions.hpp"
#include "strand/gin.hpp"
#include "strand/hilbert.hpp"
#include "strand/io.hpp"
#include "test_util.hpp"

using namespace strand;

TEST_CASE("gin of a Borel-fixed monomial ideal is itself") {
    RingContext r4 = make_ring(32003, 4);
    for (auto j0 : {power_ideal(r4, 2, 1), power_ideal(r4, 3, 2)}) {
        GinResult gin = generic_initial_ideal(j0.to_ideal(), 2, 19);
        CHECK(gin.stable);
        CHECK(gin.gin == j0);
    }
    MonomialIdeal m(r4, {Monomial({3, 0, 0, 0}), Monomial({2, 1, 0, 0}),
                         Monomial({1, 2, 0, 0}), Monomial({0, 5, 0, 0}),
                         Monomial({2, 0, 1, 0})});
    GinResult gin = generic_initial_ideal(m.to_ideal(), 2, 19);
    CHECK(gin.stable);
    CHECK(gin.gin == m);
}

TEST_CASE("gin of the twisted cubic is (x0, x1)^2") {
    Ideal tc = rational_normal_curve(32003, 3);
    MonomialIdeal expect = power_ideal(make_ring(32003, 4), 2, 1);
    GroebnerBasis gb = buchberger(tc, MonomialOrder::DegRevLex);
    // stability over five independent seeds
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        GinResult gin = generic_initial_ideal(tc, 2, seed);
        REQUIRE(gin.stable);
        CHECK(gin.gin == expect);
        CHECK(gin.agreements == gin.trials);
        CHECK(gin.seed == seed);
        CHECK(is_borel_fixed(gin.gin));
        // hilbert-function equality HF(R/I) = HF(R/gin)
        for (int d = 0; d <= 4; ++d)
            CHECK(hilbert_function(gin.gin, d) == hilbert_function(gb, d));
    }
}

TEST_CASE("regularity from the gin") {
    RingContext r4 = make_ring(32003, 4);
    SUBCASE("power ideals have regularity l+1") {
        for (int e = 1; e <= 3; ++e) {
            for (int ell = 0; ell <= 3; ++ell) {
                GinResult gin =
                    generic_initial_ideal(power_ideal(r4, e, ell).to_ideal(), 2, 3);
                CHECK(regularity_from_gin(gin) == ell + 1);
            }
        }
    }
    SUBCASE("twisted cubic has regularity 2") {
        GinResult gin =
            generic_initial_ideal(rational_normal_curve(32003, 3), 2, 3);
        CHECK(regularity_from_gin(gin) == 2);
    }
    SUBCASE("unstable results are rejected") {
        GinResult fake;
        fake.stable = false;
        fake.trials = 2;
        CHECK_THROWS_AS(regularity_from_gin(fake), std::invalid_argument);
    }
}

TEST_CASE("gin requires homogeneous input and at least two trials") {
    RingContext r2 = make_ring(32003, 2);
    Ideal bad{r2, {parse_polynomial("x0 + 1", r2)}};
    CHECK_THROWS_AS(generic_initial_ideal(bad, 2, 1), std::invalid_argument);
    Ideal ok{r2, {parse_polynomial("x0", r2)}};
    CHECK_THROWS_AS(generic_initial_ideal(ok, 1, 1), std::invalid_argument);
}

TEST_CASE("hilbert function is invariant under random coordinate change") {
    Rng rng(57);
    RingContext r3 = make_ring(32003, 3);
    for (int it = 0; it < 8; ++it) {
        Ideal ideal = testing::random_homogeneous_ideal(r3, 2, 3, rng);
        GroebnerBasis gb = buchberger(ideal, MonomialOrder::DegRevLex);
        FpMatrix m = fp_random_invertible(r3.prime, 3, rng);
        std::vector<Polynomial> moved;
        for (auto& g : ideal.gens)
            moved.push_back(apply_linear_change(g, to_rows(m)));
        GroebnerBasis gb2 =
            buchberger(Ideal{r3, moved}, MonomialOrder::DegRevLex);
        for (int d = 0; d <= 5; ++d)
            CHECK(hilbert_function(gb, d) == hilbert_function(gb2, d));
    }
}
