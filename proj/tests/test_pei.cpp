#include <doctest.h>

#include "strand/constructions.hpp"
#include "strand/io.hpp"
#include "strand/pei.hpp"
#include "test_util.hpp"

using namespace strand;

namespace {
Polynomial pp(const std::string& s, RingContext ring) {
    return parse_polynomial(s, ring);
}
}

TEST_CASE("filtration basics") {
    SUBCASE("K_0 of a single quadric with x0-power one") {
        RingContext r3 = make_ring(32003, 3);
        Ideal ideal{r3, {pp("x0*x2 - x1^2", r3)}};
        PEIFiltration f = partial_elimination_ideals(ideal, 1);
        REQUIRE(f.levels() == 2);
        // K_0 = 0
        for (auto& g : f.k(0).gens) CHECK(g.is_zero());
        // K_1 = (x2), written as the leading variable of the base ring
        REQUIRE(f.k(1).gens.size() == 1);
        CHECK(f.k(1).gens[0] == pp("x1", f.base_ring));
    }
    SUBCASE("K_0 equals the elimination ideal") {
        Rng rng(3);
        for (int it = 0; it < 4; ++it) {
            Ideal staged = recoordinate_center(
                rational_normal_curve(32003, 4),
                {rng.field_element(32003), rng.field_element(32003),
                 rng.field_element(32003), rng.field_element(32003),
                 rng.field_element(32003)},
                rng);
            PEIFiltration f = partial_elimination_ideals(staged, 0);
            Ideal elim = eliminate(staged, 1);
            CHECK(ideal_equal(f.k(0), elim));
        }
    }
    SUBCASE("the filtration ascends") {
        Rng rng(5);
        Ideal staged = recoordinate_center(
            rational_normal_curve(32003, 3),
            {rng.field_element(32003), rng.field_element(32003),
             rng.field_element(32003), rng.field_element(32003)},
            rng);
        PEIFiltration f = partial_elimination_ideals(staged, 3);
        for (int i = 0; i + 1 < f.levels(); ++i) {
            GroebnerBasis upper =
                buchberger_any(f.k(i + 1), f.base_ring.order);
            for (auto& g : f.k(i).gens)
                CHECK(ideal_contains(upper, g.in_ring(upper.ring)));
        }
    }
    SUBCASE("the filtration stays proper when the center lies on the scheme") {
        // no ideal element is monic in x0 then, so every K_i is proper
        Rng rng(5);
        Ideal rnc3 = rational_normal_curve(32003, 3);
        Ideal staged = recoordinate_center(rnc3, rnc_point(32003, 3, rng), rng);
        PEIFiltration f = partial_elimination_ideals(staged, 3);
        for (int i = 0; i < f.levels(); ++i) {
            GroebnerBasis gb = buchberger_any(f.k(i), f.base_ring.order);
            CHECK_FALSE(ideal_contains(gb, Polynomial::constant(gb.ring, 1)));
        }
    }
    SUBCASE("an off-scheme center reaches the unit ideal at the fiber bound") {
        // the projection is finite, so x0 satisfies a monic relation and
        // some K_i contains 1; for the twisted cubic this happens at i = 2
        Rng rng(5);
        std::vector<std::uint32_t> q = {rng.field_element(32003),
                                        rng.field_element(32003),
                                        rng.field_element(32003),
                                        rng.field_element(32003)};
        Ideal staged =
            recoordinate_center(rational_normal_curve(32003, 3), q, rng);
        PEIFiltration f = partial_elimination_ideals(staged, 2);
        GroebnerBasis k1 = buchberger_any(f.k(1), f.base_ring.order);
        CHECK_FALSE(ideal_contains(k1, Polynomial::constant(k1.ring, 1)));
        GroebnerBasis k2 = buchberger_any(f.k(2), f.base_ring.order);
        CHECK(ideal_contains(k2, Polynomial::constant(k2.ring, 1)));
    }
}

TEST_CASE("exact-sequence dimension count") {
    // dim { f in I_t : x0-power <= i } - dim K_0(I)_t equals
    // sum_{1 <= j <= i} dim (K_j)_{t-j}, checked degreewise
    Rng rng(11);
    Ideal staged = recoordinate_center(
        rational_normal_curve(32003, 3),
        {rng.field_element(32003), rng.field_element(32003),
         rng.field_element(32003), rng.field_element(32003)},
        rng);
    Ideal lexed{staged.ring.with_order(MonomialOrder::Lex), {}};
    for (auto& g : staged.gens)
        lexed.gens.push_back(g.in_ring(lexed.ring));
    PEIFiltration f = partial_elimination_ideals(staged, 2);
    for (int t = 2; t <= 4; ++t) {
        const DegreeBasis& basis =
            degree_basis(lexed.ring.nvars, t, lexed.ring.order);
        for (int i = 0; i <= 2; ++i) {
            std::vector<bool> allowed(basis.dim());
            for (int r = 0; r < basis.dim(); ++r)
                allowed[r] = basis.monomials[r].exponent(0) <= i;
            std::int64_t tilde_i =
                testing::subspace_intersection_dim(lexed, t, allowed);
            std::vector<bool> zero_only(basis.dim());
            for (int r = 0; r < basis.dim(); ++r)
                zero_only[r] = basis.monomials[r].exponent(0) == 0;
            std::int64_t tilde_0 =
                testing::subspace_intersection_dim(lexed, t, zero_only);
            std::int64_t rhs = 0;
            for (int j = 1; j <= i; ++j) {
                if (t - j < 0) continue;
                // dim (K_j)_{t-j} as a subspace of S1 in degree t-j
                rhs += binomial(f.base_ring.nvars - 1 + (t - j), t - j) -
                       testing::hf_by_rank(f.k(j), t - j);
            }
            CHECK(tilde_i - tilde_0 == rhs);
        }
    }
}

TEST_CASE("secant locus linearity") {
    SUBCASE("projection of the twisted cubic from a general point") {
        Rng rng(31);
        Ideal rnc3 = rational_normal_curve(32003, 3);
        std::vector<std::uint32_t> q(4);
        for (auto& v : q) v = rng.field_element(32003);
        Ideal staged = recoordinate_center(rnc3, q, rng);
        SecantLocusReport rep = secant_locus_check(staged, 2);
        REQUIRE(rep.applicable);
        CHECK(rep.conclusion_ok());
        // in P^3 a general center sits on a secant: the node is cut out by
        // two linear forms
        CHECK_FALSE(rep.k_zero);
        CHECK(rep.linear);
        CHECK(rep.linear_form_count == 2);
    }
    SUBCASE("projection of the degree-5 rational normal curve") {
        Rng rng(37);
        Ideal rnc5 = rational_normal_curve(32003, 5);
        std::vector<std::uint32_t> q(6);
        for (auto& v : q) v = rng.field_element(32003);
        Ideal staged = recoordinate_center(rnc5, q, rng);
        SecantLocusReport rep = secant_locus_check(staged, 2);
        REQUIRE(rep.applicable);
        CHECK(rep.conclusion_ok());
    }
    SUBCASE("center on the scheme is reported, not computed") {
        Ideal rnc3 = rational_normal_curve(32003, 3);
        // (1:0:0:0) lies on the curve: every generator vanishes there
        SecantLocusReport rep = secant_locus_check(rnc3, 2);
        CHECK_FALSE(rep.applicable);
        CHECK(rep.skipped_reason.find("center") != std::string::npos);
    }
}

TEST_CASE("double point of the projected rational normal quartic") {
    // project from a point on a secant line: the unique node has fiber
    // length two
    std::uint32_t p = 32003;
    Gf gf(p);
    Rng rng(41);
    Ideal rnc4 = rational_normal_curve(p, 4);
    auto p1 = rnc_point(p, 4, rng);
    auto p2 = rnc_point(p, 4, rng);
    std::uint32_t lambda = rng.nonzero_field_element(p);
    std::vector<std::uint32_t> q(5);
    for (int i = 0; i < 5; ++i) q[i] = gf.add(p1[i], gf.mul(lambda, p2[i]));
    Ideal staged = recoordinate_center(rnc4, q, rng);
    SecantLocusReport rep = secant_locus_check(staged, 2);
    REQUIRE(rep.applicable);
    CHECK(rep.linear);
    CHECK(rep.linear_form_count == 3);  // a point of P^3
    // fiber over the node: the line through q and the two secant points
    std::vector<std::vector<std::uint32_t>> span = {q, p1};
    FpMatrix pts(p, 2, 5);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 5; ++c) pts.at(r, c) = span[r][c];
    auto null_forms = fp_nullspace(std::move(pts));
    std::vector<Polynomial> forms;
    for (auto& v : null_forms) {
        std::vector<Term> ts;
        for (int c = 0; c < 5; ++c)
            if (v[c] != 0) ts.push_back(Term{Monomial::variable(5, c), v[c]});
        forms.push_back(Polynomial(rnc4.ring, std::move(ts)));
    }
    std::int64_t len = finite_intersection_length(rnc4, forms, rng);
    CHECK(len == 2);
}

TEST_CASE("multisecant sampler") {
    std::uint32_t p = 32003;
    SUBCASE("secant lines of the twisted cubic attain the bound 2") {
        Ideal rnc3 = rational_normal_curve(p, 3);
        PointSampler sampler = rnc_sampler(p, 3);
        MultisecantStats st =
            multisecant_length_sampler(rnc3, 1, 2, 32, 7, &sampler);
        CHECK(st.completed == 32);
        CHECK(st.bound == 2);
        CHECK(st.bound_respected);
        CHECK(st.max_length == 2);
        bool saw_small = false;
        for (auto l : st.lengths) saw_small = saw_small || (l <= 1);
        CHECK(saw_small);  // fully random lines mostly miss the curve
    }
    SUBCASE("trisecant planes of the rational normal quartic reach C(3,2)=3") {
        Ideal rnc4 = rational_normal_curve(p, 4);
        PointSampler sampler = rnc_sampler(p, 4);
        MultisecantStats st =
            multisecant_length_sampler(rnc4, 2, 2, 32, 9, &sampler);
        CHECK(st.bound == 3);
        CHECK(st.bound_respected);
        CHECK(st.max_length == 3);
    }
    SUBCASE("full-codimension planes cut the whole degree") {
        RingContext r4 = make_ring(p, 4);
        Rng rng(13);
        Ideal d = distraction(power_ideal(r4, 2, 1), rng);
        MultisecantStats st = multisecant_length_sampler(d, 2, 2, 16, 11);
        CHECK(st.bound == 3);
        CHECK(st.bound_respected);
        CHECK(st.max_length == 3);  // a random 2-plane meets the cubic curve
    }
    SUBCASE("parameter validation") {
        Ideal rnc3 = rational_normal_curve(p, 3);
        CHECK_THROWS_AS(multisecant_length_sampler(rnc3, 0, 2, 4, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(multisecant_length_sampler(rnc3, 3, 2, 4, 1),
                        std::invalid_argument);
    }
}
