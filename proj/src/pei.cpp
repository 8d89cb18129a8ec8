#include "strand/pei.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "strand/matrix.hpp"

namespace strand {

namespace {

// x0-leading coefficient: the sum of terms carrying the maximal x0-power,
// with that power stripped and variables reindexed into S1
Polynomial leading_coefficient_in_x0(const Polynomial& f, RingContext base,
                                     int* x0_power) {
    int d0 = 0;
    for (auto& t : f.terms()) d0 = std::max<int>(d0, t.monomial.exponent(0));
    *x0_power = d0;
    std::vector<Term> ts;
    for (auto& t : f.terms()) {
        if (t.monomial.exponent(0) != d0) continue;
        std::vector<std::int32_t> exps(base.nvars);
        for (int i = 0; i < base.nvars; ++i)
            exps[i] = t.monomial.exponent(i + 1);
        ts.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial(base, std::move(ts));
}

}  // namespace

PEIFiltration partial_elimination_ideals(const Ideal& ideal, int m) {
    if (m < 0)
        throw std::invalid_argument("partial_elimination_ideals: need m >= 0");
    if (ideal.ring.nvars < 2)
        throw std::invalid_argument(
            "partial_elimination_ideals: need at least two variables");
    GroebnerBasis lex = buchberger_any(ideal, MonomialOrder::Lex);
    RingContext base = make_ring(ideal.ring.prime, ideal.ring.nvars - 1,
                                 ideal.ring.order);
    // under Lex with x0 first the leading term carries the maximal x0-power
    std::vector<std::vector<Polynomial>> by_level(m + 1);
    for (auto& f : lex.elements) {
        int d0 = 0;
        Polynomial bar = leading_coefficient_in_x0(f, base, &d0);
        if (d0 <= m && !bar.is_zero()) by_level[d0].push_back(std::move(bar));
    }
    PEIFiltration out;
    out.base_ring = base;
    std::vector<Polynomial> cumulative;
    for (int i = 0; i <= m; ++i) {
        for (auto& g : by_level[i]) cumulative.push_back(g);
        out.ideals.push_back(Ideal{base, cumulative});
    }
    return out;
}

bool generated_in_degree_at_most_one(const Ideal& ideal) {
    std::vector<Polynomial> low;
    for (auto& g : ideal.gens) {
        if (g.is_zero()) continue;
        if (g.degree() <= 1) low.push_back(g);
    }
    if (low.empty()) {
        for (auto& g : ideal.gens)
            if (!g.is_zero()) return false;
        return true;  // zero ideal
    }
    GroebnerBasis gb = buchberger_any(Ideal{ideal.ring, low}, ideal.ring.order);
    for (auto& g : ideal.gens)
        if (!ideal_contains(gb, g.in_ring(gb.ring))) return false;
    return true;
}

SecantLocusReport secant_locus_check(const Ideal& ideal, int d,
                                     const NdpVerdict* ndp_precomputed) {
    if (d < 2)
        throw std::invalid_argument("secant_locus_check: need d >= 2");
    SecantLocusReport rep;
    // the center (1,0,...,0) must avoid the scheme: some generator must be
    // nonzero there, i.e. contain a pure x0-power term
    bool center_off = false;
    for (auto& g : ideal.gens) {
        for (auto& t : g.terms()) {
            if (t.monomial.degree_on_first(1) == t.monomial.degree()) {
                center_off = true;
                break;
            }
        }
        if (center_off) break;
    }
    if (!center_off) {
        rep.skipped_reason = "projection center (1,0,...,0) lies on the scheme";
        return rep;
    }
    NdpVerdict ndp;
    if (ndp_precomputed != nullptr) {
        ndp = *ndp_precomputed;
    } else {
        GroebnerBasis gb = buchberger(ideal, ideal.ring.order);
        MonomialIdeal lead = initial_ideal(gb);
        int reg_bound = 0;
        for (auto& g : lead.min_gens())
            reg_bound += std::max(0, g.degree() - 1);
        int max_j = std::max(d, reg_bound);
        BettiTable table =
            koszul_betti(gb, ideal.ring.nvars, max_j, reg_bound);
        ndp = property_ndp(table, d, 2);
    }
    if (!ndp.holds || !ndp.determinate) {
        rep.skipped_reason = "property N_{d,2} not verified";
        return rep;
    }
    rep.applicable = true;
    PEIFiltration pei = partial_elimination_ideals(ideal, d - 1);
    const Ideal& k = pei.k(d - 1);
    bool any = false;
    for (auto& g : k.gens)
        if (!g.is_zero()) any = true;
    rep.k_zero = !any;
    if (!rep.k_zero) {
        rep.linear = generated_in_degree_at_most_one(k);
        for (auto& g : k.gens)
            if (!g.is_zero() && g.degree() == 1) ++rep.linear_form_count;
    }
    return rep;
}

std::int64_t finite_intersection_length(const Ideal& ideal,
                                        const std::vector<Polynomial>& plane_forms,
                                        Rng& rng) {
    std::vector<Polynomial> gens = ideal.gens;
    for (auto& f : plane_forms) gens.push_back(f);
    // rotate so that the last variable is generic, then saturate by it
    FpMatrix m = fp_random_invertible(ideal.ring.prime, ideal.ring.nvars, rng);
    auto rows = to_rows(m);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (auto& g : gens)
        if (!g.is_zero()) moved.push_back(apply_linear_change(g, rows));
    Ideal rotated{ideal.ring.with_order(MonomialOrder::DegRevLex),
                  std::move(moved)};
    Ideal sat = saturate_by_last_variable(rotated);
    HilbertData hd = hilbert_data(sat);
    if (hd.empty_scheme()) return 0;
    if (hd.n != 0) return -1;
    return hd.degree;
}

MultisecantStats multisecant_length_sampler(const Ideal& ideal, int p_dim,
                                            int d, int samples,
                                            std::uint64_t seed,
                                            const PointSampler* on_scheme) {
    if (p_dim < 1 || d < 2 || samples < 1)
        throw std::invalid_argument("multisecant_length_sampler: bad parameters");
    int n = ideal.ring.nvars;
    if (p_dim + 1 >= n)
        throw std::invalid_argument(
            "multisecant_length_sampler: plane dimension too large");
    MultisecantStats stats;
    stats.requested = samples;
    stats.bound = binomial(d - 1 + p_dim, p_dim);
    Rng rng(seed);
    constexpr int kMaxResamplesPerSlot = 32;
    for (int s = 0; s < samples; ++s) {
        bool through_points = (on_scheme != nullptr) && (s % 2 == 0);
        std::int64_t length = -1;
        for (int attempt = 0; attempt < kMaxResamplesPerSlot; ++attempt) {
            // span the plane by p_dim+1 points
            FpMatrix pts(ideal.ring.prime, p_dim + 1, n);
            for (int r = 0; r < p_dim + 1; ++r) {
                std::vector<std::uint32_t> pt;
                if (through_points) {
                    pt = (*on_scheme)(rng);
                } else {
                    pt.resize(n);
                    for (auto& v : pt) v = rng.field_element(ideal.ring.prime);
                }
                for (int c = 0; c < n; ++c) pts.at(r, c) = pt[c];
            }
            if (fp_rank(pts) < p_dim + 1) {
                ++stats.resamples;
                continue;
            }
            auto null_basis = fp_nullspace(std::move(pts));
            std::vector<Polynomial> forms;
            for (auto& v : null_basis) {
                std::vector<Term> ts;
                for (int c = 0; c < n; ++c)
                    if (v[c] != 0)
                        ts.push_back(Term{Monomial::variable(n, c), v[c]});
                forms.push_back(Polynomial(ideal.ring, std::move(ts)));
            }
            length = finite_intersection_length(ideal, forms, rng);
            if (length >= 0) break;
            ++stats.resamples;
        }
        if (length < 0)
            throw std::runtime_error(
                "multisecant_length_sampler: could not find a finite section");
        stats.lengths.push_back(length);
        stats.max_length = std::max(stats.max_length, length);
        ++stats.completed;
    }
    stats.bound_respected = stats.max_length <= stats.bound;
    return stats;
}

}  // namespace strand
