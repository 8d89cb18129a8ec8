#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strand/betti.hpp"
#include "strand/groebner.hpp"
#include "strand/hilbert.hpp"

namespace strand {

// Partial elimination ideals K_0 <= K_1 <= ... under Lex with x0 greatest:
// K_i is generated by the x0-leading coefficients of ideal elements whose
// leading x0-power is at most i, read off a Lex Groebner basis. K_0 is the
// ideal of the projection from (1,0,...,0).
struct PEIFiltration {
    RingContext base_ring;      // k[x1..xN], reindexed to x0..x{N-2}
    std::vector<Ideal> ideals;  // K_0 .. K_m

    const Ideal& k(int i) const { return ideals.at(i); }
    int levels() const { return static_cast<int>(ideals.size()); }
};

PEIFiltration partial_elimination_ideals(const Ideal& ideal, int m);

// true when the ideal is zero or its degree <= 1 elements generate it
bool generated_in_degree_at_most_one(const Ideal& ideal);

// Theorem-style check for the locus of d-secant lines through the center
// (1,0,...,0): requires N_{d,2} and an off-scheme center, then asserts that
// K_{d-1} is zero or generated by linear forms.
struct SecantLocusReport {
    bool applicable = false;
    std::string skipped_reason;
    bool k_zero = false;
    bool linear = false;         // generated in degree <= 1
    int linear_form_count = 0;

    bool conclusion_ok() const { return applicable && (k_zero || linear); }
};
SecantLocusReport secant_locus_check(const Ideal& ideal, int d,
                                     const NdpVerdict* ndp_precomputed = nullptr);

// random point source on a parametrized scheme, used to build planes that
// actually meet the scheme
using PointSampler = std::function<std::vector<std::uint32_t>(Rng&)>;

// Random p-plane sections: samples planes (through sampled scheme points
// when a sampler is registered, fully random otherwise), measures the
// length of the zero-dimensional intersection and compares it against
// C(d-1+p, p). Non-finite intersections are resampled and counted.
struct MultisecantStats {
    int requested = 0;
    int completed = 0;
    int resamples = 0;
    std::int64_t bound = 0;
    std::int64_t max_length = 0;
    std::vector<std::int64_t> lengths;
    bool bound_respected = false;
};
MultisecantStats multisecant_length_sampler(const Ideal& ideal, int p_dim,
                                            int d, int samples,
                                            std::uint64_t seed,
                                            const PointSampler* on_scheme = nullptr);

// length of the zero-dimensional part of I + (linear forms of the plane);
// returns -1 when the intersection is not finite
std::int64_t finite_intersection_length(const Ideal& ideal,
                                        const std::vector<Polynomial>& plane_forms,
                                        Rng& rng);

}  // namespace strand
