#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strand/gin.hpp"
#include "strand/hilbert.hpp"

namespace strand {

enum class NdVerdict { Certified, Refuted, Unstable };
enum class NdMethod { GinCriterion, DirectSection };

// Certificate for the nondegeneracy condition nd(ell): a general linear
// section of each dimension >= e lies on no hypersurface of degree ell.
// The gin criterion certifies via Gin(I) inside (x0..x{e-1})^{ell+1}; the
// direct method cuts with a random section and tests (I_Gamma)_ell = 0.
struct NDCertificate {
    int ell = 0;
    NdVerdict verdict = NdVerdict::Unstable;
    NdMethod method = NdMethod::GinCriterion;
    int e = 0;
    std::uint64_t seed = 0;
    std::vector<Monomial> witness;  // offending gin generators when refuted
    std::string note;

    bool certified() const { return verdict == NdVerdict::Certified; }
};

NDCertificate nd_check(const Ideal& ideal, int ell, std::uint64_t seed,
                       int trials = 2);
// same verdict from an already-computed gin (the pipeline entry point)
NDCertificate nd_check_from_gin(const GinResult& gin, int ell);

NDCertificate nd_check_direct(const Ideal& ideal, int ell, std::uint64_t seed);

// max { ell <= cap : nd(ell) certified }; 0 means nd(1) fails
int nd_index(const Ideal& ideal, int cap, std::uint64_t seed, int trials = 2);
int nd_index_from_gin(const GinResult& gin, int cap);

// degree >= C(e+ell, ell) under nd(ell); equality is "minimal degree of
// ell-th kind"
struct DegreeBoundReport {
    int ell = 0;
    int e = 0;
    std::int64_t degree = 0;
    std::int64_t bound = 0;
    bool holds = false;
    bool equality = false;
};
DegreeBoundReport degree_bound_check(const Ideal& ideal, int ell,
                                     std::uint64_t seed, int trials = 2);
DegreeBoundReport degree_bound_from_data(const HilbertData& data, int ell);

// the zero-dimensional general section of the ideal: random coordinates,
// restriction to the first e+1 variables, saturation. Exposed because the
// direct nd test, the length checks and the tests all want it.
struct SectionResult {
    Ideal ideal;          // saturated section ideal in e+1 variables
    std::int64_t length;  // degree of the section scheme
    int attempts = 1;
};
SectionResult general_point_section(const Ideal& ideal, int e,
                                    std::int64_t expected_length, Rng& rng);

}  // namespace strand
