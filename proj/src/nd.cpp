#include "strand/nd.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "strand/matrix.hpp"

namespace strand {

namespace {

// smallest degree on x0..x{e-1} over the gin generators; certifies exactly
// the ells below it
int min_leading_block_degree(const MonomialIdeal& gin, int e) {
    int m = INT32_MAX;
    for (auto& g : gin.min_gens())
        m = std::min<int>(m, g.degree_on_first(e));
    return m;
}

}  // namespace

NDCertificate nd_check_from_gin(const GinResult& gin, int ell) {
    NDCertificate cert;
    cert.ell = ell;
    cert.method = NdMethod::GinCriterion;
    cert.seed = gin.seed;
    if (!gin.stable) {
        cert.verdict = NdVerdict::Unstable;
        cert.note = "gin unstable after " + std::to_string(gin.trials) +
                    " trials";
        return cert;
    }
    HilbertData hd = hilbert_data(gin.gin);
    cert.e = hd.e;
    if (hd.empty_scheme()) {
        cert.verdict = NdVerdict::Refuted;
        cert.note = "empty scheme";
        return cert;
    }
    cert.verdict = NdVerdict::Certified;
    for (auto& g : gin.gin.min_gens()) {
        if (g.degree_on_first(cert.e) < ell + 1) {
            cert.verdict = NdVerdict::Refuted;
            cert.witness.push_back(g);
        }
    }
    return cert;
}

NDCertificate nd_check(const Ideal& ideal, int ell, std::uint64_t seed,
                       int trials) {
    GinResult gin = generic_initial_ideal(ideal, trials, seed);
    return nd_check_from_gin(gin, ell);
}

SectionResult general_point_section(const Ideal& ideal, int e,
                                    std::int64_t expected_length, Rng& rng) {
    const RingContext& ring = ideal.ring;
    if (e < 0 || e + 1 > ring.nvars)
        throw std::invalid_argument(
            "general_point_section: codimension out of range");
    RingContext small = make_ring(ring.prime, e + 1, MonomialOrder::DegRevLex);
    constexpr int kMaxAttempts = 16;
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        FpMatrix m = fp_random_invertible(ring.prime, ring.nvars, rng);
        auto rows = to_rows(m);
        // restriction to the random subspace: substitute x_i -> rotated
        // coordinates, then set the trailing n coordinates to zero
        std::vector<Polynomial> images;
        images.reserve(ring.nvars);
        for (int i = 0; i < ring.nvars; ++i) {
            std::vector<Term> ts;
            for (int j = 0; j <= e; ++j) {
                std::uint32_t c = rows[i][j];
                if (c != 0) ts.push_back(Term{Monomial::variable(e + 1, j), c});
            }
            images.push_back(Polynomial(small, std::move(ts)));
        }
        std::vector<Polynomial> gens;
        gens.reserve(ideal.gens.size());
        for (auto& g : ideal.gens) {
            Polynomial s = substitute(g, small, images);
            if (!s.is_zero()) gens.push_back(std::move(s));
        }
        // the last coordinate is generic after the rotation, so saturation
        // with respect to it gives the saturated section ideal
        Ideal sat = saturate_by_last_variable(Ideal{small, std::move(gens)});
        HilbertData hd = hilbert_data(sat);
        bool zero_dimensional = (hd.n == 0);
        if (!zero_dimensional) continue;
        if (expected_length >= 0 && hd.degree != expected_length) continue;
        return SectionResult{std::move(sat), hd.degree, attempt};
    }
    throw std::runtime_error(
        "general_point_section: no nondegenerate section found");
}

NDCertificate nd_check_direct(const Ideal& ideal, int ell,
                              std::uint64_t seed) {
    NDCertificate cert;
    cert.ell = ell;
    cert.method = NdMethod::DirectSection;
    cert.seed = seed;
    // global refutation is immediate: a global form of degree ell restricts
    GroebnerBasis gb = buchberger(ideal, ideal.ring.order);
    HilbertData hd = hilbert_data(gb);
    cert.e = hd.e;
    if (hd.empty_scheme()) {
        cert.verdict = NdVerdict::Refuted;
        cert.note = "empty scheme";
        return cert;
    }
    Rng rng(seed);
    SectionResult section =
        general_point_section(Ideal{gb.ring, gb.elements}, hd.e, hd.degree, rng);
    GroebnerBasis section_gb =
        buchberger(section.ideal, section.ideal.ring.order);
    std::int64_t forms = ideal_piece_dimension(section_gb, ell);
    std::ostringstream note;
    note << "section length " << section.length << ", dim (I_section)_" << ell
         << " = " << forms;
    cert.note = note.str();
    cert.verdict = (forms == 0) ? NdVerdict::Certified : NdVerdict::Refuted;
    return cert;
}

int nd_index_from_gin(const GinResult& gin, int cap) {
    if (!gin.stable)
        throw std::invalid_argument("nd_index: unstable gin result");
    HilbertData hd = hilbert_data(gin.gin);
    if (hd.empty_scheme()) return 0;
    int m = min_leading_block_degree(gin.gin, hd.e);
    if (m == INT32_MAX) return cap;  // zero ideal: every level certified
    return std::clamp(m - 1, 0, cap);
}

int nd_index(const Ideal& ideal, int cap, std::uint64_t seed, int trials) {
    if (cap < 1) throw std::invalid_argument("nd_index: need cap >= 1");
    GinResult gin = generic_initial_ideal(ideal, trials, seed);
    return nd_index_from_gin(gin, cap);
}

DegreeBoundReport degree_bound_from_data(const HilbertData& data, int ell) {
    DegreeBoundReport out;
    out.ell = ell;
    out.e = data.e;
    out.degree = data.degree;
    out.bound = binomial(data.e + ell, ell);
    out.holds = (out.degree >= out.bound);
    out.equality = (out.degree == out.bound);
    return out;
}

DegreeBoundReport degree_bound_check(const Ideal& ideal, int ell,
                                     std::uint64_t seed, int trials) {
    NDCertificate cert = nd_check(ideal, ell, seed, trials);
    if (!cert.certified())
        throw std::invalid_argument(
            "degree_bound_check: nd(" + std::to_string(ell) +
            ") is not certified for this ideal");
    return degree_bound_from_data(hilbert_data(ideal), ell);
}

}  // namespace strand
