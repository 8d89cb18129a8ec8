#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strand/betti_table.hpp"
#include "strand/gin.hpp"
#include "strand/groebner.hpp"
#include "strand/hilbert.hpp"

namespace strand {

// Graded Betti numbers of R/I by Koszul-strand linear algebra over GF(p):
// beta_{i,j} is the homology dimension of the strand
//   Lambda^{i+1} V (x) (R/I)_{j-1} -> Lambda^i V (x) (R/I)_j -> ...
// with (R/I) graded pieces realized by standard monomials of in(I).
// max_i defaults to nvars (always long enough); reg_hint, when >= 0,
// certifies that rows above it vanish so the table is marked complete.
BettiTable koszul_betti(const GroebnerBasis& gb, int max_i, int max_j,
                        int reg_hint = -1);
BettiTable koszul_betti(const Ideal& ideal, int max_i, int max_j,
                        int reg_hint = -1);
BettiTable koszul_betti(const MonomialIdeal& m, int max_i, int max_j,
                        int reg_hint = -1);

// property N_{d,p}: beta_{i,j} = 0 for 1 <= i <= p and j >= d
struct NdpVerdict {
    bool holds = false;
    bool determinate = false;  // false when the table window may truncate
    int witness_i = -1, witness_j = -1;
    std::int64_t witness_beta = 0;
};
NdpVerdict property_ndp(const BettiTable& table, int d, int p);

// projective dimension e (arithmetically Cohen-Macaulay) and every nonzero
// beta_{i,j}, i >= 1, in row j = d-1 (d-linear resolution)
bool is_acm_dlinear(const BettiTable& table, int n, int e, int d);

// per-step margins against the sharp first-strand bound
// C(i+ell-1, ell) * C(e+ell, i+ell), with the equality-case cross-checks
struct ThmARow {
    int i = 0;
    std::int64_t beta = 0;
    std::int64_t bound = 0;
    bool equality = false;
};
struct ThmAReport {
    int ell = 0;
    int e = 0;
    std::vector<ThmARow> rows;  // i = 1..e
    bool bound_ok = false;       // all bounds hold
    bool zero_beyond_e = false;  // beta_{i,ell} = 0 for i > e
    bool any_equality = false;
    // equality-case equivalences, evaluated when context is supplied
    bool checked_equivalences = false;
    bool gin_is_power_ideal = false;
    bool acm_linear = false;
    bool degree_minimal = false;
    bool equivalences_ok = false;
};
ThmAReport thmA_verdict(const BettiTable& table, int e, int ell,
                        const MonomialIdeal* gin = nullptr,
                        const HilbertData* hilbert = nullptr);

// syzygetic rigidity: nd(d-1) + N_{d,e} forces an ACM d-linear resolution
// of degree C(d-1+e, e); hypothesis failures are reported, not fatal
struct RigidityReport {
    int d = 0;
    int e = 0;
    bool nd_hypothesis = false;
    bool ndp_hypothesis = false;
    bool hypotheses_met = false;
    std::string failed_hypothesis;
    bool conclusion_acm_dlinear = false;
    bool conclusion_degree = false;
    std::int64_t degree = 0;
    std::int64_t expected_degree = 0;

    bool conclusion_ok() const {
        return hypotheses_met && conclusion_acm_dlinear && conclusion_degree;
    }
};
RigidityReport rigidity_check(const Ideal& ideal, int d, std::uint64_t seed,
                              int trials = 2);

// consecutive-cancellation decomposition: nonnegative c with
// upper_{i,j} = lower_{i,j} + c_{i,j} + c_{i-1,j+1}
struct CancellationCheck {
    bool ok = false;
    std::string detail;
};
CancellationCheck cancellation_decomposition(const BettiTable& lower,
                                             const BettiTable& upper);

// structured triple list used by the table file format and the reports
std::vector<std::tuple<int, int, std::int64_t>> betti_triples(
    const BettiTable& table);

}  // namespace strand
