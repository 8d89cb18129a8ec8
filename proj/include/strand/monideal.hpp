#pragma once

#include <cstdint>
#include <vector>

#include "strand/betti_table.hpp"
#include "strand/polynomial.hpp"
#include "strand/ring.hpp"
#include "strand/rng.hpp"

namespace strand {

// Monomial ideal held by its minimal generating set, sorted descending in
// the ring's order. Carrier for initial ideals, Gins and the power ideals
// (x0,...,x{e-1})^{l+1}.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    // minimalizes and sorts
    MonomialIdeal(RingContext ring, std::vector<Monomial> gens);

    const RingContext& ring() const { return ring_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const {
        return gens_.size() == 1 && gens_.front().is_one();
    }

    bool contains(const Monomial& m) const;  // divisibility by some generator
    int max_gen_degree() const;              // 0 for the zero ideal

    bool operator==(const MonomialIdeal& o) const {
        return ring_ == o.ring_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    MonomialIdeal plus(const Monomial& m) const;       // I + (m), minimalized
    MonomialIdeal colon(const Monomial& m) const;      // I : m
    Ideal to_ideal() const;                            // generators as polynomials

  private:
    RingContext ring_;
    std::vector<Monomial> gens_;
};

MonomialIdeal minimal_generators(RingContext ring, std::vector<Monomial> monomials);

// strongly-stable test: for every generator T, every x_j | T and every
// i < j, the swap x_i*T/x_j stays in the ideal
bool is_borel_fixed(const MonomialIdeal& m);

// Betti numbers of R/M for a Borel-fixed M from the generator statistic
// max(T): beta_{i,j} = sum over degree-(j+1) generators of C(max(T), i-1).
BettiTable ek_betti(const MonomialIdeal& m);

// J0 = (x0,...,x{e-1})^{l+1} inside the given ring
MonomialIdeal power_ideal(RingContext ring, int e, int ell);
// closed form for beta_{i,ell}(R/J0): C(i+ell-1, ell) * C(e+ell, i+ell)
std::int64_t power_ideal_betti(int e, int ell, int i);

// the monomial ideal of a general zero-dimensional linear section of a
// Borel-fixed ideal: kill x_{e+1},...,x_{N}, substitute x_e -> 1,
// minimalize; the result lives in e+1 variables
MonomialIdeal borel_point_section(const MonomialIdeal& m, int e);

// replaces each generator prod x_i^{a_i} by prod_i prod_{j<a_i} L_{i,j}
// with independent random linear forms shared across generators;
// preserves the Hilbert function for generic forms
Ideal distraction(const MonomialIdeal& m, Rng& rng);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace strand
