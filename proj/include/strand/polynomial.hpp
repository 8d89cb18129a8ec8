#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strand/ring.hpp"

namespace strand {

struct Term {
    Monomial monomial;
    std::uint32_t coeff = 0;  // in [1, p); zero terms are never stored
};

// Exact multivariate polynomial over GF(p). Terms are kept strictly
// descending in the ring's monomial order; immutable by convention (all
// operations return fresh values).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingContext ring) : ring_(ring) {}
    // normalizes: reduces coefficients mod p, merges duplicates, sorts, drops zeros
    Polynomial(RingContext ring, std::vector<Term> terms);

    static Polynomial zero(RingContext ring) { return Polynomial(ring); }
    static Polynomial constant(RingContext ring, std::int64_t c);
    static Polynomial monomial_term(RingContext ring, Monomial m,
                                    std::int64_t c = 1);
    static Polynomial variable(RingContext ring, int i);

    const RingContext& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const;
    std::uint32_t leading_coeff() const;

    std::int32_t degree() const;  // max term degree; -1 for zero
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(std::uint32_t c) const;          // c * f
    Polynomial times_monomial(const Monomial& m,
                              std::uint32_t c = 1) const;  // c * m * f
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // re-sorts the terms for a ring with a different order (same prime/nvars)
    Polynomial in_ring(RingContext other) const;

    std::string str() const;

  private:
    RingContext ring_;
    std::vector<Term> terms_;  // strictly descending in ring_.order
};

// substitutes x_i -> sum_j M[i][j] * x_j; M must be square of size nvars
Polynomial apply_linear_change(
    const Polynomial& f, const std::vector<std::vector<std::uint32_t>>& M);

// substitutes x_i -> the given polynomial for each variable (general support
// for sections and dehomogenization-style maps). images.size() == nvars; the
// images live in the target ring.
Polynomial substitute(const Polynomial& f, RingContext target,
                      const std::vector<Polynomial>& images);

// A homogeneous ideal presented by generators. Plain data; the Groebner
// module and everything above it operate on these.
struct Ideal {
    RingContext ring;
    std::vector<Polynomial> gens;

    bool operator==(const Ideal& o) const {
        return ring == o.ring && gens == o.gens;
    }
};

Ideal make_ideal(RingContext ring, std::vector<Polynomial> gens);

void check_same_ring(const RingContext& a, const RingContext& b,
                     const char* where);

}  // namespace strand
