#pragma once

#include <vector>

#include "strand/monideal.hpp"
#include "strand/polynomial.hpp"

namespace strand {

struct GroebnerBasis {
    RingContext ring;
    std::vector<Polynomial> elements;  // monic; descending leading monomials
    bool reduced = false;
};

// normal form of f against the sequence G (first applicable divisor wins;
// canonical when G is a Groebner basis). Empty G returns f.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis);

// Buchberger completion with the normal pair-selection strategy (lowest lcm
// degree first) and the coprimality and chain criteria, followed by
// minimalization and inter-reduction. Every returned basis is verified: all
// S-polynomials of the output reduce to zero (and the completion restarts
// from any failure, so the verification is a backstop, not an assumption).
// The public entry point rejects non-homogeneous generators.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order);
// same engine without the homogeneity gate; used by the saturation and
// elimination internals that run in auxiliary rings
GroebnerBasis buchberger_any(const Ideal& ideal, MonomialOrder order);

// minimal monomial generators of the initial ideal; expects a reduced basis
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

// I intersect k[x_{keep_from},...,x_N], computed from a Lex basis and
// reindexed into a ring with nvars - keep_from variables. keep_from == 0
// returns the input unchanged.
Ideal eliminate(const Ideal& ideal, int keep_from);

// I : f^infinity. General path adjoins an inverse variable w with relation
// w*f - 1 and eliminates it; the inhomogeneous step runs in the auxiliary
// ring and the result is split back into homogeneous components. When f is
// the last variable and the order is DegRevLex the division fast path is
// used instead.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
Ideal saturate_by_last_variable(const Ideal& ideal);

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);
// mutual reduction of generators
bool ideal_equal(const Ideal& a, const Ideal& b);

bool all_homogeneous(const std::vector<Polynomial>& gens);

}  // namespace strand
