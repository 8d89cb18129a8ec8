#pragma once

#include <cstdint>
#include <stdexcept>

#include "strand/groebner.hpp"
#include "strand/monideal.hpp"
#include "strand/rng.hpp"

namespace strand {

// raised when a stable gin fails the Borel test, which over GF(p) signals
// that the characteristic is too small relative to the regularity
struct CharacteristicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Outcome of the randomized generic-initial-ideal computation: independent
// uniformly random coordinate changes, DegRevLex initial ideals, consensus.
// stable means every trial agreed; a stable result is checked Borel-fixed.
struct GinResult {
    MonomialIdeal gin;  // consensus (most frequent) initial ideal
    int trials = 0;
    int agreements = 0;
    std::uint64_t seed = 0;
    bool stable = false;
};

GinResult generic_initial_ideal(const Ideal& ideal, int trials,
                                std::uint64_t seed);

// reg(I) read off a stable gin as the maximal minimal-generator degree;
// rejects unstable results
int regularity_from_gin(const GinResult& g);

}  // namespace strand
