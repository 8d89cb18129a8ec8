#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strand/groebner.hpp"
#include "strand/monideal.hpp"

namespace strand {

// Hilbert-series data of R/I: the numerator after clearing all (1-t)
// factors is the h-vector; n is the projective dimension of the scheme
// (Krull dimension minus one), e = nvars - 1 - n the codimension, and
// degree = sum of the h-vector. n == -1 marks the empty scheme.
struct HilbertData {
    int n = 0;
    int e = 0;
    std::int64_t degree = 0;
    std::vector<std::int64_t> h_vector;

    bool empty_scheme() const { return n < 0; }
};

// dim_k (R/I)_d counted by standard monomials of the initial ideal
std::int64_t hilbert_function(const MonomialIdeal& m, int d);
std::int64_t hilbert_function(const GroebnerBasis& gb, int d);
std::int64_t hilbert_function(const Ideal& ideal, int d);

// numerator N(t) with HS_{R/M}(t) = N(t) / (1-t)^nvars, by the pivot
// recursion N(M) = N(M + (x_v)) + t * N(M : x_v) on the most frequent
// variable of the generator supports
std::vector<std::int64_t> hilbert_series_raw_numerator(const MonomialIdeal& m);

// h-vector: the raw numerator exactly divided by (1-t)^{codim}
std::vector<std::int64_t> hilbert_series_numerator(const MonomialIdeal& m);

HilbertData hilbert_data(const MonomialIdeal& m);
HilbertData hilbert_data(const GroebnerBasis& gb);
HilbertData hilbert_data(const Ideal& ideal);

// (n, e, degree) per the Hilbert polynomial conventions
struct DimensionDegree {
    int n;
    int e;
    std::int64_t degree;
};
DimensionDegree dimension_degree(const Ideal& ideal);
DimensionDegree dimension_degree(const MonomialIdeal& m);

// dim_k (I)_d = dim R_d - dim (R/I)_d
std::int64_t ideal_piece_dimension(const GroebnerBasis& gb, int d);

// h-vector consequences of the nondegeneracy chain: with nd(ell-1)
// certified, h_j = C(e+j-1, j) for j <= ell-1 and
// h_ell = C(e+ell-1, ell) - dim (I)_ell >= 0.
struct HVectorCheck {
    int ell = 0;
    int e = 0;
    bool formula_ok = false;
    bool h_ell_matches = false;
    bool h_ell_nonnegative = false;
    std::int64_t h_ell = 0;
    std::int64_t dim_I_ell = 0;
    std::string detail;

    bool ok() const { return formula_ok && h_ell_matches && h_ell_nonnegative; }
};
HVectorCheck h_nonnegativity_check(const GroebnerBasis& gb, int ell);

}  // namespace strand
