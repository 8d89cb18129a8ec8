#pragma once

#include <cstdint>
#include <vector>

#include "strand/gf.hpp"
#include "strand/rng.hpp"

namespace strand {

// Dense row-major matrix over GF(p). Small utility core shared by the rank
// computations, coordinate changes and point/plane constructions.
struct FpMatrix {
    std::uint32_t p = 32003;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;  // rows*cols entries

    FpMatrix() = default;
    FpMatrix(std::uint32_t prime, int r, int c)
        : p(prime), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Gaussian elimination rank. Dense path for moderate sizes; matrices wider
// than sparse_threshold columns go through a sparse elimination instead.
int fp_rank(FpMatrix m);
int fp_rank_sparse(const std::vector<std::vector<std::pair<int, std::uint32_t>>>& rows,
                   int ncols, std::uint32_t p);

// convenience wrapper choosing the path by column count
struct SparseMatrix {
    std::uint32_t p = 32003;
    int rows = 0;
    int cols = 0;
    // per-row list of (column, value), columns strictly increasing
    std::vector<std::vector<std::pair<int, std::uint32_t>>> entries;
};
int fp_rank(const SparseMatrix& m, int dense_column_limit = 5000);

bool fp_invertible(const FpMatrix& m);
FpMatrix fp_inverse(const FpMatrix& m);  // throws std::domain_error if singular
FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b);

// basis of the right nullspace {v : m v = 0}, each vector of length cols
std::vector<std::vector<std::uint32_t>> fp_nullspace(FpMatrix m);

FpMatrix fp_identity(std::uint32_t p, int n);
FpMatrix fp_random(std::uint32_t p, int rows, int cols, Rng& rng);
FpMatrix fp_random_invertible(std::uint32_t p, int n, Rng& rng);

// as plain nested vectors, the shape apply_linear_change expects
std::vector<std::vector<std::uint32_t>> to_rows(const FpMatrix& m);

}  // namespace strand
