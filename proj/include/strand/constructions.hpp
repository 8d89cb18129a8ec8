#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "strand/pei.hpp"
#include "strand/polynomial.hpp"
#include "strand/rng.hpp"

namespace strand {

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::int64_t>> a;  // may contain negatives
};

// raised when an isomorphic projection was requested but the center meets
// the scheme (detected through a degree or dimension drop)
struct ProjectionDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// kernel ideal of the monomial map x_j -> t^{A e_j}: generators
// x_j * t^{a_j^-} - t^{a_j^+}, one Rabinowitsch saturation by the product
// of the parameters, parameters eliminated. Output generators are binomial.
Ideal toric_from_matrix(const IntegerMatrix& a, RingContext target);

// 2-minors of the Hankel matrix rows (x0..x{d-1}), (x1..xd)
Ideal rational_normal_curve(std::uint32_t prime, int deg);

// toric ideal of the d-uple embedding of P^n
Ideal veronese(std::uint32_t prime, int n, int d);

// t-minors of the t-row block catalecticant; block_vars lists the number of
// variables per block (block with v variables contributes v - t + 1 columns)
Ideal generic_catalecticant_minors(std::uint32_t prime, int t,
                                   const std::vector<int>& block_vars);

// linear projection from the span of the given (independent) points: move
// the span to the leading coordinates, eliminate them. The image ideal of a
// saturated input stays saturated. With expect_isomorphic the (n, degree)
// pair must survive, else ProjectionDegenerate is thrown.
Ideal project_from_points(const Ideal& ideal,
                          const std::vector<std::vector<std::uint32_t>>& points,
                          bool expect_isomorphic, Rng& rng);

// cut by `count` general hyperplanes: random rotation, leading coordinates
// set to zero, saturation in the small ring
Ideal general_hyperplane_section(const Ideal& ideal, int count,
                                 std::uint64_t seed);

// coordinate change moving q to (1,0,...,0); used to stage projections for
// the partial elimination machinery
Ideal recoordinate_center(const Ideal& ideal,
                          const std::vector<std::uint32_t>& q, Rng& rng);

// points on parametrized models
std::vector<std::uint32_t> rnc_point(std::uint32_t prime, int deg, Rng& rng);
PointSampler rnc_sampler(std::uint32_t prime, int deg);

}  // namespace strand
