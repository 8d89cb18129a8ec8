#include "strand/gin.hpp"

#include <map>

#include "strand/matrix.hpp"

namespace strand {

GinResult generic_initial_ideal(const Ideal& ideal, int trials,
                                std::uint64_t seed) {
    if (trials < 2)
        throw std::invalid_argument("generic_initial_ideal: need trials >= 2");
    if (!all_homogeneous(ideal.gens))
        throw std::invalid_argument(
            "generic_initial_ideal: homogeneous ideal required");
    Rng rng(seed);
    std::vector<MonomialIdeal> results;
    results.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        FpMatrix m =
            fp_random_invertible(ideal.ring.prime, ideal.ring.nvars, rng);
        auto rows = to_rows(m);
        std::vector<Polynomial> moved;
        moved.reserve(ideal.gens.size());
        for (auto& g : ideal.gens)
            if (!g.is_zero()) moved.push_back(apply_linear_change(g, rows));
        GroebnerBasis gb = buchberger(Ideal{ideal.ring, std::move(moved)},
                                      MonomialOrder::DegRevLex);
        results.push_back(initial_ideal(gb));
    }
    // consensus: most frequent trial result, earliest on ties
    int best = 0, best_count = 0;
    for (int i = 0; i < trials; ++i) {
        int count = 0;
        for (int j = 0; j < trials; ++j)
            if (results[j] == results[i]) ++count;
        if (count > best_count) {
            best_count = count;
            best = i;
        }
    }
    GinResult out;
    out.gin = results[best];
    out.trials = trials;
    out.agreements = best_count;
    out.seed = seed;
    out.stable = (best_count == trials);
    if (out.stable && !is_borel_fixed(out.gin))
        throw CharacteristicError(
            "generic_initial_ideal: stable gin is not Borel-fixed; the "
            "characteristic is likely at most the regularity of the ideal");
    return out;
}

int regularity_from_gin(const GinResult& g) {
    if (!g.stable)
        throw std::invalid_argument(
            "regularity_from_gin: unstable gin result rejected");
    return g.gin.max_gen_degree();
}

}  // namespace strand
