#pragma once

#include <cstdint>
#include <random>

namespace strand {

// Deterministic seeded RNG. All randomized routines take one of these (or a
// seed) so that certificates can embed the seed and replays are exact. The
// uniform draw avoids std::uniform_int_distribution, whose output is
// implementation defined; the tiny modulo bias is irrelevant here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    // uniform field element in [0, p)
    std::uint32_t field_element(std::uint32_t p) {
        return static_cast<std::uint32_t>(below(p));
    }

    // uniform nonzero field element
    std::uint32_t nonzero_field_element(std::uint32_t p) {
        return 1 + static_cast<std::uint32_t>(below(p - 1));
    }

    // independent child stream; used to give pipeline stages their own seeds
    Rng fork(std::uint64_t salt) {
        return Rng(eng_() ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace strand
