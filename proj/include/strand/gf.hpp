#pragma once

#include <cstdint>
#include <stdexcept>

namespace strand {

// Arithmetic in the prime field GF(p). Coefficients are stored as canonical
// representatives in [0, p). p is assumed odd and below 2^31 so products fit
// in 64 bits.
struct Gf {
    std::uint32_t p;

    explicit Gf(std::uint32_t prime) : p(prime) {}

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("Gf::inv: zero is not invertible");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p;
        return static_cast<std::uint32_t>(t);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
        return mul(a, inv(b));
    }
    // maps any integer (e.g. a parsed literal) into [0, p)
    std::uint32_t from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
};

bool is_prime_u32(std::uint32_t n);

}  // namespace strand
