#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "strand/betti_table.hpp"

namespace strand {

// exact rational arithmetic for the table decompositions; everything here
// stays tiny, but products are overflow-checked anyway
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    bool negative() const { return num < 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const {
        return num == o.num && den == o.den;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    std::string str() const;
};

struct DegreeSequence {
    std::vector<int> degrees;  // strictly increasing

    bool operator==(const DegreeSequence& o) const {
        return degrees == o.degrees;
    }
    std::string str() const;
};

// sparse table of nonnegative rationals keyed by (step i, total degree)
struct RationalBettiTable {
    std::map<std::pair<int, int>, Rational> entries;

    void set(int i, int total_degree, Rational v) {
        if (!v.is_zero()) entries[{i, total_degree}] = v;
    }
    Rational at(int i, int total_degree) const {
        auto it = entries.find({i, total_degree});
        return it == entries.end() ? Rational(0) : it->second;
    }
    bool is_zero() const;
    bool operator==(const RationalBettiTable& o) const;
};

struct NotDecomposable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pure table of a strictly increasing degree sequence: beta_i proportional
// to prod_{j != i} 1/|d_j - d_i|, scaled to the smallest all-integer table
RationalBettiTable pure_table(const DegreeSequence& d);

struct BsComponent {
    Rational coeff;
    DegreeSequence degrees;
};

// Greedy peeling along the maximal degree sequence; the combination
// recomposes the input exactly. Emitted sequences form an ascending chain
// in the usual order (entrywise, with shorter sequences padded by infinity,
// so longer sequences come first).
std::vector<BsComponent> decompose(const RationalBettiTable& table);

RationalBettiTable to_rational_table(const BettiTable& table);

}  // namespace strand
