#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strand/gf.hpp"

namespace strand {

enum class MonomialOrder { DegRevLex, Lex };

// Polynomial ring GF(p)[x0,...,x{nvars-1}] with x0 the largest variable in
// every order. All Borel and elimination conventions in this library depend
// on that choice.
struct RingContext {
    std::uint32_t prime = 32003;
    int nvars = 1;
    MonomialOrder order = MonomialOrder::DegRevLex;

    bool operator==(const RingContext& o) const {
        return prime == o.prime && nvars == o.nvars && order == o.order;
    }
    bool operator!=(const RingContext& o) const { return !(*this == o); }

    Gf field() const { return Gf(prime); }
    RingContext with_order(MonomialOrder ord) const {
        return RingContext{prime, nvars, ord};
    }
    RingContext with_nvars(int n) const {
        return RingContext{prime, n, order};
    }
};

RingContext make_ring(std::uint32_t prime, int nvars,
                      MonomialOrder order = MonomialOrder::DegRevLex);

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> exps);
    static Monomial one(int nvars);
    static Monomial variable(int nvars, int i, int power = 1);

    const std::vector<std::int32_t>& exponents() const { return exps_; }
    std::int32_t exponent(int i) const { return exps_[i]; }
    int nvars() const { return static_cast<int>(exps_.size()); }
    std::int32_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    // index of the last variable with positive exponent; -1 for the unit
    int max_index() const;
    // total degree contributed by variables x0..x{k-1}
    std::int32_t degree_on_first(int k) const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    // exact division; caller guarantees divisibility
    Monomial operator/(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    std::string str() const;  // e.g. "x0^2*x3"

  private:
    std::vector<std::int32_t> exps_;
    std::int32_t degree_ = 0;
};

// total order; returns -1, 0, +1 for a < b, a == b, a > b.
// DegRevLex: higher total degree wins; on equal degree the monomial whose
// exponent vector differs last with a *smaller* entry wins.
// Lex: the first differing exponent from x0 decides.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto e : m.exponents()) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// All monomials of fixed degree in nvars variables, sorted descending in the
// given order, with O(1) rank lookup. Cached; used by the dense strand
// reducer and the Betti-number linear algebra.
struct DegreeBasis {
    std::vector<Monomial> monomials;         // rank -> monomial, descending
    std::unordered_map<Monomial, int, MonomialHash> rank;

    int dim() const { return static_cast<int>(monomials.size()); }
};

const DegreeBasis& degree_basis(int nvars, int degree, MonomialOrder order);

std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace strand
