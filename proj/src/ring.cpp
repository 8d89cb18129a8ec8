#include "strand/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace strand {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingContext make_ring(std::uint32_t prime, int nvars, MonomialOrder order) {
    if (nvars < 1) throw std::invalid_argument("make_ring: nvars must be >= 1");
    if (prime < 3 || !is_prime_u32(prime))
        throw std::invalid_argument("make_ring: coefficient prime must be a prime >= 3");
    return RingContext{prime, nvars, order};
}

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
    degree_ = 0;
    for (auto e : exps_) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<std::int32_t>(nvars, 0));
}

Monomial Monomial::variable(int nvars, int i, int power) {
    std::vector<std::int32_t> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
}

int Monomial::max_index() const {
    for (int i = nvars() - 1; i >= 0; --i)
        if (exps_[i] > 0) return i;
    return -1;
}

std::int32_t Monomial::degree_on_first(int k) const {
    std::int32_t s = 0;
    for (int i = 0; i < k && i < nvars(); ++i) s += exps_[i];
    return s;
}

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars()) return false;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::int32_t> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& o) const {
    std::vector<std::int32_t> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] -= o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<std::int32_t> e(exps_);
    for (int i = 0; i < nvars(); ++i)
        if (o.exps_[i] > e[i]) e[i] = o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& o) const {
    std::vector<std::int32_t> e(exps_);
    for (int i = 0; i < nvars(); ++i)
        if (o.exps_[i] < e[i]) e[i] = o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("mono_cmp: dimension mismatch");
    const auto& ae = a.exponents();
    const auto& be = b.exponents();
    if (order == MonomialOrder::Lex) {
        for (int i = 0; i < a.nvars(); ++i) {
            if (ae[i] != be[i]) return ae[i] > be[i] ? 1 : -1;
        }
        return 0;
    }
    // DegRevLex
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (ae[i] != be[i]) return ae[i] < be[i] ? 1 : -1;
    }
    return 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<std::int32_t> cur(nvars, 0);
    // recursive enumeration, lexicographic in the exponent vectors
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.emplace_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    if (degree < 0) return out;
    rec(rec, 0, degree);
    return out;
}

namespace {
struct BasisKey {
    int nvars;
    int degree;
    MonomialOrder order;
    bool operator<(const BasisKey& o) const {
        if (nvars != o.nvars) return nvars < o.nvars;
        if (degree != o.degree) return degree < o.degree;
        return order < o.order;
    }
};
}  // namespace

const DegreeBasis& degree_basis(int nvars, int degree, MonomialOrder order) {
    static std::map<BasisKey, DegreeBasis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = BasisKey{nvars, degree, order};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    DegreeBasis basis;
    basis.monomials = monomials_of_degree(nvars, degree);
    std::sort(basis.monomials.begin(), basis.monomials.end(),
              [order](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, order) > 0;
              });
    basis.rank.reserve(basis.monomials.size() * 2);
    for (int r = 0; r < static_cast<int>(basis.monomials.size()); ++r)
        basis.rank.emplace(basis.monomials[r], r);
    return cache.emplace(key, std::move(basis)).first->second;
}

}  // namespace strand
