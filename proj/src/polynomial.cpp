#include "strand/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace strand {

void check_same_ring(const RingContext& a, const RingContext& b,
                     const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) +
                                    ": ring context mismatch");
}

Polynomial::Polynomial(RingContext ring, std::vector<Term> terms)
    : ring_(ring) {
    Gf gf = ring.field();
    std::map<Monomial, std::uint32_t,
             std::function<bool(const Monomial&, const Monomial&)>>
        acc([this](const Monomial& a, const Monomial& b) {
            return mono_cmp(a, b, ring_.order) > 0;
        });
    for (auto& t : terms) {
        if (t.monomial.nvars() != ring.nvars)
            throw std::invalid_argument("Polynomial: wrong number of variables");
        std::uint32_t c = t.coeff % ring.prime;
        if (c == 0) continue;
        auto [it, inserted] = acc.emplace(t.monomial, c);
        if (!inserted) it->second = gf.add(it->second, c);
    }
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::constant(RingContext ring, std::int64_t c) {
    std::uint32_t cc = ring.field().from_int(c);
    Polynomial f(ring);
    if (cc != 0) f.terms_.push_back(Term{Monomial::one(ring.nvars), cc});
    return f;
}

Polynomial Polynomial::monomial_term(RingContext ring, Monomial m,
                                     std::int64_t c) {
    std::uint32_t cc = ring.field().from_int(c);
    Polynomial f(ring);
    if (cc != 0) f.terms_.push_back(Term{std::move(m), cc});
    return f;
}

Polynomial Polynomial::variable(RingContext ring, int i) {
    return monomial_term(ring, Monomial::variable(ring.nvars, i), 1);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::logic_error("leading_term of the zero polynomial");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const {
    return leading_term().monomial;
}

std::uint32_t Polynomial::leading_coeff() const {
    return leading_term().coeff;
}

std::int32_t Polynomial::degree() const {
    std::int32_t d = -1;
    for (auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.front().monomial.degree();
    for (auto& t : terms_)
        if (t.monomial.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "poly add");
    Gf gf = ring_.field();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i >= terms_.size())
            c = -1;
        else if (j >= o.terms_.size())
            c = 1;
        else
            c = mono_cmp(terms_[i].monomial, o.terms_[j].monomial, ring_.order);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = gf.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) out.terms_.push_back(Term{terms_[i].monomial, s});
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Gf gf = ring_.field();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (auto& t : terms_) out.terms_.push_back(Term{t.monomial, gf.neg(t.coeff)});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "poly mul");
    Gf gf = ring_.field();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_) {
        for (auto& b : o.terms_) {
            Monomial m = a.monomial * b.monomial;
            std::uint32_t c = gf.mul(a.coeff, b.coeff);
            auto [it, inserted] = acc.emplace(std::move(m), c);
            if (!inserted) it->second = gf.add(it->second, c);
        }
    }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) ts.push_back(Term{m, c});
    std::sort(ts.begin(), ts.end(), [this](const Term& x, const Term& y) {
        return mono_cmp(x.monomial, y.monomial, ring_.order) > 0;
    });
    Polynomial out(ring_);
    out.terms_ = std::move(ts);
    return out;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    Gf gf = ring_.field();
    c %= ring_.prime;
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (auto& t : terms_)
        out.terms_.push_back(Term{t.monomial, gf.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m,
                                      std::uint32_t c) const {
    Gf gf = ring_.field();
    c %= ring_.prime;
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (auto& t : terms_)
        out.terms_.push_back(Term{t.monomial * m, gf.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_.field().inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff ||
            terms_[i].monomial != o.terms_[i].monomial)
            return false;
    return true;
}

Polynomial Polynomial::in_ring(RingContext other) const {
    if (other.prime != ring_.prime || other.nvars != ring_.nvars)
        throw std::invalid_argument("in_ring: only the order may differ");
    Polynomial out(other);
    out.terms_ = terms_;
    std::sort(out.terms_.begin(), out.terms_.end(),
              [&other](const Term& x, const Term& y) {
                  return mono_cmp(x.monomial, y.monomial, other.order) > 0;
              });
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += " + ";
        if (t.monomial.is_one()) {
            s += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            s += t.monomial.str();
        } else {
            s += std::to_string(t.coeff) + "*" + t.monomial.str();
        }
    }
    return s;
}

Polynomial apply_linear_change(
    const Polynomial& f, const std::vector<std::vector<std::uint32_t>>& M) {
    const RingContext& ring = f.ring();
    int n = ring.nvars;
    if (static_cast<int>(M.size()) != n)
        throw std::invalid_argument("apply_linear_change: matrix size mismatch");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(M[i].size()) != n)
            throw std::invalid_argument("apply_linear_change: matrix not square");
        std::vector<Term> ts;
        for (int j = 0; j < n; ++j) {
            std::uint32_t c = M[i][j] % ring.prime;
            if (c != 0) ts.push_back(Term{Monomial::variable(n, j), c});
        }
        images.push_back(Polynomial(ring, std::move(ts)));
    }
    return substitute(f, ring, images);
}

Polynomial substitute(const Polynomial& f, RingContext target,
                      const std::vector<Polynomial>& images) {
    int n = f.ring().nvars;
    if (static_cast<int>(images.size()) != n)
        throw std::invalid_argument("substitute: one image per variable required");
    // cache powers of each image as needed
    std::vector<std::vector<Polynomial>> powers(n);
    for (int i = 0; i < n; ++i)
        powers[i].push_back(Polynomial::constant(target, 1));
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& ps = powers[i];
        while (static_cast<int>(ps.size()) <= e)
            ps.push_back(ps.back() * images[i]);
        return ps[e];
    };
    Polynomial out = Polynomial::zero(target);
    for (auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, 1).scaled(t.coeff);
        for (int i = 0; i < n; ++i) {
            int e = t.monomial.exponent(i);
            if (e > 0) prod = prod * power(i, e);
        }
        out = out + prod;
    }
    return out;
}

Ideal make_ideal(RingContext ring, std::vector<Polynomial> gens) {
    for (auto& g : gens) check_same_ring(ring, g.ring(), "make_ideal");
    return Ideal{ring, std::move(gens)};
}

}  // namespace strand
