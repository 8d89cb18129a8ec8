#include "strand/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strand {

namespace {

using Poly1 = std::vector<std::int64_t>;  // univariate, index = degree

Poly1 add(const Poly1& a, const Poly1& b) {
    Poly1 out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly1 shift(const Poly1& a, int k) {
    if (a.empty()) return a;
    Poly1 out(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}

// multiply by (1 - t^d)
Poly1 times_one_minus_power(const Poly1& a, int d) {
    Poly1 out(a.size() + d, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
        out[i + d] -= a[i];
    }
    return out;
}

void trim(Poly1& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t eval_at_one(const Poly1& a) {
    std::int64_t s = 0;
    for (auto c : a) s += c;
    return s;
}

// exact division by (1 - t); throws if not divisible
Poly1 divide_one_minus_t(const Poly1& a) {
    Poly1 q(a.size(), 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        carry += a[i];
        q[i] = carry;
    }
    if (carry != 0)
        throw std::logic_error("hilbert: numerator not divisible by (1-t)");
    if (!q.empty()) q.pop_back();
    trim(q);
    return q;
}

Poly1 numerator_recursive(const MonomialIdeal& m) {
    const auto& gens = m.min_gens();
    if (gens.empty()) return Poly1{1};
    if (m.is_unit()) return Poly1{};
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) {
                coprime = false;
                break;
            }
    if (coprime) {
        Poly1 out{1};
        for (auto& g : gens) out = times_one_minus_power(out, g.degree());
        return out;
    }
    // pivot: most frequent variable in the generator supports
    int n = m.ring().nvars;
    std::vector<int> freq(n, 0);
    for (auto& g : gens)
        for (int v = 0; v < n; ++v)
            if (g.exponent(v) > 0) ++freq[v];
    int v = static_cast<int>(std::max_element(freq.begin(), freq.end()) -
                             freq.begin());
    Monomial pivot = Monomial::variable(n, v);
    Poly1 with = numerator_recursive(m.plus(pivot));
    Poly1 colon = numerator_recursive(m.colon(pivot));
    return add(with, shift(colon, 1));
}

}  // namespace

std::int64_t hilbert_function(const MonomialIdeal& m, int d) {
    if (d < 0) return 0;
    const auto& basis =
        degree_basis(m.ring().nvars, d, m.ring().order).monomials;
    std::int64_t count = 0;
    for (auto& mono : basis)
        if (!m.contains(mono)) ++count;
    return count;
}

std::int64_t hilbert_function(const GroebnerBasis& gb, int d) {
    return hilbert_function(initial_ideal(gb), d);
}

std::int64_t hilbert_function(const Ideal& ideal, int d) {
    return hilbert_function(buchberger(ideal, ideal.ring.order), d);
}

std::vector<std::int64_t> hilbert_series_raw_numerator(const MonomialIdeal& m) {
    Poly1 n = numerator_recursive(m);
    trim(n);
    return n;
}

std::vector<std::int64_t> hilbert_series_numerator(const MonomialIdeal& m) {
    return hilbert_data(m).h_vector;
}

HilbertData hilbert_data(const MonomialIdeal& m) {
    Poly1 num = hilbert_series_raw_numerator(m);
    HilbertData out;
    if (num.empty()) {  // unit ideal
        out.n = -1;
        out.e = m.ring().nvars;
        out.degree = 0;
        return out;
    }
    int count = 0;
    while (eval_at_one(num) == 0) {
        num = divide_one_minus_t(num);
        ++count;
    }
    int dim = m.ring().nvars - count;  // Krull dimension of R/M
    out.n = dim - 1;
    out.e = count;
    out.h_vector = num;
    out.degree = eval_at_one(num);
    return out;
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
    return hilbert_data(initial_ideal(gb));
}

HilbertData hilbert_data(const Ideal& ideal) {
    return hilbert_data(buchberger(ideal, ideal.ring.order));
}

DimensionDegree dimension_degree(const Ideal& ideal) {
    HilbertData h = hilbert_data(ideal);
    return DimensionDegree{h.n, h.e, h.degree};
}

DimensionDegree dimension_degree(const MonomialIdeal& m) {
    HilbertData h = hilbert_data(m);
    return DimensionDegree{h.n, h.e, h.degree};
}

std::int64_t ideal_piece_dimension(const GroebnerBasis& gb, int d) {
    if (d < 0) return 0;
    std::int64_t full = binomial(gb.ring.nvars - 1 + d, d);
    return full - hilbert_function(gb, d);
}

HVectorCheck h_nonnegativity_check(const GroebnerBasis& gb, int ell) {
    if (ell < 1)
        throw std::invalid_argument("h_nonnegativity_check: need ell >= 1");
    HilbertData data = hilbert_data(gb);
    HVectorCheck out;
    out.ell = ell;
    out.e = data.e;
    auto h_at = [&](int j) -> std::int64_t {
        return j < static_cast<int>(data.h_vector.size()) ? data.h_vector[j]
                                                          : 0;
    };
    out.formula_ok = true;
    std::ostringstream detail;
    for (int j = 0; j <= ell - 1; ++j) {
        std::int64_t expect = binomial(data.e + j - 1, j);
        if (h_at(j) != expect) {
            out.formula_ok = false;
            detail << "h_" << j << "=" << h_at(j) << " expected " << expect
                   << "; ";
        }
    }
    out.dim_I_ell = ideal_piece_dimension(gb, ell);
    out.h_ell = h_at(ell);
    std::int64_t expect_ell = binomial(data.e + ell - 1, ell) - out.dim_I_ell;
    out.h_ell_matches = (out.h_ell == expect_ell);
    out.h_ell_nonnegative = (out.h_ell >= 0);
    if (!out.h_ell_matches)
        detail << "h_" << ell << "=" << out.h_ell << " expected " << expect_ell
               << "; ";
    if (!out.h_ell_nonnegative) detail << "h_" << ell << " negative; ";
    out.detail = detail.str();
    return out;
}

}  // namespace strand
