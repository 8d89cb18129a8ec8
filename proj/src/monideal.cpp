#include "strand/monideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strand {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k == 0) return 1;
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        if (r > (INT64_MAX / (n - k + i)))
            throw std::overflow_error("binomial: value exceeds 64 bits");
        r = r * (n - k + i) / i;
    }
    return r;
}

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<Monomial> gens)
    : ring_(ring) {
    for (auto& g : gens)
        if (g.nvars() != ring.nvars)
            throw std::invalid_argument("MonomialIdeal: wrong variable count");
    // divisibility-minimal subset
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  return a.degree() < b.degree();
              });
    for (auto& g : gens) {
        bool redundant = false;
        for (auto& kept : gens_) {
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(),
              [this](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, ring_.order) > 0;
              });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (auto& g : gens_) d = std::max<int>(d, g.degree());
    return d;
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
    auto gens = gens_;
    gens.push_back(m);
    return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
    std::vector<Monomial> gens;
    gens.reserve(gens_.size());
    for (auto& g : gens_) gens.push_back(g / g.gcd(m));
    return MonomialIdeal(ring_, std::move(gens));
}

Ideal MonomialIdeal::to_ideal() const {
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (auto& g : gens_)
        gens.push_back(Polynomial::monomial_term(ring_, g));
    return Ideal{ring_, std::move(gens)};
}

MonomialIdeal minimal_generators(RingContext ring,
                                 std::vector<Monomial> monomials) {
    return MonomialIdeal(ring, std::move(monomials));
}

bool is_borel_fixed(const MonomialIdeal& m) {
    for (auto& t : m.min_gens()) {
        for (int j = 1; j < t.nvars(); ++j) {
            if (t.exponent(j) == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial swapped =
                    (t / Monomial::variable(t.nvars(), j)) *
                    Monomial::variable(t.nvars(), i);
                if (!m.contains(swapped)) return false;
            }
        }
    }
    return true;
}

BettiTable ek_betti(const MonomialIdeal& m) {
    if (!is_borel_fixed(m))
        throw std::invalid_argument(
            "ek_betti: input is not Borel-fixed; the formula does not apply");
    BettiTable t;
    t.nvars = m.ring().nvars;
    t.max_i = m.ring().nvars;
    t.max_j = std::max(0, m.max_gen_degree() - 1);
    t.truncated = false;
    t.set(0, 0, 1);
    for (auto& g : m.min_gens()) {
        int j = g.degree() - 1;
        int mx = g.max_index();
        for (int i = 1; i <= mx + 1; ++i) {
            auto key = std::make_pair(i, j);
            t.entries[key] += binomial(mx, i - 1);
        }
    }
    return t;
}

MonomialIdeal power_ideal(RingContext ring, int e, int ell) {
    if (e < 1 || e > ring.nvars)
        throw std::invalid_argument("power_ideal: need 1 <= e <= nvars");
    if (ell < 0) throw std::invalid_argument("power_ideal: need ell >= 0");
    std::vector<Monomial> gens;
    for (auto& m : monomials_of_degree(e, ell + 1)) {
        std::vector<std::int32_t> exps(ring.nvars, 0);
        for (int i = 0; i < e; ++i) exps[i] = m.exponent(i);
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(ring, std::move(gens));
}

std::int64_t power_ideal_betti(int e, int ell, int i) {
    if (i < 1 || i > e) return i == 0 ? 1 : 0;
    return binomial(i + ell - 1, ell) * binomial(e + ell, i + ell);
}

MonomialIdeal borel_point_section(const MonomialIdeal& m, int e) {
    const RingContext& ring = m.ring();
    if (e < 1 || e > ring.nvars - 1)
        throw std::invalid_argument("borel_point_section: need 1 <= e <= nvars-1");
    if (!is_borel_fixed(m))
        throw std::invalid_argument("borel_point_section: input is not Borel-fixed");
    RingContext small = ring.with_nvars(e + 1);
    std::vector<Monomial> gens;
    for (auto& g : m.min_gens()) {
        // kill x_{e+1}..x_N, then substitute x_e -> 1
        if (g.max_index() > e) continue;
        std::vector<std::int32_t> exps(e + 1, 0);
        for (int i = 0; i < e; ++i) exps[i] = g.exponent(i);
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(small, std::move(gens));
}

Ideal distraction(const MonomialIdeal& m, Rng& rng) {
    const RingContext& ring = m.ring();
    int n = ring.nvars;
    std::vector<int> max_exp(n, 0);
    for (auto& g : m.min_gens())
        for (int i = 0; i < n; ++i)
            max_exp[i] = std::max<int>(max_exp[i], g.exponent(i));
    // one fresh random linear form per (variable, slot), shared by all
    // generators
    std::vector<std::vector<Polynomial>> forms(n);
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < max_exp[i]; ++s) {
            std::vector<Term> ts;
            for (int v = 0; v < n; ++v) {
                std::uint32_t c = rng.field_element(ring.prime);
                if (c != 0) ts.push_back(Term{Monomial::variable(n, v), c});
            }
            forms[i].push_back(Polynomial(ring, std::move(ts)));
        }
    }
    std::vector<Polynomial> gens;
    gens.reserve(m.num_gens());
    for (auto& g : m.min_gens()) {
        Polynomial prod = Polynomial::constant(ring, 1);
        for (int i = 0; i < n; ++i)
            for (int s = 0; s < g.exponent(i); ++s) prod = prod * forms[i][s];
        gens.push_back(std::move(prod));
    }
    return Ideal{ring, std::move(gens)};
}

std::string format_betti_table(const BettiTable& t) {
    int pd = std::max(t.proj_dim(), 0);
    int reg = std::max(t.regularity(), 0);
    std::ostringstream os;
    auto cell = [](const std::string& s) {
        std::string out = s;
        while (out.size() < 6) out = " " + out;
        return out;
    };
    os << cell("") << " |";
    for (int i = 0; i <= pd; ++i) os << cell(std::to_string(i));
    os << "\n" << cell("") << " -+";
    for (int i = 0; i <= pd; ++i) os << "------";
    os << "\n";
    for (int j = 0; j <= reg; ++j) {
        os << cell(std::to_string(j)) << " |";
        for (int i = 0; i <= pd; ++i) {
            auto b = t.at(i, j);
            os << cell(b == 0 ? "-" : std::to_string(b));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace strand
