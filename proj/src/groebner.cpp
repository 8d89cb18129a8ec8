#include "strand/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace strand {

namespace {

// ------------------------------------------------------------------
// packed exponent keys: for <= 8 variables and exponents < 256 a monomial
// fits one uint64 byte-per-variable, and monomial products become integer
// additions. The dense strand reducer lives on this.
// ------------------------------------------------------------------

bool packable(int nvars, int degree) { return nvars <= 8 && degree < 250; }

std::uint64_t pack_exps(const Monomial& m) {
    std::uint64_t k = 0;
    for (int i = 0; i < m.nvars(); ++i)
        k |= static_cast<std::uint64_t>(m.exponent(i)) << (8 * i);
    return k;
}

// rank lookup table for one (nvars, degree, order) strand
struct StrandIndex {
    const DegreeBasis* basis;
    std::unordered_map<std::uint64_t, int> rank;

    explicit StrandIndex(const DegreeBasis& b) : basis(&b) {
        rank.reserve(b.monomials.size() * 2);
        for (int r = 0; r < b.dim(); ++r)
            rank.emplace(pack_exps(b.monomials[r]), r);
    }
};

const StrandIndex& strand_index(int nvars, int degree, MonomialOrder order) {
    static std::map<std::tuple<int, int, int>, StrandIndex> cache;
    auto key = std::make_tuple(nvars, degree, static_cast<int>(order));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, StrandIndex(degree_basis(nvars, degree, order)))
        .first->second;
}

struct MonoLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, order) > 0;  // descending: largest first
    }
};

// map-based normal form; handles anything, used off the homogeneous fast path
Polynomial reduce_general(const Polynomial& f,
                          const std::vector<Polynomial>& basis) {
    const RingContext& ring = f.ring();
    Gf gf = ring.field();
    std::map<Monomial, std::uint32_t, MonoLess> work(MonoLess{ring.order});
    for (auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
    std::vector<Term> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        std::uint32_t c = it->second;
        work.erase(it);
        if (c == 0) continue;
        const Polynomial* div = nullptr;
        for (auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(m)) {
                div = &g;
                break;
            }
        }
        if (div == nullptr) {
            remainder.push_back(Term{std::move(m), c});
            continue;
        }
        Monomial q = m / div->leading_monomial();
        std::uint32_t factor = gf.div(c, div->leading_coeff());
        auto& terms = div->terms();
        for (std::size_t k = 1; k < terms.size(); ++k) {
            Monomial mm = terms[k].monomial * q;
            std::uint32_t delta = gf.mul(factor, terms[k].coeff);
            auto [jt, inserted] = work.emplace(std::move(mm), gf.neg(delta));
            if (!inserted) jt->second = gf.sub(jt->second, delta);
        }
    }
    Polynomial out(ring);
    out = Polynomial(ring, std::move(remainder));
    return out;
}

// dense normal form over one degree strand; requires homogeneous f and a
// homogeneous basis, both packable
Polynomial reduce_homogeneous_dense(const Polynomial& f,
                                    const std::vector<Polynomial>& basis) {
    const RingContext& ring = f.ring();
    Gf gf = ring.field();
    int d = f.degree();
    const StrandIndex& idx = strand_index(ring.nvars, d, ring.order);
    const std::uint64_t p64 = ring.prime;
    std::vector<std::uint32_t> coef(idx.basis->dim(), 0);
    for (auto& t : f.terms()) coef[idx.rank.at(pack_exps(t.monomial))] = t.coeff;

    std::vector<Term> remainder;
    int dim = idx.basis->dim();
    for (int r = 0; r < dim; ++r) {
        std::uint32_t c = coef[r];
        if (c == 0) continue;
        const Monomial& m = idx.basis->monomials[r];
        const Polynomial* div = nullptr;
        for (auto& g : basis) {
            if (!g.is_zero() && g.degree() <= d &&
                g.leading_monomial().divides(m)) {
                div = &g;
                break;
            }
        }
        if (div == nullptr) {
            remainder.push_back(Term{m, c});
            continue;
        }
        std::uint64_t qkey = pack_exps(m) - pack_exps(div->leading_monomial());
        std::uint64_t factor = gf.div(c, div->leading_coeff());
        for (auto& t : div->terms()) {
            int rr = idx.rank.at(qkey + pack_exps(t.monomial));
            std::uint64_t delta = (factor * t.coeff) % p64;
            std::uint64_t cur = coef[rr];
            coef[rr] = static_cast<std::uint32_t>((cur + p64 - delta) % p64);
        }
    }
    Polynomial out(ring);
    out = Polynomial(ring, std::move(remainder));
    return out;
}

constexpr int kDenseDimLimit = 400000;

bool dense_eligible(const Polynomial& f, const std::vector<Polynomial>& basis) {
    const RingContext& ring = f.ring();
    int d = f.degree();
    if (!f.is_homogeneous() || !packable(ring.nvars, d)) return false;
    if (degree_basis(ring.nvars, d, ring.order).dim() > kDenseDimLimit)
        return false;
    for (auto& g : basis)
        if (!g.is_homogeneous() || g.degree() > 250) return false;
    return true;
}

Polynomial spair(const Polynomial& f, const Polynomial& g,
                 const Monomial& lcm) {
    Gf gf = f.ring().field();
    Monomial uf = lcm / f.leading_monomial();
    Monomial ug = lcm / g.leading_monomial();
    Polynomial a = f.times_monomial(uf, gf.inv(f.leading_coeff()));
    Polynomial b = g.times_monomial(ug, gf.inv(g.leading_coeff()));
    return a - b;
}

struct PendingPair {
    int degree;
    Monomial lcm;
    int i, j;
};

struct PendingLess {
    MonomialOrder order;
    bool operator()(const PendingPair& a, const PendingPair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = mono_cmp(a.lcm, b.lcm, order);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class BuchbergerEngine {
  public:
    BuchbergerEngine(RingContext ring) : ring_(ring), queue_(PendingLess{ring.order}) {}

    void seed(const std::vector<Polynomial>& gens) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            Polynomial r = normal_form(g);
            if (!r.is_zero()) add_element(r.monic());
        }
    }

    void run() {
        while (!queue_.empty()) {
            PendingPair pr = *queue_.begin();
            queue_.erase(queue_.begin());
            pending_.erase({pr.i, pr.j});
            const Polynomial& fi = basis_[pr.i];
            const Polynomial& fj = basis_[pr.j];
            if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;
            if (chain_criterion(pr)) continue;
            Polynomial r = normal_form(spair(fi, fj, pr.lcm));
            if (!r.is_zero()) add_element(r.monic());
        }
    }

    // minimal + inter-reduced basis from the current state
    std::vector<Polynomial> reduced_basis() {
        std::vector<int> keep;
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            bool redundant = false;
            for (int j = 0; j < static_cast<int>(basis_.size()); ++j) {
                if (i == j) continue;
                const Monomial& lj = basis_[j].leading_monomial();
                const Monomial& li = basis_[i].leading_monomial();
                if (lj.divides(li)) {
                    // on equal leading monomials keep the earlier element
                    if (lj == li && j > i) continue;
                    redundant = true;
                    break;
                }
            }
            if (!redundant) keep.push_back(i);
        }
        std::vector<Polynomial> mins;
        mins.reserve(keep.size());
        for (int i : keep) mins.push_back(basis_[i]);
        for (std::size_t i = 0; i < mins.size(); ++i) {
            Polynomial others_nf = run_reduce(mins[i], mins, static_cast<int>(i));
            mins[i] = others_nf.monic();
        }
        std::sort(mins.begin(), mins.end(),
                  [this](const Polynomial& a, const Polynomial& b) {
                      return mono_cmp(a.leading_monomial(), b.leading_monomial(),
                                      ring_.order) > 0;
                  });
        return mins;
    }

    // Buchberger criterion on a candidate basis; appends any nonzero
    // remainder and reports failure so the caller can re-run completion.
    bool verify_or_extend(const std::vector<Polynomial>& candidate) {
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            for (std::size_t j = i + 1; j < candidate.size(); ++j) {
                const Monomial& li = candidate[i].leading_monomial();
                const Monomial& lj = candidate[j].leading_monomial();
                if (li.coprime(lj)) continue;
                Polynomial s = spair(candidate[i], candidate[j], li.lcm(lj));
                Polynomial r = run_reduce(s, candidate, -1);
                if (!r.is_zero()) {
                    add_element(r.monic());
                    return false;
                }
            }
        }
        return true;
    }

    const std::vector<Polynomial>& basis() const { return basis_; }

  private:
    Polynomial normal_form(const Polynomial& f) {
        return run_reduce(f, basis_, -1);
    }

    Polynomial run_reduce(const Polynomial& f,
                          const std::vector<Polynomial>& basis, int skip) {
        std::vector<Polynomial> view;
        const std::vector<Polynomial>* use = &basis;
        if (skip >= 0) {
            view.reserve(basis.size() - 1);
            for (int k = 0; k < static_cast<int>(basis.size()); ++k)
                if (k != skip) view.push_back(basis[k]);
            use = &view;
        }
        if (f.is_zero() || use->empty()) return f;
        if (dense_eligible(f, *use)) return reduce_homogeneous_dense(f, *use);
        return reduce_general(f, *use);
    }

    bool chain_criterion(const PendingPair& pr) const {
        for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis_[k].leading_monomial().divides(pr.lcm)) continue;
            if (pending_.count(key(pr.i, k)) || pending_.count(key(pr.j, k)))
                continue;
            return true;
        }
        return false;
    }

    static std::pair<int, int> key(int a, int b) {
        return {std::min(a, b), std::max(a, b)};
    }

    void add_element(Polynomial g) {
        int idx = static_cast<int>(basis_.size());
        basis_.push_back(std::move(g));
        for (int i = 0; i < idx; ++i) {
            Monomial l = basis_[i].leading_monomial().lcm(
                basis_[idx].leading_monomial());
            queue_.insert(PendingPair{l.degree(), l, i, idx});
            pending_.insert(key(i, idx));
        }
    }

    RingContext ring_;
    std::vector<Polynomial> basis_;
    std::set<PendingPair, PendingLess> queue_;
    std::set<std::pair<int, int>> pending_;
};

GroebnerBasis buchberger_impl(const Ideal& ideal, MonomialOrder order) {
    RingContext ring = ideal.ring.with_order(order);
    std::vector<Polynomial> gens;
    gens.reserve(ideal.gens.size());
    for (auto& g : ideal.gens) {
        check_same_ring(ideal.ring, g.ring(), "buchberger");
        if (!g.is_zero()) gens.push_back(g.in_ring(ring));
    }
    BuchbergerEngine engine(ring);
    engine.seed(gens);
    engine.run();
    std::vector<Polynomial> result;
    for (int round = 0;; ++round) {
        result = engine.reduced_basis();
        if (engine.verify_or_extend(result)) break;
        if (round > 64)
            throw std::logic_error("buchberger: completion failed to stabilize");
        engine.run();
    }
    return GroebnerBasis{ring, std::move(result), true};
}

}  // namespace

bool all_homogeneous(const std::vector<Polynomial>& gens) {
    for (auto& g : gens)
        if (!g.is_homogeneous()) return false;
    return true;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<Polynomial> usable;
    usable.reserve(basis.size());
    for (auto& g : basis) {
        check_same_ring(f.ring(), g.ring(), "reduce");
        if (!g.is_zero()) usable.push_back(g);
    }
    if (f.is_zero() || usable.empty()) return f;
    if (dense_eligible(f, usable)) return reduce_homogeneous_dense(f, usable);
    return reduce_general(f, usable);
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis) {
    return reduce(f.in_ring(basis.ring), basis.elements);
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order) {
    for (auto& g : ideal.gens) {
        if (!g.is_homogeneous())
            throw std::invalid_argument(
                "buchberger: non-homogeneous generator: " + g.str());
    }
    return buchberger_impl(ideal, order);
}

GroebnerBasis buchberger_any(const Ideal& ideal, MonomialOrder order) {
    return buchberger_impl(ideal, order);
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
    std::vector<Monomial> lts;
    lts.reserve(basis.elements.size());
    for (auto& g : basis.elements)
        if (!g.is_zero()) lts.push_back(g.leading_monomial());
    return MonomialIdeal(basis.ring, std::move(lts));
}

Ideal eliminate(const Ideal& ideal, int keep_from) {
    if (keep_from < 0 || keep_from >= ideal.ring.nvars)
        throw std::invalid_argument("eliminate: keep_from out of range");
    if (keep_from == 0) return ideal;
    GroebnerBasis lex = buchberger_any(ideal, MonomialOrder::Lex);
    RingContext sub = ideal.ring.with_nvars(ideal.ring.nvars - keep_from);
    std::vector<Polynomial> out;
    for (auto& g : lex.elements) {
        bool free_of_dropped = true;
        for (auto& t : g.terms()) {
            if (t.monomial.degree_on_first(keep_from) > 0) {
                free_of_dropped = false;
                break;
            }
        }
        if (!free_of_dropped) continue;
        std::vector<Term> ts;
        ts.reserve(g.terms().size());
        for (auto& t : g.terms()) {
            std::vector<std::int32_t> exps(sub.nvars);
            for (int i = 0; i < sub.nvars; ++i)
                exps[i] = t.monomial.exponent(keep_from + i);
            ts.push_back(Term{Monomial(std::move(exps)), t.coeff});
        }
        out.push_back(Polynomial(sub, std::move(ts)));
    }
    return Ideal{sub, std::move(out)};
}

Ideal saturate_by_last_variable(const Ideal& ideal) {
    if (ideal.ring.order != MonomialOrder::DegRevLex)
        throw std::invalid_argument(
            "saturate_by_last_variable: requires DegRevLex");
    int last = ideal.ring.nvars - 1;
    Ideal current = ideal;
    for (;;) {
        GroebnerBasis gb = buchberger_any(current, MonomialOrder::DegRevLex);
        bool changed = false;
        std::vector<Polynomial> next;
        next.reserve(gb.elements.size());
        for (auto& g : gb.elements) {
            int shared = INT32_MAX;
            for (auto& t : g.terms())
                shared = std::min<int>(shared, t.monomial.exponent(last));
            if (g.is_zero() || shared == 0 || shared == INT32_MAX) {
                next.push_back(g);
                continue;
            }
            changed = true;
            Monomial div = Monomial::variable(ideal.ring.nvars, last, shared);
            std::vector<Term> ts;
            for (auto& t : g.terms()) ts.push_back(Term{t.monomial / div, t.coeff});
            next.push_back(Polynomial(gb.ring, std::move(ts)));
        }
        current = Ideal{gb.ring, std::move(next)};
        if (!changed) return current;
    }
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
    check_same_ring(ideal.ring, f.ring(), "saturate");
    if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
    if (!all_homogeneous(ideal.gens) || !f.is_homogeneous())
        throw std::invalid_argument("saturate: homogeneous input required");
    if (f.degree() == 0) {
        GroebnerBasis gb = buchberger(ideal, ideal.ring.order);
        return Ideal{gb.ring, gb.elements};
    }
    // fast path: f is a scalar multiple of the last variable under DegRevLex
    if (ideal.ring.order == MonomialOrder::DegRevLex && f.num_terms() == 1 &&
        f.leading_monomial() ==
            Monomial::variable(ideal.ring.nvars, ideal.ring.nvars - 1)) {
        return saturate_by_last_variable(ideal);
    }

    // Rabinowitsch: auxiliary ring [w, x0..xN] under Lex, relation w*f = 1
    RingContext aux = make_ring(ideal.ring.prime, ideal.ring.nvars + 1,
                                MonomialOrder::Lex);
    auto shift = [&](const Polynomial& g) {
        std::vector<Term> ts;
        ts.reserve(g.terms().size());
        for (auto& t : g.terms()) {
            std::vector<std::int32_t> exps(aux.nvars, 0);
            for (int i = 0; i < ideal.ring.nvars; ++i)
                exps[i + 1] = t.monomial.exponent(i);
            ts.push_back(Term{Monomial(std::move(exps)), t.coeff});
        }
        return Polynomial(aux, std::move(ts));
    };
    std::vector<Polynomial> gens;
    for (auto& g : ideal.gens)
        if (!g.is_zero()) gens.push_back(shift(g));
    Polynomial w = Polynomial::variable(aux, 0);
    gens.push_back(w * shift(f) - Polynomial::constant(aux, 1));
    Ideal elim = eliminate(Ideal{aux, std::move(gens)}, 1);

    // split the (possibly inhomogeneous) elimination output back into
    // homogeneous components; the saturated ideal is homogeneous, so every
    // component belongs to it
    RingContext back = ideal.ring;
    std::vector<Polynomial> comps;
    for (auto& g : elim.gens) {
        std::map<int, std::vector<Term>> by_degree;
        for (auto& t : g.terms())
            by_degree[t.monomial.degree()].push_back(t);
        for (auto& [d, ts] : by_degree)
            comps.push_back(Polynomial(back, std::move(ts)));
    }
    GroebnerBasis canon = buchberger(Ideal{back, std::move(comps)}, back.order);
    return Ideal{canon.ring, canon.elements};
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) {
    return reduce(f, basis).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring, b.ring, "ideal_equal");
    GroebnerBasis ga = buchberger_any(a, a.ring.order);
    GroebnerBasis gb = buchberger_any(b, b.ring.order);
    for (auto& g : b.gens)
        if (!ideal_contains(ga, g.in_ring(ga.ring))) return false;
    for (auto& g : a.gens)
        if (!ideal_contains(gb, g.in_ring(gb.ring))) return false;
    return true;
}

}  // namespace strand
