#include "strand/betti.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "strand/matrix.hpp"
#include "strand/nd.hpp"

namespace strand {

namespace {

// standard monomials of each degree, the (R/I)_d bases
struct QuotientBasis {
    std::vector<std::vector<Monomial>> monos;  // per degree
    std::vector<std::unordered_map<Monomial, int, MonomialHash>> index;

    int dim(int d) const { return static_cast<int>(monos[d].size()); }
};

QuotientBasis quotient_basis(const MonomialIdeal& lead, int max_degree) {
    QuotientBasis qb;
    qb.monos.resize(max_degree + 1);
    qb.index.resize(max_degree + 1);
    const RingContext& ring = lead.ring();
    for (int d = 0; d <= max_degree; ++d) {
        for (auto& m : degree_basis(ring.nvars, d, ring.order).monomials)
            if (!lead.contains(m)) qb.monos[d].push_back(m);
        auto& idx = qb.index[d];
        idx.reserve(qb.monos[d].size() * 2);
        for (int r = 0; r < qb.dim(d); ++r) idx.emplace(qb.monos[d][r], r);
    }
    return qb;
}

using SparseCol = std::vector<std::pair<int, std::uint32_t>>;

// multiplication-by-x_v maps (R/I)_d -> (R/I)_{d+1} over the standard bases
struct MultiplicationTables {
    // mul[d][v][col] = sparse coordinates of NF(x_v * m_col)
    std::vector<std::vector<std::vector<SparseCol>>> mul;
};

MultiplicationTables multiplication_tables(const GroebnerBasis& gb,
                                           const MonomialIdeal& lead,
                                           const QuotientBasis& qb,
                                           int max_degree) {
    const RingContext& ring = gb.ring;
    MultiplicationTables mt;
    mt.mul.resize(max_degree);  // maps from degree d to d+1, d < max_degree
    bool monomial_ideal = true;
    for (auto& g : gb.elements)
        if (g.num_terms() != 1) monomial_ideal = false;
    for (int d = 0; d + 1 <= max_degree; ++d) {
        mt.mul[d].resize(ring.nvars);
        for (int v = 0; v < ring.nvars; ++v) {
            auto& cols = mt.mul[d][v];
            cols.resize(qb.dim(d));
            for (int c = 0; c < qb.dim(d); ++c) {
                Monomial prod =
                    qb.monos[d][c] * Monomial::variable(ring.nvars, v);
                if (!lead.contains(prod)) {
                    cols[c].push_back({qb.index[d + 1].at(prod), 1u});
                    continue;
                }
                if (monomial_ideal) continue;  // product is zero in R/I
                Polynomial nf = reduce(
                    Polynomial::monomial_term(ring, prod), gb.elements);
                for (auto& t : nf.terms())
                    cols[c].push_back(
                        {qb.index[d + 1].at(t.monomial), t.coeff});
            }
        }
    }
    return mt;
}

// i-subsets of the variables in lexicographic order plus index lookup
struct SubsetTable {
    std::vector<std::vector<int>> sets;
    std::unordered_map<std::uint32_t, int> index;  // bitmask -> position
};

SubsetTable subsets(int n, int k) {
    SubsetTable st;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            std::uint32_t mask = 0;
            for (int v : cur) mask |= (1u << v);
            st.index.emplace(mask, static_cast<int>(st.sets.size()));
            st.sets.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return st;
}

}  // namespace

BettiTable koszul_betti(const GroebnerBasis& gb, int max_i, int max_j,
                        int reg_hint) {
    const RingContext& ring = gb.ring;
    int n = ring.nvars;
    if (max_i < 1 || max_j < 0)
        throw std::invalid_argument("koszul_betti: bounds too small");
    max_i = std::min(max_i, n);
    MonomialIdeal lead = initial_ideal(gb);
    if (lead.is_unit())
        throw std::invalid_argument("koszul_betti: unit ideal has no quotient");

    int max_total = max_j + 1;  // largest quotient degree any strand touches
    QuotientBasis qb = quotient_basis(lead, max_total);
    MultiplicationTables mt = multiplication_tables(gb, lead, qb, max_total);

    std::vector<SubsetTable> subs;
    for (int i = 0; i <= std::min(max_i + 1, n); ++i) subs.push_back(subsets(n, i));

    Gf gf = ring.field();
    // rank of the strand map Lambda^i (x) (R/I)_{t-i} -> Lambda^{i-1} (x) (R/I)_{t-i+1}
    auto strand_rank = [&](int i, int t) -> int {
        if (i < 1 || i > n) return 0;
        int d = t - i;  // source quotient degree
        if (d < 0 || d + 1 > max_total) return 0;
        const SubsetTable& src = subs[i];
        const SubsetTable& dst = subs[i - 1];
        int qdim = qb.dim(d);
        int tdim = qb.dim(d + 1);
        SparseMatrix m;
        m.p = ring.prime;
        m.cols = static_cast<int>(src.sets.size()) * qdim;
        m.rows = static_cast<int>(dst.sets.size()) * tdim;
        if (m.cols == 0 || m.rows == 0) return 0;
        // build row-major sparse entries by transposing column contributions
        std::vector<std::vector<std::pair<int, std::uint32_t>>> cols(m.cols);
        for (int s = 0; s < static_cast<int>(src.sets.size()); ++s) {
            const auto& set = src.sets[s];
            std::uint32_t mask = 0;
            for (int v : set) mask |= (1u << v);
            for (int k = 0; k < i; ++k) {
                int v = set[k];
                int dsub = dst.index.at(mask & ~(1u << v));
                bool negative = (k % 2) == 1;
                for (int c = 0; c < qdim; ++c) {
                    for (auto& [r, val] : mt.mul[d][v][c]) {
                        std::uint32_t coeff = negative ? gf.neg(val) : val;
                        cols[s * qdim + c].push_back(
                            {dsub * tdim + r, coeff});
                    }
                }
            }
        }
        m.entries.resize(m.rows);
        for (int c = 0; c < m.cols; ++c)
            for (auto& [r, val] : cols[c]) m.entries[r].push_back({c, val});
        for (auto& row : m.entries)
            std::sort(row.begin(), row.end());
        // accumulate duplicate columns within a row (cannot happen here:
        // each (v, c) lands in distinct destination blocks), kept simple
        return fp_rank(m);
    };

    std::map<std::pair<int, int>, int> rank_cache;
    auto rank_at = [&](int i, int t) {
        auto key = std::make_pair(i, t);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        int r = strand_rank(i, t);
        rank_cache.emplace(key, r);
        return r;
    };

    BettiTable table;
    table.nvars = n;
    table.max_i = max_i;
    table.max_j = max_j;
    for (int i = 0; i <= max_i; ++i) {
        for (int j = 0; j <= max_j; ++j) {
            int t = i + j;
            std::int64_t cols_n, kernel;
            if (i == 0) {
                cols_n = qb.dim(t);
                kernel = cols_n;  // map to zero
            } else {
                if (t - i > max_total || t - i < 0) continue;
                cols_n = static_cast<std::int64_t>(subs[i].sets.size()) *
                         qb.dim(t - i);
                kernel = cols_n - rank_at(i, t);
            }
            std::int64_t beta = kernel - rank_at(i + 1, t);
            if (beta < 0)
                throw std::logic_error("koszul_betti: negative strand count");
            table.set(i, j, beta);
        }
    }
    bool rows_certified = (reg_hint >= 0 && max_j >= reg_hint);
    bool boundary_row_nonzero = false, boundary_col_nonzero = false;
    for (int i = 0; i <= max_i; ++i)
        if (table.at(i, max_j) != 0) boundary_row_nonzero = true;
    for (int j = 0; j <= max_j; ++j)
        if (table.at(max_i, j) != 0) boundary_col_nonzero = true;
    table.truncated = (!rows_certified && boundary_row_nonzero) ||
                      (max_i < n && boundary_col_nonzero);
    return table;
}

BettiTable koszul_betti(const Ideal& ideal, int max_i, int max_j,
                        int reg_hint) {
    return koszul_betti(buchberger(ideal, ideal.ring.order), max_i, max_j,
                        reg_hint);
}

BettiTable koszul_betti(const MonomialIdeal& m, int max_i, int max_j,
                        int reg_hint) {
    std::vector<Polynomial> gens;
    for (auto& g : m.min_gens())
        gens.push_back(Polynomial::monomial_term(m.ring(), g));
    GroebnerBasis gb{m.ring(), std::move(gens), true};
    return koszul_betti(gb, max_i, max_j, reg_hint);
}

NdpVerdict property_ndp(const BettiTable& table, int d, int p) {
    if (d < 2 || p < 1)
        throw std::invalid_argument("property_ndp: need d >= 2 and p >= 1");
    NdpVerdict v;
    for (int i = 1; i <= std::min(p, table.max_i); ++i) {
        for (int j = d; j <= table.max_j; ++j) {
            if (table.at(i, j) != 0) {
                v.holds = false;
                v.determinate = true;  // a nonzero witness refutes outright
                v.witness_i = i;
                v.witness_j = j;
                v.witness_beta = table.at(i, j);
                return v;
            }
        }
    }
    v.holds = true;
    v.determinate = !table.truncated && p <= table.max_i;
    return v;
}

bool is_acm_dlinear(const BettiTable& table, int /*n*/, int e, int d) {
    if (table.truncated)
        throw std::invalid_argument("is_acm_dlinear: truncated table rejected");
    if (table.proj_dim() != e) return false;
    for (auto& [ij, beta] : table.entries) {
        if (beta == 0 || ij.first == 0) continue;
        if (ij.second != d - 1) return false;
    }
    return true;
}

ThmAReport thmA_verdict(const BettiTable& table, int e, int ell,
                        const MonomialIdeal* gin, const HilbertData* hilbert) {
    ThmAReport rep;
    rep.ell = ell;
    rep.e = e;
    rep.bound_ok = true;
    rep.zero_beyond_e = true;
    for (int i = 1; i <= e; ++i) {
        ThmARow row;
        row.i = i;
        row.beta = table.at(i, ell);
        row.bound = power_ideal_betti(e, ell, i);
        row.equality = (row.beta == row.bound);
        if (row.beta > row.bound) rep.bound_ok = false;
        if (row.equality) rep.any_equality = true;
        rep.rows.push_back(row);
    }
    for (int i = e + 1; i <= table.max_i; ++i)
        if (table.at(i, ell) != 0) rep.zero_beyond_e = false;
    if (rep.any_equality && gin != nullptr && hilbert != nullptr) {
        rep.checked_equivalences = true;
        MonomialIdeal j0 = power_ideal(gin->ring(), e, ell);
        rep.gin_is_power_ideal = (*gin == j0);
        rep.acm_linear = is_acm_dlinear(table, hilbert->n, e, ell + 1);
        rep.degree_minimal = (hilbert->degree == binomial(e + ell, ell));
        rep.equivalences_ok =
            rep.gin_is_power_ideal && rep.acm_linear && rep.degree_minimal;
    }
    return rep;
}

RigidityReport rigidity_check(const Ideal& ideal, int d, std::uint64_t seed,
                              int trials) {
    if (d < 2) throw std::invalid_argument("rigidity_check: need d >= 2");
    RigidityReport rep;
    rep.d = d;
    GinResult gin = generic_initial_ideal(ideal, trials, seed);
    HilbertData hd = hilbert_data(gin.gin);
    rep.e = hd.e;
    rep.degree = hd.degree;
    rep.expected_degree = binomial(d - 1 + rep.e, rep.e);
    NDCertificate nd = nd_check_from_gin(gin, d - 1);
    rep.nd_hypothesis = nd.certified();
    if (!rep.nd_hypothesis) {
        if (nd.verdict == NdVerdict::Unstable)
            rep.failed_hypothesis = "gin unstable";
        else
            rep.failed_hypothesis =
                "nd(" + std::to_string(d - 1) + ") refuted";
    }
    int reg = regularity_from_gin(gin);
    BettiTable table = koszul_betti(ideal, ideal.ring.nvars,
                                    std::max(reg - 1, d), std::max(reg - 1, 0));
    NdpVerdict ndp = property_ndp(table, d, rep.e);
    rep.ndp_hypothesis = ndp.holds && ndp.determinate;
    if (!rep.ndp_hypothesis && rep.failed_hypothesis.empty())
        rep.failed_hypothesis = "N_{" + std::to_string(d) + "," +
                                std::to_string(rep.e) + "} refuted";
    rep.hypotheses_met = rep.nd_hypothesis && rep.ndp_hypothesis;
    if (rep.hypotheses_met) {
        rep.conclusion_acm_dlinear = is_acm_dlinear(table, hd.n, rep.e, d);
        rep.conclusion_degree = (rep.degree == rep.expected_degree);
    }
    return rep;
}

CancellationCheck cancellation_decomposition(const BettiTable& lower,
                                             const BettiTable& upper) {
    CancellationCheck out;
    if (lower.truncated || upper.truncated) {
        out.ok = false;
        out.detail = "truncated table";
        return out;
    }
    int max_i = std::max(lower.proj_dim(), upper.proj_dim());
    int max_t = 0;
    for (auto& [ij, b] : lower.entries)
        if (b != 0) max_t = std::max(max_t, ij.first + ij.second);
    for (auto& [ij, b] : upper.entries)
        if (b != 0) max_t = std::max(max_t, ij.first + ij.second);
    std::ostringstream detail;
    out.ok = true;
    for (int t = 0; t <= max_t; ++t) {
        std::int64_t prev = 0;  // c_{i-1, t-i+1}
        for (int i = 0; i <= max_i + 1; ++i) {
            int j = t - i;
            if (j < 0) break;
            std::int64_t diff = upper.at(i, j) - lower.at(i, j);
            std::int64_t c = diff - prev;
            if (c < 0) {
                out.ok = false;
                detail << "negative cancellation at (i=" << i << ", j=" << j
                       << "); ";
                break;
            }
            prev = c;
        }
        if (prev != 0) {
            out.ok = false;
            detail << "unbalanced cancellation on total degree " << t << "; ";
        }
    }
    out.detail = detail.str();
    return out;
}

std::vector<std::tuple<int, int, std::int64_t>> betti_triples(
    const BettiTable& table) {
    std::vector<std::tuple<int, int, std::int64_t>> out;
    for (auto& [ij, b] : table.entries)
        if (b != 0) out.emplace_back(ij.first, ij.second, b);
    return out;
}

}  // namespace strand
