#include "strand/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "strand/hilbert.hpp"
#include "strand/matrix.hpp"

namespace strand {

Ideal toric_from_matrix(const IntegerMatrix& a, RingContext target) {
    if (a.cols != target.nvars)
        throw std::invalid_argument(
            "toric_from_matrix: columns must match the target variable count");
    int r = a.rows;
    int c = a.cols;
    // auxiliary ring [w, t_0..t_{r-1}, x_0..x_{c-1}], Lex, eliminate w and t
    RingContext aux = make_ring(target.prime, 1 + r + c, MonomialOrder::Lex);
    auto t_var = [&](int i) { return 1 + i; };
    auto x_var = [&](int j) { return 1 + r + j; };
    std::vector<Polynomial> gens;
    for (int j = 0; j < c; ++j) {
        std::vector<std::int32_t> pos(aux.nvars, 0), neg(aux.nvars, 0);
        pos[x_var(j)] = 1;
        for (int i = 0; i < r; ++i) {
            std::int64_t e = a.a.at(i).at(j);
            if (e > 0)
                neg[t_var(i)] = static_cast<std::int32_t>(e);
            else if (e < 0)
                pos[t_var(i)] = static_cast<std::int32_t>(-e);
        }
        // x_j * t^{a_j^-} - t^{a_j^+}
        Polynomial f = Polynomial::monomial_term(aux, Monomial(pos), 1) -
                       Polynomial::monomial_term(aux, Monomial(neg), 1);
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    // w * (t_0 ... t_{r-1}) - 1: one saturation pass for all parameters
    std::vector<std::int32_t> wt(aux.nvars, 0);
    wt[0] = 1;
    for (int i = 0; i < r; ++i) wt[t_var(i)] = 1;
    gens.push_back(Polynomial::monomial_term(aux, Monomial(wt), 1) -
                   Polynomial::constant(aux, 1));
    Ideal eliminated = eliminate(Ideal{aux, std::move(gens)}, 1 + r);
    // canonicalize in the target order
    std::vector<Polynomial> moved;
    for (auto& g : eliminated.gens)
        moved.push_back(g.in_ring(eliminated.ring.with_order(target.order)));
    GroebnerBasis canon =
        buchberger_any(Ideal{target, std::move(moved)}, target.order);
    for (auto& g : canon.elements) {
        if (g.num_terms() > 2)
            throw std::logic_error(
                "toric_from_matrix: non-binomial generator produced");
    }
    return Ideal{target, canon.elements};
}

Ideal rational_normal_curve(std::uint32_t prime, int deg) {
    if (deg < 1) throw std::invalid_argument("rational_normal_curve: deg >= 1");
    RingContext ring = make_ring(prime, deg + 1);
    std::vector<Polynomial> gens;
    for (int i = 0; i < deg; ++i) {
        for (int j = i + 1; j < deg; ++j) {
            // 2-minor over columns i, j of [[x_i],[x_{i+1}]]
            Polynomial f =
                Polynomial::variable(ring, i) * Polynomial::variable(ring, j + 1) -
                Polynomial::variable(ring, i + 1) * Polynomial::variable(ring, j);
            if (!f.is_zero()) gens.push_back(std::move(f));
        }
    }
    return Ideal{ring, std::move(gens)};
}

Ideal veronese(std::uint32_t prime, int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("veronese: need n >= 1 and d >= 1");
    auto monos = monomials_of_degree(n + 1, d);
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& x, const Monomial& y) {
                  return mono_cmp(x, y, MonomialOrder::DegRevLex) > 0;
              });
    IntegerMatrix a;
    a.rows = n + 1;
    a.cols = static_cast<int>(monos.size());
    a.a.assign(a.rows, std::vector<std::int64_t>(a.cols, 0));
    for (int j = 0; j < a.cols; ++j)
        for (int i = 0; i < a.rows; ++i) a.a[i][j] = monos[j].exponent(i);
    RingContext target = make_ring(prime, a.cols);
    return toric_from_matrix(a, target);
}

namespace {

// determinant of a small polynomial matrix by cofactor expansion
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m,
                    RingContext ring) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Polynomial det = Polynomial::zero(ring);
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<Polynomial>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (int c = 0; c < n; ++c)
                if (c != k) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][k] * poly_det(minor, ring);
        det = (k % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

}  // namespace

Ideal generic_catalecticant_minors(std::uint32_t prime, int t,
                                   const std::vector<int>& block_vars) {
    if (t < 1) throw std::invalid_argument("catalecticant: need t >= 1");
    int total_vars = 0;
    int total_cols = 0;
    for (int v : block_vars) {
        if (v < t)
            throw std::invalid_argument(
                "catalecticant: each block needs at least t variables");
        total_vars += v;
        total_cols += v - t + 1;
    }
    if (total_cols < t)
        throw std::invalid_argument("catalecticant: too few columns for minors");
    RingContext ring = make_ring(prime, total_vars);
    // t x total_cols catalecticant: block with v variables contributes the
    // Hankel slice entry (r, c) = x_{offset + r + c}
    std::vector<std::vector<Polynomial>> mat(
        t, std::vector<Polynomial>(total_cols, Polynomial::zero(ring)));
    int var_offset = 0, col_offset = 0;
    for (int v : block_vars) {
        int cols = v - t + 1;
        for (int r = 0; r < t; ++r)
            for (int c = 0; c < cols; ++c)
                mat[r][col_offset + c] =
                    Polynomial::variable(ring, var_offset + r + c);
        var_offset += v;
        col_offset += cols;
    }
    // all t x t minors
    std::vector<Polynomial> gens;
    std::vector<int> cols;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cols.size()) == t) {
            std::vector<std::vector<Polynomial>> sub(t, std::vector<Polynomial>());
            for (int r = 0; r < t; ++r)
                for (int c : cols) sub[r].push_back(mat[r][c]);
            Polynomial det = poly_det(sub, ring);
            if (!det.is_zero()) gens.push_back(std::move(det));
            return;
        }
        for (int c = start; c < total_cols; ++c) {
            cols.push_back(c);
            self(self, c + 1);
            cols.pop_back();
        }
    };
    rec(rec, 0);
    return Ideal{ring, std::move(gens)};
}

Ideal project_from_points(const Ideal& ideal,
                          const std::vector<std::vector<std::uint32_t>>& points,
                          bool expect_isomorphic, Rng& rng) {
    int n = ideal.ring.nvars;
    int k = static_cast<int>(points.size());
    if (k < 1 || k >= n)
        throw std::invalid_argument("project_from_points: bad point count");
    FpMatrix pts(ideal.ring.prime, k, n);
    for (int r = 0; r < k; ++r) {
        if (static_cast<int>(points[r].size()) != n)
            throw std::invalid_argument("project_from_points: bad point length");
        for (int c = 0; c < n; ++c) pts.at(r, c) = points[r][c];
    }
    if (fp_rank(pts) != k)
        throw std::invalid_argument(
            "project_from_points: points are linearly dependent");
    // complete the points (as columns) to an invertible change x = C y,
    // preferring standard basis vectors so coordinate centers reduce to
    // plain elimination; random columns only as a fallback
    FpMatrix change(ideal.ring.prime, n, n);
    {
        std::vector<std::vector<std::uint32_t>> cols = points;
        auto rank_with = [&](const std::vector<std::vector<std::uint32_t>>& cs) {
            FpMatrix m(ideal.ring.prime, static_cast<int>(cs.size()), n);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < n; ++c) m.at(r, c) = cs[r][c];
            return fp_rank(std::move(m));
        };
        for (int v = 0; v < n && static_cast<int>(cols.size()) < n; ++v) {
            std::vector<std::uint32_t> e(n, 0);
            e[v] = 1;
            cols.push_back(e);
            if (rank_with(cols) < static_cast<int>(cols.size())) cols.pop_back();
        }
        while (static_cast<int>(cols.size()) < n) {
            std::vector<std::uint32_t> r(n);
            for (auto& v : r) v = rng.field_element(ideal.ring.prime);
            cols.push_back(r);
            if (rank_with(cols) < static_cast<int>(cols.size())) cols.pop_back();
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) change.at(r, c) = cols[c][r];
    }
    auto rows = to_rows(change);
    std::vector<Polynomial> moved;
    moved.reserve(ideal.gens.size());
    for (auto& g : ideal.gens)
        if (!g.is_zero()) moved.push_back(apply_linear_change(g, rows));
    Ideal image = eliminate(Ideal{ideal.ring, std::move(moved)}, k);
    if (expect_isomorphic) {
        DimensionDegree before = dimension_degree(ideal);
        DimensionDegree after = dimension_degree(image);
        if (before.n != after.n || before.degree != after.degree)
            throw ProjectionDegenerate(
                "project_from_points: center meets the scheme (dimension or "
                "degree dropped)");
    }
    return image;
}

Ideal general_hyperplane_section(const Ideal& ideal, int count,
                                 std::uint64_t seed) {
    if (count == 0) return ideal;
    DimensionDegree dd = dimension_degree(ideal);
    if (count > dd.n)
        throw std::invalid_argument(
            "general_hyperplane_section: count exceeds the scheme dimension");
    Rng rng(seed);
    int n = ideal.ring.nvars;
    FpMatrix m = fp_random_invertible(ideal.ring.prime, n, rng);
    auto rows = to_rows(m);
    RingContext small =
        make_ring(ideal.ring.prime, n - count, ideal.ring.order);
    // rotate, then set the leading `count` coordinates to zero
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) {
        std::vector<Term> ts;
        for (int j = count; j < n; ++j) {
            std::uint32_t c = rows[i][j];
            if (c != 0)
                ts.push_back(Term{Monomial::variable(small.nvars, j - count), c});
        }
        images.push_back(Polynomial(small, std::move(ts)));
    }
    std::vector<Polynomial> gens;
    for (auto& g : ideal.gens) {
        Polynomial s = substitute(g, small, images);
        if (!s.is_zero()) gens.push_back(std::move(s));
    }
    // saturate with respect to a generic linear form: rotate it to the last
    // coordinate, use the DegRevLex division fast path, rotate back
    FpMatrix m2 = fp_random_invertible(small.prime, small.nvars, rng);
    auto rows2 = to_rows(m2);
    std::vector<Polynomial> rotated;
    for (auto& g : gens) rotated.push_back(apply_linear_change(g, rows2));
    Ideal sat = saturate_by_last_variable(
        Ideal{small.with_order(MonomialOrder::DegRevLex), std::move(rotated)});
    auto back = to_rows(fp_inverse(m2));
    std::vector<Polynomial> restored;
    for (auto& g : sat.gens)
        restored.push_back(apply_linear_change(g.in_ring(small), back));
    return Ideal{small, std::move(restored)};
}

Ideal recoordinate_center(const Ideal& ideal,
                          const std::vector<std::uint32_t>& q, Rng& rng) {
    int n = ideal.ring.nvars;
    if (static_cast<int>(q.size()) != n)
        throw std::invalid_argument("recoordinate_center: bad point length");
    FpMatrix change(ideal.ring.prime, n, n);
    for (;;) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                change.at(r, c) =
                    c == 0 ? q[r] : rng.field_element(ideal.ring.prime);
        if (fp_invertible(change)) break;
    }
    auto rows = to_rows(change);
    std::vector<Polynomial> moved;
    for (auto& g : ideal.gens)
        if (!g.is_zero()) moved.push_back(apply_linear_change(g, rows));
    return Ideal{ideal.ring, std::move(moved)};
}

std::vector<std::uint32_t> rnc_point(std::uint32_t prime, int deg, Rng& rng) {
    Gf gf(prime);
    std::uint32_t t = rng.field_element(prime);
    std::vector<std::uint32_t> pt(deg + 1);
    std::uint32_t power = 1;
    for (int i = 0; i <= deg; ++i) {
        pt[i] = power;
        power = gf.mul(power, t);
    }
    return pt;
}

PointSampler rnc_sampler(std::uint32_t prime, int deg) {
    return [prime, deg](Rng& rng) { return rnc_point(prime, deg, rng); };
}

}  // namespace strand
