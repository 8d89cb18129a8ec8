#include "strand/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace strand {

int fp_rank(FpMatrix m) {
    Gf gf(m.p);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        std::uint32_t inv = gf.inv(m.at(rank, col));
        for (int r = rank + 1; r < m.rows; ++r) {
            std::uint32_t f = m.at(r, col);
            if (f == 0) continue;
            std::uint32_t scale = gf.mul(f, inv);
            m.at(r, col) = 0;
            for (int c = col + 1; c < m.cols; ++c) {
                std::uint32_t v = m.at(rank, c);
                if (v != 0) m.at(r, c) = gf.sub(m.at(r, c), gf.mul(scale, v));
            }
        }
        ++rank;
    }
    return rank;
}

int fp_rank_sparse(
    const std::vector<std::vector<std::pair<int, std::uint32_t>>>& in_rows,
    int /*ncols*/, std::uint32_t p) {
    Gf gf(p);
    using Row = std::map<int, std::uint32_t>;
    // pivot column -> eliminated row with unit pivot
    std::map<int, Row> pivots;
    int rank = 0;
    for (const auto& r : in_rows) {
        Row row(r.begin(), r.end());
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) break;
            std::uint32_t f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                std::uint32_t delta = gf.mul(f, v);
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, gf.neg(delta));
                } else {
                    jt->second = gf.sub(jt->second, delta);
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
        if (row.empty()) continue;
        std::uint32_t inv = gf.inv(row.begin()->second);
        for (auto& [c, v] : row) v = gf.mul(v, inv);
        pivots.emplace(row.begin()->first, std::move(row));
        ++rank;
    }
    return rank;
}

int fp_rank(const SparseMatrix& m, int dense_column_limit) {
    if (m.cols > dense_column_limit)
        return fp_rank_sparse(m.entries, m.cols, m.p);
    FpMatrix d(m.p, m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (auto& [c, v] : m.entries[r]) d.at(r, c) = v;
    return fp_rank(std::move(d));
}

FpMatrix fp_identity(std::uint32_t p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols != b.rows || a.p != b.p)
        throw std::invalid_argument("fp_mul: shape mismatch");
    FpMatrix out(a.p, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            std::uint64_t f = a.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                out.at(i, j) = static_cast<std::uint32_t>(
                    (out.at(i, j) + f * b.at(k, j)) % a.p);
            }
        }
    }
    return out;
}

bool fp_invertible(const FpMatrix& m) {
    if (m.rows != m.cols) return false;
    return fp_rank(m) == m.rows;
}

FpMatrix fp_inverse(const FpMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("fp_inverse: matrix not square");
    int n = m.rows;
    Gf gf(m.p);
    FpMatrix work = m;
    FpMatrix inv = fp_identity(m.p, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("fp_inverse: singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        std::uint32_t s = gf.inv(work.at(col, col));
        for (int c = 0; c < n; ++c) {
            work.at(col, c) = gf.mul(work.at(col, c), s);
            inv.at(col, c) = gf.mul(inv.at(col, c), s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            std::uint32_t f = work.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) = gf.sub(work.at(r, c), gf.mul(f, work.at(col, c)));
                inv.at(r, c) = gf.sub(inv.at(r, c), gf.mul(f, inv.at(col, c)));
            }
        }
    }
    return inv;
}

std::vector<std::vector<std::uint32_t>> fp_nullspace(FpMatrix m) {
    Gf gf(m.p);
    int n = m.cols;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        std::uint32_t s = gf.inv(m.at(rank, col));
        for (int c = 0; c < n; ++c) m.at(rank, c) = gf.mul(m.at(rank, c), s);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            std::uint32_t f = m.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < n; ++c)
                m.at(r, c) = gf.sub(m.at(r, c), gf.mul(f, m.at(rank, c)));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = gf.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix fp_random(std::uint32_t p, int rows, int cols, Rng& rng) {
    FpMatrix m(p, rows, cols);
    for (auto& v : m.a) v = rng.field_element(p);
    return m;
}

FpMatrix fp_random_invertible(std::uint32_t p, int n, Rng& rng) {
    for (;;) {
        FpMatrix m = fp_random(p, n, n, rng);
        if (fp_invertible(m)) return m;
    }
}

std::vector<std::vector<std::uint32_t>> to_rows(const FpMatrix& m) {
    std::vector<std::vector<std::uint32_t>> out(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        out[r].resize(m.cols);
        for (int c = 0; c < m.cols; ++c) out[r][c] = m.at(r, c);
    }
    return out;
}

}  // namespace strand
