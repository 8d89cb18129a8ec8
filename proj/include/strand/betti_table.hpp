#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace strand {

// Graded Betti numbers of R/I, indexed by (homological step i, internal
// degree j); the entry beta_{i,j} counts Tor_i(R/I,k) in total degree i+j.
// Entries inside the computed bounds default to zero; anything outside is
// unknown, and `truncated` records that the requested window may have cut
// the resolution off.
struct BettiTable {
    int nvars = 0;
    int max_i = 0;  // steps 0..max_i computed (inclusive)
    int max_j = 0;  // internal degrees 0..max_j computed (inclusive)
    bool truncated = false;
    std::map<std::pair<int, int>, std::int64_t> entries;

    void set(int i, int j, std::int64_t beta) {
        if (beta != 0) entries[{i, j}] = beta;
    }
    std::int64_t at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    bool in_bounds(int i, int j) const {
        return i >= 0 && i <= max_i && j >= 0 && j <= max_j;
    }

    // largest step with a nonzero entry (projective dimension of R/I)
    int proj_dim() const {
        int pd = 0;
        for (auto& [ij, b] : entries)
            if (b != 0) pd = std::max(pd, ij.first);
        return pd;
    }
    // largest internal degree with a nonzero entry (regularity of R/I)
    int regularity() const {
        int r = 0;
        for (auto& [ij, b] : entries)
            if (b != 0) r = std::max(r, ij.second);
        return r;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// text rendering in the usual layout: rows indexed by j, columns by i,
// "-" for zero entries
std::string format_betti_table(const BettiTable& t);

}  // namespace strand
