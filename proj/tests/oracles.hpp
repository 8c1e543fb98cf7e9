// Test-only oracles, deliberately independent of the library's bitmask and
// Smith-normal-form paths: plain vector<int> faces, subset enumeration over
// all 2^n vertex sets, and field elimination for ranks.
#ifndef SERRE_TESTS_ORACLES_HPP
#define SERRE_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "serre/circulant.hpp"

namespace oracle {

// Maximal independent sets by scanning every vertex subset.
inline std::vector<std::vector<int>> mis_bruteforce(const serre::Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool independent = true;
        for (int u = 0; u < n && independent; ++u)
            if ((m >> u) & 1)
                for (int v = u + 1; v < n && independent; ++v)
                    if (((m >> v) & 1) && g.has_edge(u, v)) independent = false;
        if (!independent) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if ((m >> w) & 1) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (((m >> u) & 1) && g.has_edge(u, w)) ok = false;
            if (ok) maximal = false;
        }
        if (!maximal) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((m >> v) & 1) vs.push_back(v);
        out.push_back(vs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

using FaceList = std::vector<std::vector<int>>;

// Every face of the complex spanned by `facets`, grouped by cardinality.
inline std::vector<std::set<std::vector<int>>> faces_by_size(const FaceList& facets) {
    int top = 0;
    for (const auto& f : facets) top = std::max<int>(top, static_cast<int>(f.size()));
    std::vector<std::set<std::vector<int>>> by_size(static_cast<size_t>(top) + 1);
    for (const auto& f : facets) {
        int k = static_cast<int>(f.size());
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
            std::vector<int> sub;
            for (int b = 0; b < k; ++b)
                if ((m >> b) & 1) sub.push_back(f[static_cast<size_t>(b)]);
            by_size[sub.size()].insert(sub);
        }
    }
    return by_size;
}

// Boundary of the i-faces as dense rows over the (i-1)-faces, with the usual
// alternating signs. i = 0 gives the augmentation row.
inline std::vector<std::vector<long long>> boundary_oracle(
    const std::vector<std::set<std::vector<int>>>& by_size, int i) {
    const auto& cols = by_size[static_cast<size_t>(i) + 1];
    if (i == 0) return {std::vector<long long>(cols.size(), 1)};
    const auto& rows = by_size[static_cast<size_t>(i)];
    std::vector<std::vector<int>> row_list(rows.begin(), rows.end());
    std::vector<std::vector<long long>> m(row_list.size(),
                                          std::vector<long long>(cols.size(), 0));
    size_t c = 0;
    for (const auto& f : cols) {
        for (size_t j = 0; j < f.size(); ++j) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + static_cast<long>(j));
            auto it = std::lower_bound(row_list.begin(), row_list.end(), sub);
            m[static_cast<size_t>(it - row_list.begin())][c] = (j % 2 == 0) ? 1 : -1;
        }
        ++c;
    }
    return m;
}

inline int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    int rank = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t piv = rows;
        for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[static_cast<size_t>(rank)], m[piv]);
        long long inv = 1, base = m[static_cast<size_t>(rank)][c], e = p - 2;
        while (e) {  // Fermat inverse
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
            long long f = m[r][c] * inv % p;
            for (size_t cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[static_cast<size_t>(rank)][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline int rank_rational(const std::vector<std::vector<long long>>& in) {
    if (in.empty() || in[0].empty()) return 0;
    size_t rows = in.size(), cols = in[0].size();
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m[r][c] = static_cast<long>(in[r][c]);
    int rank = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t piv = rows;
        for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[static_cast<size_t>(rank)], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[static_cast<size_t>(rank)][c];
            for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[static_cast<size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

// Reduced betti number over the field of the given characteristic.
inline long long betti_oracle(const FaceList& facets, int i, long long characteristic) {
    auto by_size = faces_by_size(facets);
    int dim = static_cast<int>(by_size.size()) - 2;
    auto count = [&](int d) -> long long {
        if (d == -1) return 1;
        if (d < -1 || d > dim) return 0;
        return static_cast<long long>(by_size[static_cast<size_t>(d) + 1].size());
    };
    auto rank_of = [&](int d) -> long long {
        if (d < 0 || d > dim) return 0;
        auto b = boundary_oracle(by_size, d);
        return characteristic == 0 ? rank_rational(b) : rank_mod_p(b, characteristic);
    };
    if (i < -1 || i > dim) return 0;
    return count(i) - rank_of(i) - rank_of(i + 1);
}

// Reisner's criterion scanned face by face with the elimination oracle.
inline bool cm_oracle(const FaceList& facets, long long characteristic) {
    auto by_size = faces_by_size(facets);
    for (const auto& level : by_size)
        for (const auto& face : level) {
            FaceList link;
            for (const auto& f : facets) {
                if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) continue;
                std::vector<int> rest;
                std::set_difference(f.begin(), f.end(), face.begin(), face.end(),
                                    std::back_inserter(rest));
                link.push_back(rest);
            }
            int dl = -1;
            for (const auto& f : link) dl = std::max<int>(dl, static_cast<int>(f.size()) - 1);
            for (int i = -1; i < dl; ++i)
                if (betti_oracle(link, i, characteristic) != 0) return false;
        }
    return true;
}

// The 6-vertex triangulation of the real projective plane.
inline FaceList projective_plane() {
    return {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
}

}  // namespace oracle

#endif
