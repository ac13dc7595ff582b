#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the Graph and Rational types.

#include "reisner/graph.hpp"
#include "reisner/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using reisner::Graph;
using reisner::Rational;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Graph whose edge set is given by mask over pairs (i, j), i < j, in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<reisner::Edge> edges;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (mask >> b & 1u) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (auto [i, j] : g.edges()) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    return adj;
}

inline bool subset_is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (s >> v & 1u)
            if ((s & ~(1u << v) & ~adj[v]) != 0) return false;
    return true;
}

inline bool subset_is_stable(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (s >> v & 1u)
            if ((s & adj[v]) != 0) return false;
    return true;
}

// Inclusion-maximal cliques (or stable sets) by scanning every subset.
inline std::vector<std::uint32_t> naive_maximal(const Graph& g, bool cliques) {
    const auto adj = adjacency_masks(g);
    const int n = g.n();
    auto ok = [&](std::uint32_t s) { return cliques ? subset_is_clique(adj, s) : subset_is_stable(adj, s); };
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (!ok(s)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(s >> v & 1u) && ok(s | 1u << v)) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

// Clique number and chromatic number of every induced subgraph, by dynamic
// programming over vertex subsets.
struct SubsetNumbers {
    std::vector<int> omega;
    std::vector<int> chi;
};

inline SubsetNumbers subset_numbers(const Graph& g) {
    const auto adj = adjacency_masks(g);
    const int n = g.n();
    const std::uint32_t full = (1u << n) - 1u;
    SubsetNumbers r{std::vector<int>(full + 1, 0), std::vector<int>(full + 1, 0)};
    std::vector<char> stable(full + 1, 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int v = __builtin_ctz(s);
        const std::uint32_t rest = s & (s - 1);
        stable[s] = stable[rest] && (adj[v] & rest) == 0;
        r.omega[s] = std::max(r.omega[rest], 1 + r.omega[rest & adj[v]]);
        // Color class containing the lowest vertex: any stable I with v in I,
        // so the rest of I avoids the neighbors of v.
        const std::uint32_t free = rest & ~adj[v];
        int best = n + 1;
        for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
            const std::uint32_t cls = sub | (1u << v);
            if (stable[cls]) best = std::min(best, 1 + r.chi[s & ~cls]);
            if (sub == 0) break;
        }
        r.chi[s] = best;
    }
    return r;
}

inline int naive_clique_number(const Graph& g) { return subset_numbers(g).omega.back(); }
inline int naive_chromatic_number(const Graph& g) { return subset_numbers(g).chi.back(); }

// First subset (by bitset value) whose clique and chromatic numbers differ.
inline std::optional<std::uint32_t> naive_imperfect_witness(const Graph& g) {
    const auto r = subset_numbers(g);
    for (std::uint32_t s = 1; s < r.omega.size(); ++s)
        if (r.omega[s] != r.chi[s]) return s;
    return std::nullopt;
}

// Convex hull membership by exhaustion: p is in conv(G) iff some subset T of G
// admits nonnegative weights with sum 1 reproducing p, and by Caratheodory an
// affinely independent T suffices. Each subset's system [G_T; 1] w = [p; 1] is
// solved by Gauss-Jordan elimination; subsets without full column rank are
// skipped.
inline std::optional<std::vector<Rational>> naive_convex_weights(const std::vector<Rational>& p,
                                                                 const std::vector<std::vector<Rational>>& gens) {
    const std::size_t d = p.size();
    const std::size_t k = gens.size();
    for (std::uint32_t t = 1; t < (1u << k); ++t) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if (t >> i & 1u) idx.push_back(i);
        const std::size_t c = idx.size();
        if (c > d + 1) continue;
        // Augmented matrix with d + 1 rows and c + 1 columns.
        std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(c + 1));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t j = 0; j < c; ++j) a[r][j] = gens[idx[j]][r];
            a[r][c] = p[r];
        }
        for (std::size_t j = 0; j < c; ++j) a[d][j] = 1;
        a[d][c] = 1;
        std::size_t row = 0;
        bool full_rank = true;
        for (std::size_t col = 0; col < c; ++col) {
            std::size_t piv = row;
            while (piv <= d && a[piv][col] == 0) ++piv;
            if (piv > d) {
                full_rank = false;
                break;
            }
            std::swap(a[piv], a[row]);
            const Rational lead = a[row][col];
            for (auto& e : a[row]) e /= lead;
            for (std::size_t r = 0; r <= d; ++r) {
                if (r == row || a[r][col] == 0) continue;
                const Rational f = a[r][col];
                for (std::size_t j = 0; j <= c; ++j) a[r][j] -= f * a[row][j];
            }
            ++row;
        }
        if (!full_rank) continue;
        bool consistent = true;
        for (std::size_t r = row; r <= d; ++r)
            if (a[r][c] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rational> w(k, 0);
        bool nonnegative = true;
        for (std::size_t j = 0; j < c; ++j) {
            w[idx[j]] = a[j][c];
            if (a[j][c] < 0) nonnegative = false;
        }
        if (nonnegative) return w;
    }
    return std::nullopt;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return reisner::make_rational(num(rng), den(rng));
}

} // namespace oracle
