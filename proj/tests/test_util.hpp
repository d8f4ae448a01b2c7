// Shared test helpers and independent oracles. Everything here is
// deliberately implemented without touching the library's BFS/eigensolver
// code paths so the checks stay independent.
#ifndef ALPHADIST_TEST_UTIL_HPP
#define ALPHADIST_TEST_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "alphadist/distance.hpp"
#include "alphadist/graph.hpp"
#include "alphadist/linalg.hpp"

namespace testutil {

// Floyd-Warshall distance oracle, independent of the library's BFS route.
inline std::vector<std::vector<long long>> floyd_warshall(const alphadist::Graph& g) {
    const int n = g.vertex_count();
    const long long inf = 1LL << 40;
    std::vector<std::vector<long long>> d(n, std::vector<long long>(n, inf));
    for (int i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Determinant by Gaussian elimination with partial pivoting; used to
// cross-check the eigenvalue-product route for tree distance matrices.
inline double lu_determinant(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col]))
                pivot = r;
        if (a[pivot][col] == 0.0)
            return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

inline std::vector<std::vector<double>> distance_as_dense(const alphadist::DistanceData& d) {
    std::vector<std::vector<double>> m(d.n, std::vector<double>(d.n, 0.0));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            m[i][j] = d.d(i, j);
    return m;
}

// Uniform random labeled tree (Pruefer) built directly here, so tests do not
// depend on the library generator they are checking.
inline alphadist::Graph oracle_random_tree(int n, std::mt19937_64& rng) {
    alphadist::Graph g(n);
    if (n < 2)
        return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> seq(n - 2), degree(n, 1);
    for (auto& v : seq) {
        v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        ++degree[v];
    }
    std::vector<char> used(n, 0);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                g.add_edge(leaf, v);
                used[leaf] = 1;
                --degree[v];
                break;
            }
        }
    }
    int first = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1 && !used[v]) {
            if (first < 0)
                first = v;
            else
                g.add_edge(first, v);
        }
    }
    return g;
}

// All connected labeled graphs on n vertices (n <= 6 is practical).
inline std::vector<alphadist::Graph> connected_labeled_graphs(int n) {
    std::vector<alphadist::Graph> out;
    const int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        alphadist::Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask & (1u << bit))
                    g.add_edge(i, j);
        if (alphadist::is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

inline alphadist::SymMatrix dense_to_sym(const std::vector<std::vector<double>>& a) {
    alphadist::SymMatrix m(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), a[i][j]);
    return m;
}

} // namespace testutil

#endif
