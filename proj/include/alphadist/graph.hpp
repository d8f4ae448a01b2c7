#ifndef ALPHADIST_GRAPH_HPP
#define ALPHADIST_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alphadist {

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges. Immutable once built via the free builders below; add_edge is the
// only mutator and keeps the invariants.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    // Inserts the undirected edge {u,v}; duplicates are ignored.
    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

enum class Family { path, cycle, star, complete, complete_bipartite };

// Parses "path", "cycle", "star", "complete", "complete_bipartite".
Family family_from_string(const std::string& name);
std::string family_name(Family f);

// Canonical labeled instance of a named family. Star center is vertex 0;
// complete_bipartite uses parts {0..part_a-1} and {part_a..n-1}.
// Throws std::invalid_argument for invalid sizes (cycle needs n >= 3,
// bipartite needs 1 <= part_a <= n-1).
Graph make_family(Family f, int n, int part_a = -1);

// Connected graph built as a uniform random labeled spanning tree (random
// Pruefer sequence) plus `extra_edges` distinct non-tree edges sampled
// without replacement. Deterministic for a fixed seed.
Graph random_connected(int n, int extra_edges, std::uint64_t seed);

// BFS from vertex 0.
bool is_connected(const Graph& g);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

} // namespace alphadist

#endif
