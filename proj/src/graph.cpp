#include "alphadist/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace alphadist {

Graph::Graph(int n) : n_(n), adj_(n >= 0 ? static_cast<std::size_t>(n) : 0) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop rejected");
    auto& au = adj_[u];
    auto pos = std::lower_bound(au.begin(), au.end(), v);
    if (pos != au.end() && *pos == v)
        return; // parallel edge, ignore
    au.insert(pos, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Family family_from_string(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    }
    return "?";
}

Graph make_family(Family f, int n, int part_a) {
    if (n < 1)
        throw std::invalid_argument("family size must be >= 1");
    Graph g(n);
    switch (f) {
    case Family::path:
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        break;
    case Family::cycle:
        if (n < 3)
            throw std::invalid_argument("cycle needs n >= 3");
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        g.add_edge(n - 1, 0);
        break;
    case Family::star:
        for (int i = 1; i < n; ++i)
            g.add_edge(0, i);
        break;
    case Family::complete:
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                g.add_edge(i, j);
        break;
    case Family::complete_bipartite:
        if (part_a < 1 || part_a > n - 1)
            throw std::invalid_argument("complete_bipartite needs parts a, b >= 1 with a + b = n");
        for (int i = 0; i < part_a; ++i)
            for (int j = part_a; j < n; ++j)
                g.add_edge(i, j);
        break;
    }
    return g;
}

namespace {

// Unbiased draw from [0, k) with a fixed rejection algorithm, so results are
// identical on every platform (uniform_int_distribution is not portable).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % k;
}

// Decode a Pruefer sequence into tree edges (n >= 2, sequence length n-2).
std::vector<std::pair<int, int>> pruefer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> degree(n, 1);
    for (int v : seq)
        ++degree[v];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // Smallest-leaf elimination with a moving pointer.
    int ptr = 0;
    while (degree[ptr] != 1)
        ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

} // namespace

Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_connected needs n >= 1");
    const long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (extra_edges < 0 || extra_edges > max_extra)
        throw std::invalid_argument("extra_edges out of range");

    Graph g(n);
    if (n == 1)
        return g;

    std::mt19937_64 rng(seed);
    std::vector<int> seq(n >= 2 ? n - 2 : 0);
    for (auto& v : seq)
        v = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    for (auto [u, v] : pruefer_decode(n, seq))
        g.add_edge(u, v);

    if (extra_edges > 0) {
        std::vector<std::pair<int, int>> pool;
        pool.reserve(static_cast<std::size_t>(max_extra));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v))
                    pool.emplace_back(u, v);
        // Partial Fisher-Yates: the first extra_edges slots are a uniform
        // sample without replacement.
        for (int i = 0; i < extra_edges; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            bounded(rng, static_cast<std::uint64_t>(pool.size() - i));
            std::swap(pool[i], pool[j]);
            g.add_edge(pool[i].first, pool[i].second);
        }
    }
    return g;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = 1;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
    const long long n = g.vertex_count();
    return static_cast<long long>(g.edge_count()) == n * (n - 1) / 2;
}

} // namespace alphadist
