#include "alphadist/distance.hpp"

#include <algorithm>

#include "alphadist/errors.hpp"

namespace alphadist {

std::int64_t DistanceData::tr_square_sum() const {
    std::int64_t total = 0;
    for (std::int64_t t : tr)
        total += t * t;
    return total;
}

std::int64_t DistanceData::weighted_transmission(int u) const {
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v)
        if (v != u)
            total += static_cast<std::int64_t>(d(u, v)) * tr[v];
    return total;
}

DistanceData all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceData out;
    out.n = n;
    out.dist.assign(static_cast<std::size_t>(n) * n, 0);
    out.tr.assign(n, 0);

    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        int* row = out.dist.data() + static_cast<std::size_t>(src) * n;
        std::fill(row, row + n, -1);
        row[src] = 0;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            const int u = queue[head++];
            for (int w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (tail != n)
            throw disconnected_error("graph is disconnected: vertex " +
                                     std::to_string(src) + " reaches only " +
                                     std::to_string(tail) + " of " + std::to_string(n) +
                                     " vertices");
        std::int64_t t = 0;
        for (int j = 0; j < n; ++j)
            t += row[j];
        out.tr[src] = t;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t dij = out.d(i, j);
            out.wiener += dij;
            out.sq_sum += dij * dij;
        }
    }
    out.min_tr = *std::min_element(out.tr.begin(), out.tr.end());
    out.max_tr = *std::max_element(out.tr.begin(), out.tr.end());
    return out;
}

bool is_transmission_regular(const DistanceData& d) {
    return d.min_tr == d.max_tr;
}

bool is_complete(const DistanceData& d) {
    return 2 * d.wiener == static_cast<std::int64_t>(d.n) * (d.n - 1);
}

} // namespace alphadist
