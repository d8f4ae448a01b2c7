#ifndef ALPHADIST_DISTANCE_HPP
#define ALPHADIST_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "alphadist/graph.hpp"

namespace alphadist {

// Distance matrix of a connected graph with every derived scalar kept in
// exact integer arithmetic. Conversion to floating point happens only at the
// linear-algebra boundary.
struct DistanceData {
    int n = 0;
    std::vector<int> dist;            // n*n row-major, d(i,j)
    std::vector<std::int64_t> tr;     // transmissions Tr(v_i)
    std::int64_t wiener = 0;          // W = (1/2) sum of all distances
    std::int64_t sq_sum = 0;          // S = sum_{i<j} d(i,j)^2
    std::int64_t min_tr = 0;          // t
    std::int64_t max_tr = 0;          // T

    int d(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
    double avg_tr() const { return n > 0 ? 2.0 * static_cast<double>(wiener) / n : 0.0; }
    std::int64_t tr_square_sum() const;           // sum Tr(v_i)^2
    std::int64_t weighted_transmission(int u) const; // sum_{v != u} d(u,v) Tr(v)
};

// One BFS per vertex; O(n(n+m)). Throws disconnected_error on disconnected
// input.
DistanceData all_pairs_distances(const Graph& g);

bool is_transmission_regular(const DistanceData& d);

// Structural predicate used by equality-case detection: complete iff every
// off-diagonal distance is 1, i.e. 2W = n(n-1).
bool is_complete(const DistanceData& d);

} // namespace alphadist

#endif
