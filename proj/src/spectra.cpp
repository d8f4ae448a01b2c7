#include "alphadist/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace alphadist {

SymMatrix build_alpha_matrix(const DistanceData& d, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1]");
    SymMatrix m(d.n);
    for (int i = 0; i < d.n; ++i) {
        m.set(i, i, alpha * static_cast<double>(d.tr[i]));
        for (int j = i + 1; j < d.n; ++j)
            m.set(i, j, (1.0 - alpha) * static_cast<double>(d.d(i, j)));
    }
    return m;
}

Spectrum alpha_spectrum(const DistanceData& d, double alpha, double tol) {
    Spectrum s;
    s.alpha = alpha;
    s.n = d.n;
    s.wiener = d.wiener;
    s.values = sym_eigenvalues(build_alpha_matrix(d, alpha), tol);
    s.radius = s.values.front();
    const double mean = s.center();
    s.centered.reserve(s.values.size());
    for (double v : s.values)
        s.centered.push_back(v - mean);
    return s;
}

double alpha_energy(const Spectrum& s) {
    double total = 0.0;
    for (double eta : s.centered)
        total += std::fabs(eta);
    return total;
}

double alpha_estrada(const Spectrum& s) {
    double total = 0.0;
    for (double v : s.values) {
        if (v > 700.0)
            throw std::range_error("alpha_estrada overflow: eigenvalue " +
                                   std::to_string(v) + " exceeds the exp() range");
        total += std::exp(v);
    }
    return total;
}

MomentIdentities moment_identities(const DistanceData& d, const Spectrum& s) {
    MomentIdentities m{};
    for (double v : s.values) {
        m.sum += v;
        m.sq_sum += v * v;
    }
    const double a = s.alpha;
    m.sum_expected = 2.0 * a * static_cast<double>(d.wiener);
    m.sq_sum_expected = a * a * static_cast<double>(d.tr_square_sum()) +
                        2.0 * (1.0 - a) * (1.0 - a) * static_cast<double>(d.sq_sum);
    return m;
}

GraphInvariants graph_invariants(const Spectrum& s) {
    GraphInvariants inv;
    inv.energy = alpha_energy(s);
    inv.estrada = alpha_estrada(s);
    for (double v : s.values) {
        inv.moment1 += v;
        inv.moment2 += v * v;
    }
    return inv;
}

TreeChecks tree_distance_checks(const Graph& g, double tol) {
    if (!is_tree(g))
        throw std::invalid_argument("tree_distance_checks needs a tree (connected, m = n-1)");
    const Spectrum s = alpha_spectrum(all_pairs_distances(g), 0.0);
    TreeChecks out;
    out.determinant = 1.0;
    for (double v : s.values) {
        out.determinant *= v;
        if (v > tol)
            ++out.positive_count;
    }
    return out;
}

} // namespace alphadist
