#include "alphadist/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "alphadist/distance.hpp"

namespace alphadist {

std::vector<double> ClosedFormSpectrum::expanded() const {
    std::vector<double> out;
    for (const auto& [value, mult] : values)
        out.insert(out.end(), mult, value);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1]");
}

double star_discriminant(int n, double alpha) {
    const double nn = static_cast<double>(n);
    return (alpha - 2.0) * (alpha - 2.0) * nn * nn + 8.0 * alpha * nn - 12.0 * nn -
           8.0 * alpha + 12.0;
}

} // namespace

ClosedFormSpectrum star_spectrum(int n, double alpha) {
    if (n < 3)
        throw std::invalid_argument("star_spectrum needs n >= 3");
    check_alpha(alpha);
    const double nn = static_cast<double>(n);
    const double root = std::sqrt(star_discriminant(n, alpha));
    const double base = alpha * nn + 2.0 * nn - 4.0;
    ClosedFormSpectrum cf;
    cf.source = ClosedFormSource::star;
    cf.values = {{(base + root) / 2.0, 1},
                 {(2.0 * nn - 1.0) * alpha - 2.0, n - 2},
                 {(base - root) / 2.0, 1}};
    return cf;
}

double star_radius(int n, double alpha) {
    if (n < 4)
        throw std::invalid_argument("star_radius needs n >= 4");
    check_alpha(alpha);
    const double nn = static_cast<double>(n);
    const double b = (alpha + 2.0) * nn - 4.0;
    const double rad = b * b + 4.0 * (nn - 1.0) * (2.0 * alpha - 2.0 * nn * alpha + 1.0);
    return (b + std::sqrt(rad)) / 2.0;
}

double star_energy(int n, double alpha) {
    if (n < 3)
        throw std::invalid_argument("star_energy needs n >= 3");
    check_alpha(alpha);
    const double nn = static_cast<double>(n);
    const double root = std::sqrt(star_discriminant(n, alpha));
    const double head = alpha * (-3.0 * nn * nn + 8.0 * nn - 4.0) + 2.0 * nn * nn - 4.0 * nn;
    return (head + nn * root) / (2.0 * nn) +
           std::fabs((head - nn * root) / (2.0 * nn)) +
           std::fabs(3.0 * alpha - 2.0 - 2.0 * alpha / nn) * (nn - 2.0);
}

ClosedFormSpectrum complete_spectrum(int n, double alpha) {
    if (n < 2)
        throw std::invalid_argument("complete_spectrum needs n >= 2");
    check_alpha(alpha);
    ClosedFormSpectrum cf;
    cf.source = ClosedFormSource::complete;
    cf.values = {{static_cast<double>(n - 1), 1}, {alpha * n - 1.0, n - 1}};
    return cf;
}

SubsetEigenvalue subset_eigenvalue(const Graph& g, const std::vector<int>& subset,
                                   double alpha) {
    check_alpha(alpha);
    if (subset.size() < 2)
        throw std::invalid_argument("subset needs at least 2 vertices");
    const int n = g.vertex_count();
    std::vector<char> in_subset(n, 0);
    for (int v : subset) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("subset vertex out of range");
        if (in_subset[v])
            throw std::invalid_argument("subset vertex repeated: " + std::to_string(v));
        in_subset[v] = 1;
    }

    const bool clique_first = g.has_edge(subset[0], subset[1]);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            if (g.has_edge(subset[i], subset[j]) != clique_first)
                throw std::invalid_argument(
                    "subset is neither independent nor a clique: pair (" +
                    std::to_string(subset[i]) + ", " + std::to_string(subset[j]) + ")");
        }
    }

    // Identical neighborhoods outside the subset.
    const auto outside = [&](int v) {
        std::vector<int> nb;
        for (int w : g.neighbors(v))
            if (!in_subset[w])
                nb.push_back(w);
        return nb; // already sorted
    };
    const std::vector<int> reference = outside(subset[0]);
    for (std::size_t i = 1; i < subset.size(); ++i) {
        if (outside(subset[i]) != reference)
            throw std::invalid_argument(
                "subset vertices have different outside neighborhoods: pair (" +
                std::to_string(subset[0]) + ", " + std::to_string(subset[i]) + ")");
    }

    const DistanceData dd = all_pairs_distances(g);
    const std::int64_t h = dd.tr[subset[0]];
    for (std::size_t i = 1; i < subset.size(); ++i)
        if (dd.tr[subset[i]] != h)
            throw std::invalid_argument(
                "subset vertices have different transmissions: pair (" +
                std::to_string(subset[0]) + ", " + std::to_string(subset[i]) + ")");

    SubsetEigenvalue out;
    out.transmission = h;
    out.min_multiplicity = static_cast<int>(subset.size()) - 1;
    if (clique_first) {
        out.kind = SubsetKind::clique;
        out.value = alpha * static_cast<double>(h + 1) - 1.0;
    } else {
        out.kind = SubsetKind::independent;
        out.value = alpha * static_cast<double>(h + 2) - 2.0;
    }
    return out;
}

int distinct_eigenvalue_count(const Spectrum& s, double cluster_tol) {
    if (cluster_tol <= 0.0)
        throw std::invalid_argument("cluster tolerance must be positive");
    int clusters = 0;
    double cluster_head = 0.0;
    for (double v : s.values) {
        if (clusters == 0 || cluster_head - v > cluster_tol) {
            ++clusters;
            cluster_head = v;
        }
    }
    return clusters;
}

} // namespace alphadist
