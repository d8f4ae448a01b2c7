#ifndef ALPHADIST_CLOSED_FORMS_HPP
#define ALPHADIST_CLOSED_FORMS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "alphadist/graph.hpp"
#include "alphadist/spectra.hpp"

namespace alphadist {

enum class ClosedFormSource { star, complete, lemma22_independent, lemma22_clique };

// Spectrum given analytically as (eigenvalue, multiplicity) pairs. For the
// full-spectrum sources (star, complete) the multiplicities sum to n.
struct ClosedFormSpectrum {
    std::vector<std::pair<double, int>> values;
    ClosedFormSource source;

    // Expanded with multiplicity, sorted descending.
    std::vector<double> expanded() const;
};

// Star S_n with n >= 3: (2n-1)alpha - 2 with multiplicity n-2 plus the two
// roots (alpha*n + 2n - 4 +- sqrt((alpha-2)^2 n^2 + 8 alpha n - 12n - 8 alpha + 12))/2.
ClosedFormSpectrum star_spectrum(int n, double alpha);

// Spectral radius of S_n, n >= 4:
//   ((alpha+2)n - 4 + sqrt([(alpha+2)n-4]^2 + 4(n-1)(2 alpha - 2 n alpha + 1)))/2.
double star_radius(int n, double alpha);

// alpha-distance energy of S_n, n >= 3, evaluated exactly as the three-term
// closed form (one unsigned term plus two absolute-value terms).
double star_energy(int n, double alpha);

// K_n with n >= 2: {n-1 : 1, alpha*n - 1 : n-1}.
ClosedFormSpectrum complete_spectrum(int n, double alpha);

enum class SubsetKind { independent, clique };

struct SubsetEigenvalue {
    double value = 0.0;
    int min_multiplicity = 0;
    SubsetKind kind = SubsetKind::independent;
    std::int64_t transmission = 0; // the common h (independent) or h* (clique)
};

// Eigenvalue forced by a subset of >= 2 vertices with identical neighborhoods
// outside the subset that is fully independent or a clique:
//   independent -> alpha(h+2) - 2, clique -> alpha(h*+1) - 1,
// each with multiplicity at least |subset| - 1. Throws std::invalid_argument
// naming the first offending pair when the preconditions fail.
SubsetEigenvalue subset_eigenvalue(const Graph& g, const std::vector<int>& subset, double alpha);

// Number of eigenvalue clusters after agglomerating the sorted list with gaps
// larger than cluster_tol.
int distinct_eigenvalue_count(const Spectrum& s, double cluster_tol);

} // namespace alphadist

#endif
