#ifndef ALPHADIST_SPECTRA_HPP
#define ALPHADIST_SPECTRA_HPP

#include <cstdint>
#include <vector>

#include "alphadist/distance.hpp"
#include "alphadist/graph.hpp"
#include "alphadist/linalg.hpp"

namespace alphadist {

// Eigenvalues of D_alpha(G) = alpha*Tr(G) + (1-alpha)*D(G), descending, with
// the centered values eta_i = sigma_i - 2*alpha*W/n used by the energy.
struct Spectrum {
    double alpha = 0.0;
    std::vector<double> values;   // sigma_1 >= ... >= sigma_n
    std::vector<double> centered; // eta_i, sums to 0 up to roundoff
    double radius = 0.0;          // sigma_1
    int n = 0;
    std::int64_t wiener = 0;

    double center() const { return n > 0 ? 2.0 * alpha * static_cast<double>(wiener) / n : 0.0; }
    double smallest() const { return values.back(); }
};

struct GraphInvariants {
    double energy = 0.0;  // varsigma_alpha
    double estrada = 0.0; // DEE_alpha
    double moment1 = 0.0; // sum sigma_i
    double moment2 = 0.0; // sum sigma_i^2
};

struct MomentIdentities {
    double sum;          // sum sigma_i
    double sum_expected; // 2 alpha W
    double sq_sum;          // sum sigma_i^2
    double sq_sum_expected; // alpha^2 sum Tr^2 + 2 (1-alpha)^2 S
};

struct TreeChecks {
    double determinant = 0.0; // product of the alpha = 0 eigenvalues
    int positive_count = 0;
};

// Diagonal alpha*Tr(v_i), off-diagonal (1-alpha)*d(v_i,v_j).
// Throws std::invalid_argument when alpha is outside [0,1].
SymMatrix build_alpha_matrix(const DistanceData& d, double alpha);

Spectrum alpha_spectrum(const DistanceData& d, double alpha, double tol = 1e-12);

// sum |eta_i|; equals DE(G) at alpha = 0 and DSLE(G)/2 at alpha = 1/2.
double alpha_energy(const Spectrum& s);

// sum e^{sigma_i}. Throws std::range_error when an eigenvalue exceeds the
// exp() range (sigma > 700).
double alpha_estrada(const Spectrum& s);

MomentIdentities moment_identities(const DistanceData& d, const Spectrum& s);

GraphInvariants graph_invariants(const Spectrum& s);

// Distance-matrix checks for trees: det D(T) as the eigenvalue product and
// the count of eigenvalues above `tol`. Throws on non-tree input.
TreeChecks tree_distance_checks(const Graph& g, double tol = 1e-9);

} // namespace alphadist

#endif
