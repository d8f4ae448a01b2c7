#ifndef ALPHADIST_BOUNDS_HPP
#define ALPHADIST_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alphadist/distance.hpp"
#include "alphadist/linalg.hpp"
#include "alphadist/spectra.hpp"

namespace alphadist {

enum class BoundId {
    L2_1,  // rho_alpha >= 2W/n
    P3_4,  // min Tr <= rho_alpha <= max Tr
    T3_8,  // row-sum quadratic bracket on sigma_1 (derived +4C form)
    T3_10, // sigma_1 <= 2aW/n + sqrt((n-1)/n (|D_a|_F^2 - 4a^2W^2/n))
    T2_7,  // energy >= 2(1-a)(n-1)
    T2_11, // energy <= sqrt(nZ)
    T2_13, // energy <= sqrt((a^2 sum Tr^2 + 2(1-a)^2 S) n - 4a^2W^2)
    P3_2,  // n sigma_1 > 2 energy (strict)
    P2_10, // |D_a|_F < sqrt(a^2 sum Tr^2 + (1-a)^2 (sum Tr)^2 / n) (strict)
    T3_14, // estrada <= n + 2aW - 1 - omega + e^omega
    T3_15, // estrada >= sqrt(n + 4aW + n(n-1) e^{4aW/n})
    T3_16, // estrada >= e^{2W/n} + (n-1) + 2aW - 2W/n
    C3_17, // transmission regular: estrada >= e^r + (n-1) + 2ar - r
    T3_18, // estrada <= e^{2aW/n} (n - 1 - energy + e^energy)
    P3_12, // spread sigma_1 - sigma_n >= quotient gap at a vertex
    P3_6,  // min R_i(p(D_a)) <= p(sigma_1) <= max R_i(p(D_a))
    L3_7,  // bracket on sum_{v != u} d(u,v) Tr(v)
    L3_11, // quotient eigenvalue interlacing
};

enum class Side { lower, upper };

std::string bound_id_name(BoundId id);

// One evaluated inequality instance. `slack` is signed with positive meaning
// satisfied; `holds` is slack >= -tol*(1+|actual|). When the bound's
// precondition fails (alpha range, graph class), applicable is false and
// holds is unset.
struct BoundResult {
    BoundId id;
    Side side = Side::lower;
    std::string variant;      // "x^2" for P3.6 polynomials, "mu1"/"mu2" for L3.11
    double bound_value = 0.0;
    double actual_value = 0.0;
    double slack = 0.0;
    std::optional<bool> holds;
    bool applicable = true;
    std::optional<bool> equality_structural;
    std::map<std::string, double> details;

    // "T3.8/lower", "P3.6[x^2]/upper", ...
    std::string label() const;
};

struct BoundOptions {
    double tol = 1e-8; // slack tolerance, scaled by 1 + |actual|
};

// p(x) = coeffs[0] + coeffs[1] x + ... , degree <= 4.
struct Polynomial {
    std::vector<double> coeffs; // ascending degree
    std::string name;           // used as the record variant

    double eval(double x) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Lemma 2.1, Prop 3.4, Thm 3.8 (alpha in [1/2,1)), Thm 3.10.
std::vector<BoundResult> radius_bounds(const DistanceData& d, const Spectrum& s,
                                       const BoundOptions& opt = {});

// Thm 2.7 and Prop 3.2 (alpha in [1/2,1)), Thm 2.11, Thm 2.13, Prop 2.10.
std::vector<BoundResult> energy_bounds(const DistanceData& d, const Spectrum& s,
                                       const GraphInvariants& inv,
                                       const BoundOptions& opt = {});

// Thms 3.14, 3.15, 3.16, 3.18 and Cor 3.17 (transmission regular only).
std::vector<BoundResult> estrada_bounds(const DistanceData& d, const Spectrum& s,
                                        const GraphInvariants& inv,
                                        const BoundOptions& opt = {});

// Prop 3.12 via the explicit 2x2 quotient at `vertex`; the printed radicand is
// evaluated alongside and logged in details. Needs n >= 3.
BoundResult spread_bound(const DistanceData& d, const Spectrum& s, int vertex,
                         const BoundOptions& opt = {});

// Prop 3.6: row-sum bracket of p(D_alpha) around p(sigma_1), lower and upper
// records. Matrix powers are computed explicitly (degree <= 4). Inapplicable
// outside alpha in [1/2,1).
std::vector<BoundResult> poly_rowsum_bound(const DistanceData& d, const Spectrum& s,
                                           const Polynomial& p,
                                           const BoundOptions& opt = {});

// Lemma 3.7 bracket for one vertex, lower and upper records; alpha-free.
std::vector<BoundResult> weighted_transmission_bounds(const DistanceData& d, int vertex,
                                                      const BoundOptions& opt = {});

// Lemma 3.11 for a 2-block partition of D_alpha: four records checking
// sigma_1 >= mu_1 >= sigma_{n-1} and sigma_2 >= mu_2 >= sigma_n.
std::vector<BoundResult> quotient_interlacing_check(const SymMatrix& m, const Spectrum& s,
                                                    const Partition& blocks,
                                                    const BoundOptions& opt = {});

} // namespace alphadist

#endif
