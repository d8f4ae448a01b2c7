#ifndef ALPHADIST_LINALG_HPP
#define ALPHADIST_LINALG_HPP

#include <utility>
#include <vector>

namespace alphadist {

// Dense real symmetric matrix, stored full row-major. set() writes both
// (i,j) and (j,i), so instances are symmetric by construction rather than
// merely close to symmetric.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    int size() const noexcept { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double value);
    double trace() const;
    const std::vector<double>& data() const noexcept { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

using Partition = std::vector<std::vector<int>>;

// Block-averaged matrix of a partitioned symmetric matrix:
//   entries[i][j] = (1/|K_i|) sum_{l in K_i} sum_{k in K_j} M_{lk}.
struct QuotientMatrix {
    int m = 0;
    std::vector<double> entries; // m*m row-major
    Partition blocks;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * m + j]; }
};

// All eigenvalues, sorted descending. Householder reduction to tridiagonal
// form followed by QL iteration with implicit shifts; iteration cap 100*n
// total sweeps. Throws convergence_error with the offending index and
// residual if the cap is hit.
std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol = 1e-12);

double frobenius_norm(const SymMatrix& m);

// Validates that the blocks are nonempty, disjoint and cover 0..n-1.
QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& blocks);

// Roots of the characteristic quadratic of a 2x2 quotient, (hi, lo).
// A slightly negative discriminant (below -1e-10*(1+trace^2)) means the
// quotient did not come from a symmetric matrix and is reported as an error.
std::pair<double, double> eigenvalues_2x2(const QuotientMatrix& q);

} // namespace alphadist

#endif
