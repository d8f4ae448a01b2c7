#include "alphadist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "alphadist/errors.hpp"

namespace alphadist {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("matrix order must be >= 1");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void SymMatrix::set(int i, int j, double value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

double frobenius_norm(const SymMatrix& m) {
    double sum = 0.0;
    for (double v : m.data())
        sum += v * v;
    return std::sqrt(sum);
}

namespace {

// Householder reduction of a full symmetric matrix to tridiagonal form
// (diagonal d, subdiagonal e with e[0] unused). Follows the EISPACK tred1
// scheme; eigenvectors are not accumulated.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k)
                scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k)
                        g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i)
        d[i] = at(i, i);
}

// QL iteration with implicit shifts on a tridiagonal matrix (EISPACK tql1).
// Total iteration budget is 100*n; exceeding it raises convergence_error.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n, double tol) {
    if (n == 1)
        return;
    for (int i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    const double eps = std::max(tol, 2.0 * std::numeric_limits<double>::epsilon());
    long long budget = 100LL * n;

    for (int l = 0; l < n; ++l) {
        for (;;) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd)
                    break;
                ++m;
            }
            if (m == l)
                break;
            if (--budget < 0)
                throw convergence_error(static_cast<std::size_t>(l), std::fabs(e[l]));

            // Wilkinson-style implicit shift.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated_early = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated_early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated_early)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

} // namespace

std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("tolerance must be positive");
    const int n = m.size();
    std::vector<double> a = m.data();
    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize(a, n, d, e);
    ql_implicit(d, e, n, tol);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& blocks) {
    const int n = m.size();
    std::vector<char> seen(n, 0);
    for (const auto& block : blocks) {
        if (block.empty())
            throw std::invalid_argument("partition block is empty");
        for (int v : block) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition index out of range");
            if (seen[v])
                throw std::invalid_argument("partition blocks are not disjoint");
            seen[v] = 1;
        }
    }
    if (std::count(seen.begin(), seen.end(), char(1)) != n)
        throw std::invalid_argument("partition does not cover all indices");

    QuotientMatrix q;
    q.m = static_cast<int>(blocks.size());
    q.blocks = blocks;
    q.entries.assign(static_cast<std::size_t>(q.m) * q.m, 0.0);
    for (int bi = 0; bi < q.m; ++bi) {
        for (int bj = 0; bj < q.m; ++bj) {
            double sum = 0.0;
            for (int l : blocks[bi])
                for (int k : blocks[bj])
                    sum += m(l, k);
            q.entries[static_cast<std::size_t>(bi) * q.m + bj] =
                sum / static_cast<double>(blocks[bi].size());
        }
    }
    return q;
}

std::pair<double, double> eigenvalues_2x2(const QuotientMatrix& q) {
    if (q.m != 2)
        throw std::invalid_argument("eigenvalues_2x2 needs a 2x2 quotient");
    const double tr = q.at(0, 0) + q.at(1, 1);
    const double det = q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0);
    double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) {
        if (disc < -1e-10 * (1.0 + tr * tr))
            throw std::runtime_error("complex quotient eigenvalues: discriminant " +
                                     std::to_string(disc));
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    // Larger-magnitude root first, the other via the product, which avoids
    // cancellation when tr and root nearly coincide.
    double hi, lo;
    if (tr >= 0.0) {
        hi = (tr + root) / 2.0;
        lo = hi != 0.0 ? det / hi : (tr - root) / 2.0;
    } else {
        lo = (tr - root) / 2.0;
        hi = lo != 0.0 ? det / lo : (tr + root) / 2.0;
    }
    if (hi < lo)
        std::swap(hi, lo);
    return {hi, lo};
}

} // namespace alphadist
