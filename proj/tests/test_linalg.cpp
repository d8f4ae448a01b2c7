#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "alphadist/errors.hpp"
#include "alphadist/linalg.hpp"
#include "alphadist/spectra.hpp"
#include "test_util.hpp"

using namespace alphadist;

namespace {

constexpr double k_sqrt3 = 1.7320508075688772;

SymMatrix p3_distance_matrix() {
    return testutil::dense_to_sym({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
}

SymMatrix random_symmetric(int n, std::mt19937_64& rng) {
    SymMatrix m(n);
    std::normal_distribution<double> dist(0.0, 3.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m.set(i, j, dist(rng));
    return m;
}

} // namespace

TEST_CASE("tiny spectra") {
    SymMatrix eye(2);
    eye.set(0, 0, 1.0);
    eye.set(1, 1, 1.0);
    CHECK(sym_eigenvalues(eye) == std::vector<double>{1.0, 1.0});

    SymMatrix swap(2);
    swap.set(0, 1, 1.0);
    auto ev = sym_eigenvalues(swap);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(-1.0).epsilon(1e-14));

    SymMatrix one(1);
    one.set(0, 0, 4.5);
    CHECK(sym_eigenvalues(one) == std::vector<double>{4.5});
}

TEST_CASE("characteristic polynomial oracle for D(P_3)") {
    // lambda^3 - 6 lambda - 4 = (lambda + 2)(lambda^2 - 2 lambda - 2),
    // roots 1 + sqrt3, 1 - sqrt3, -2 (worked by hand).
    const auto ev = sym_eigenvalues(p3_distance_matrix());
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(1.0 + k_sqrt3).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0 - k_sqrt3).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("frobenius norm") {
    SymMatrix eye(3);
    for (int i = 0; i < 3; ++i)
        eye.set(i, i, 1.0);
    CHECK(frobenius_norm(eye) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(frobenius_norm(p3_distance_matrix()) ==
          doctest::Approx(std::sqrt(12.0)).epsilon(1e-15)); // |D|_F^2 = 2S = 12
    CHECK(frobenius_norm(SymMatrix(4)) == 0.0);
}

TEST_CASE("moment identities on random symmetric matrices") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const SymMatrix m = random_symmetric(n, rng);
        const auto ev = sym_eigenvalues(m);
        REQUIRE(static_cast<int>(ev.size()) == n);
        CHECK(std::is_sorted(ev.rbegin(), ev.rend()));

        double sum = 0.0, sq = 0.0;
        for (double v : ev) {
            sum += v;
            sq += v * v;
        }
        const double fro2 = frobenius_norm(m) * frobenius_norm(m);
        CHECK(std::fabs(sum - m.trace()) <= 1e-9 * (1.0 + fro2));
        CHECK(std::fabs(sq - fro2) <= 1e-9 * (1.0 + fro2));
    }
}

TEST_CASE("eigenvalues are invariant under permutation similarity") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const SymMatrix m = random_symmetric(n, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SymMatrix permuted(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                permuted.set(i, j, m(perm[i], perm[j]));
        const auto a = sym_eigenvalues(m);
        const auto b = sym_eigenvalues(permuted);
        for (int i = 0; i < n; ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
    }
}

TEST_CASE("eigensolver is bitwise deterministic") {
    std::mt19937_64 rng(5);
    const SymMatrix m = random_symmetric(9, rng);
    CHECK(sym_eigenvalues(m) == sym_eigenvalues(m));
}

TEST_CASE("quotient matrix") {
    const SymMatrix d = p3_distance_matrix();

    // Singleton partition reproduces the matrix.
    const QuotientMatrix full = quotient_matrix(d, {{0}, {1}, {2}});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(full.at(i, j) == d(i, j));

    // Center vs ends, averaged by hand.
    const QuotientMatrix q = quotient_matrix(d, {{1}, {0, 2}});
    CHECK(q.at(0, 0) == 0.0);
    CHECK(q.at(0, 1) == 2.0);
    CHECK(q.at(1, 0) == 1.0);
    CHECK(q.at(1, 1) == 2.0);

    // One block: 1x1 of the average row sum.
    const QuotientMatrix one = quotient_matrix(d, {{0, 1, 2}});
    CHECK(one.at(0, 0) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}}), std::invalid_argument);      // not covering
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}, {1, 2}}), std::invalid_argument); // overlap
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1, 2}, {}}), std::invalid_argument);  // empty block
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1, 2, 3}}), std::invalid_argument);   // range
}

TEST_CASE("eigenvalues_2x2") {
    const SymMatrix d = p3_distance_matrix();
    const auto [hi, lo] = eigenvalues_2x2(quotient_matrix(d, {{1}, {0, 2}}));
    CHECK(hi == doctest::Approx(1.0 + k_sqrt3).epsilon(1e-14)); // lambda^2-2lambda-2
    CHECK(lo == doctest::Approx(1.0 - k_sqrt3).epsilon(1e-14));

    QuotientMatrix diag;
    diag.m = 2;
    diag.entries = {7.0, 0.0, 0.0, -3.0};
    CHECK(eigenvalues_2x2(diag) == std::pair<double, double>{7.0, -3.0});

    QuotientMatrix repeated;
    repeated.m = 2;
    repeated.entries = {2.0, 0.0, 0.0, 2.0};
    const auto [a, b] = eigenvalues_2x2(repeated);
    CHECK(a == doctest::Approx(2.0));
    CHECK(b == doctest::Approx(2.0));

    // Rotation-like entries cannot come from a symmetric quotient.
    QuotientMatrix rotation;
    rotation.m = 2;
    rotation.entries = {0.0, 1.0, -1.0, 0.0};
    CHECK_THROWS(eigenvalues_2x2(rotation));

    QuotientMatrix wrong;
    wrong.m = 3;
    CHECK_THROWS_AS(eigenvalues_2x2(wrong), std::invalid_argument);
}

TEST_CASE("2-block quotient interlacing against the full spectrum") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_connected(n, static_cast<int>(rng() % (max_extra + 1)), rng());
        const DistanceData dd = all_pairs_distances(g);
        const double alpha = static_cast<double>(rng() % 1000) / 999.0;
        const SymMatrix m = build_alpha_matrix(dd, alpha);
        const auto sigma = sym_eigenvalues(m);

        Partition blocks(2);
        for (int v = 0; v < n; ++v)
            blocks[rng() % 2].push_back(v);
        if (blocks[0].empty() || blocks[1].empty())
            continue;
        const auto [mu1, mu2] = eigenvalues_2x2(quotient_matrix(m, blocks));
        CHECK(sigma[0] + 1e-8 >= mu1);
        CHECK(mu1 >= sigma[n - 2] - 1e-8);
        CHECK(sigma[1] + 1e-8 >= mu2);
        CHECK(mu2 >= sigma[n - 1] - 1e-8);
    }
}

TEST_CASE("iteration cap terminates on non-finite input") {
    // NaN entries can never satisfy the deflation test; the 100n budget must
    // trip instead of looping forever.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SymMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            m.set(i, j, nan);
    try {
        sym_eigenvalues(m);
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        CHECK(e.index() < 3);
    }
    CHECK_THROWS_AS(sym_eigenvalues(m, 0.0), std::invalid_argument);
}
