#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "alphadist/spectra.hpp"
#include "test_util.hpp"

using namespace alphadist;

namespace {

constexpr double k_sqrt3 = 1.7320508075688772;
// Roots of lambda^2 - 3.5 lambda + 2 (the 2x2 block of D_1/2(P_3) under the
// end-vertex symmetry), worked by hand; the third eigenvalue 0.5 comes from
// the independent end pair.
constexpr double k_p3_half_hi = 2.7807764064044151;
constexpr double k_p3_half_lo = 0.71922359359558486;

DistanceData p3() { return all_pairs_distances(make_family(Family::path, 3)); }

struct CorpusGraph {
    Graph g;
    DistanceData d;
};

std::vector<CorpusGraph> small_corpus(int count, std::uint64_t seed) {
    std::vector<CorpusGraph> out;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        Graph g = random_connected(n, static_cast<int>(rng() % (max_extra + 1)), rng());
        DistanceData d = all_pairs_distances(g);
        out.push_back({std::move(g), std::move(d)});
    }
    return out;
}

} // namespace

TEST_CASE("build_alpha_matrix") {
    const DistanceData d = p3();

    const SymMatrix d0 = build_alpha_matrix(d, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(d0(i, j) == d.d(i, j));

    const SymMatrix d1 = build_alpha_matrix(d, 1.0);
    CHECK(d1(0, 0) == 3.0);
    CHECK(d1(1, 1) == 2.0);
    CHECK(d1(2, 2) == 3.0);
    CHECK(d1(0, 1) == 0.0);

    const SymMatrix dh = build_alpha_matrix(d, 0.5);
    const double expected[3][3] = {{1.5, 0.5, 1.0}, {0.5, 1.0, 0.5}, {1.0, 0.5, 1.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(dh(i, j) == expected[i][j]);

    // 2 D_{1/2} = Q = Tr + D, entry by entry.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(2.0 * dh(i, j) == (i == j ? static_cast<double>(d.tr[i]) : 1.0 * d.d(i, j)));

    CHECK_THROWS_AS(build_alpha_matrix(d, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(build_alpha_matrix(d, 1.1), std::invalid_argument);
}

TEST_CASE("alpha_spectrum anchors") {
    const DistanceData d = p3();

    const Spectrum s0 = alpha_spectrum(d, 0.0);
    CHECK(s0.values[0] == doctest::Approx(1.0 + k_sqrt3).epsilon(1e-12));
    CHECK(s0.values[1] == doctest::Approx(1.0 - k_sqrt3).epsilon(1e-12));
    CHECK(s0.values[2] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(s0.radius == s0.values[0]);

    const Spectrum sh = alpha_spectrum(d, 0.5);
    CHECK(sh.values[0] == doctest::Approx(k_p3_half_hi).epsilon(1e-12));
    CHECK(sh.values[1] == doctest::Approx(k_p3_half_lo).epsilon(1e-12));
    CHECK(sh.values[2] == doctest::Approx(0.5).epsilon(1e-12));

    // S_4 at alpha 0: {2+sqrt7, -2, -2, 2-sqrt7}.
    const Spectrum s4 = alpha_spectrum(all_pairs_distances(make_family(Family::star, 4)), 0.0);
    CHECK(s4.values[0] == doctest::Approx(4.6457513110645906).epsilon(1e-12));
    CHECK(s4.values[1] == doctest::Approx(-0.64575131106459059).epsilon(1e-12));
    CHECK(s4.values[2] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(s4.values[3] == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("spectrum invariants across a random corpus") {
    for (const auto& [g, d] : small_corpus(40, 11)) {
        for (double alpha : {0.0, 0.3, 0.5, 0.7, 0.9, 1.0}) {
            const Spectrum s = alpha_spectrum(d, alpha);
            double sum = 0.0, centered_sum = 0.0;
            for (double v : s.values)
                sum += v;
            for (double eta : s.centered)
                centered_sum += eta;
            const double scale = 1.0 + std::fabs(sum);
            CHECK(std::fabs(sum - 2.0 * alpha * static_cast<double>(d.wiener)) <= 1e-9 * scale);
            CHECK(std::fabs(centered_sum) <= 1e-9 * scale);
            CHECK(s.radius >= d.avg_tr() - 1e-9); // Lemma 2.1
            const bool tight = std::fabs(s.radius - d.avg_tr()) <= 1e-9 * (1.0 + s.radius);
            CHECK(tight == is_transmission_regular(d));
            if (alpha >= 0.5)
                CHECK(s.smallest() >= -1e-9); // PSD on [1/2, 1]
        }
    }
}

TEST_CASE("alpha_energy anchors") {
    CHECK(alpha_energy(alpha_spectrum(p3(), 0.0)) ==
          doctest::Approx(2.0 + 2.0 * k_sqrt3).epsilon(1e-12));

    const DistanceData k3 = all_pairs_distances(make_family(Family::complete, 3));
    CHECK(alpha_energy(alpha_spectrum(k3, 0.5)) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK(alpha_energy(alpha_spectrum(p3(), 0.5)) ==
          doctest::Approx(2.8948861461421636).epsilon(1e-12));
}

TEST_CASE("energy at alpha = 1/2 matches half the signless-Laplacian energy") {
    // nu_i are computed from Q = Tr + D built independently of D_alpha.
    for (const auto& [g, d] : small_corpus(25, 23)) {
        SymMatrix q(d.n);
        for (int i = 0; i < d.n; ++i) {
            q.set(i, i, static_cast<double>(d.tr[i]));
            for (int j = i + 1; j < d.n; ++j)
                q.set(i, j, static_cast<double>(d.d(i, j)));
        }
        const auto nu = sym_eigenvalues(q);
        double dsle = 0.0;
        for (double v : nu)
            dsle += std::fabs(v - 2.0 * static_cast<double>(d.wiener) / d.n);
        const double energy_half = alpha_energy(alpha_spectrum(d, 0.5));
        CHECK(energy_half == doctest::Approx(0.5 * dsle).epsilon(1e-9));
    }
}

TEST_CASE("alpha_estrada anchors and overflow") {
    const DistanceData k3 = all_pairs_distances(make_family(Family::complete, 3));
    CHECK(alpha_estrada(alpha_spectrum(k3, 0.0)) ==
          doctest::Approx(8.1248149812735349).epsilon(1e-12));

    const DistanceData k2 = all_pairs_distances(make_family(Family::complete, 2));
    CHECK(alpha_estrada(alpha_spectrum(k2, 0.0)) ==
          doctest::Approx(3.0861612696304876).epsilon(1e-12));

    CHECK(alpha_estrada(alpha_spectrum(p3(), 0.0)) ==
          doctest::Approx(15.980621069770424).epsilon(1e-12));

    Spectrum huge;
    huge.n = 1;
    huge.values = {800.0};
    huge.centered = {800.0};
    huge.radius = 800.0;
    CHECK_THROWS_AS(alpha_estrada(huge), std::range_error);
}

TEST_CASE("moment identities") {
    const DistanceData d = p3();
    const MomentIdentities m = moment_identities(d, alpha_spectrum(d, 0.5));
    CHECK(m.sum_expected == 4.0);
    CHECK(m.sum == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(m.sq_sum_expected == 8.5); // (1/4)(9+4+9) + 2(1/4)6
    CHECK(m.sq_sum == doctest::Approx(8.5).epsilon(1e-12));

    const MomentIdentities m0 = moment_identities(d, alpha_spectrum(d, 0.0));
    CHECK(m0.sum_expected == 0.0);
    CHECK(m0.sum == doctest::Approx(0.0).epsilon(1e-12));

    for (int n : {3, 5, 9}) {
        const DistanceData kn = all_pairs_distances(make_family(Family::complete, n));
        const MomentIdentities mk = moment_identities(kn, alpha_spectrum(kn, 0.4));
        CHECK(mk.sum_expected == doctest::Approx(0.4 * n * (n - 1.0)).epsilon(1e-15));
        CHECK(mk.sum == doctest::Approx(mk.sum_expected).epsilon(1e-12));
    }
}

TEST_CASE("moment identities hold to relative 1e-9 on the corpus") {
    for (const auto& [g, d] : small_corpus(60, 37)) {
        for (double alpha : {0.0, 0.1, 0.5, 0.9, 0.99, 1.0}) {
            const MomentIdentities m = moment_identities(d, alpha_spectrum(d, alpha));
            CHECK(std::fabs(m.sum - m.sum_expected) <=
                  1e-9 * (1.0 + std::fabs(m.sum_expected)));
            CHECK(std::fabs(m.sq_sum - m.sq_sum_expected) <=
                  1e-9 * (1.0 + std::fabs(m.sq_sum_expected)));
        }
    }
}

TEST_CASE("centered power sums obey the k-th power inequality") {
    // sum |eta|^k <= (sum eta^2)^{k/2} for k = 2..5.
    for (const auto& [g, d] : small_corpus(30, 53)) {
        for (double alpha : {0.0, 0.4, 0.8}) {
            const Spectrum s = alpha_spectrum(d, alpha);
            double sq = 0.0;
            for (double eta : s.centered)
                sq += eta * eta;
            for (int k = 2; k <= 5; ++k) {
                double lhs = 0.0;
                for (double eta : s.centered)
                    lhs += std::pow(std::fabs(eta), k);
                CHECK(lhs <= std::pow(sq, k / 2.0) + 1e-9 * (1.0 + lhs));
            }
            // Lagrange-type bound on the largest centered value.
            const double eta1 = s.centered.front();
            if (d.n >= 2)
                CHECK(eta1 <= std::sqrt((d.n - 1.0) / d.n * sq) + 1e-9);
        }
    }
}

TEST_CASE("half-energy strictness when the spectrum is positive") {
    // sum |sigma_i - mean| < (n/2) sigma_1 whenever all sigma_i > 0.
    for (const auto& [g, d] : small_corpus(30, 71)) {
        for (double alpha : {0.5, 0.6, 0.75, 0.9}) {
            const Spectrum s = alpha_spectrum(d, alpha);
            if (s.smallest() <= 1e-9 * (1.0 + s.radius))
                continue;
            CHECK(d.n * s.radius / 2.0 - alpha_energy(s) > -1e-9);
        }
    }
}

TEST_CASE("tree distance checks") {
    const TreeChecks p3c = tree_distance_checks(make_family(Family::path, 3));
    CHECK(p3c.determinant == doctest::Approx(4.0).epsilon(1e-12)); // (-1)^2 * 2 * 2
    CHECK(p3c.positive_count == 1);

    const TreeChecks s4c = tree_distance_checks(make_family(Family::star, 4));
    CHECK(s4c.determinant == doctest::Approx(-12.0).epsilon(1e-12)); // (-1)^3 * 3 * 4
    CHECK(s4c.positive_count == 1);

    const TreeChecks k2c = tree_distance_checks(make_family(Family::complete, 2));
    CHECK(k2c.determinant == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k2c.positive_count == 1);

    CHECK_THROWS_AS(tree_distance_checks(make_family(Family::cycle, 4)),
                    std::invalid_argument);
}

TEST_CASE("tree determinant matches the LU oracle on random trees") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph t = testutil::oracle_random_tree(n, rng);
        REQUIRE(is_tree(t));
        const TreeChecks c = tree_distance_checks(t);
        const double lu =
            testutil::lu_determinant(testutil::distance_as_dense(all_pairs_distances(t)));
        const double formula = (n % 2 == 1 ? 1.0 : -1.0) * (n - 1.0) *
                               std::pow(2.0, n - 2.0);
        CHECK(c.determinant == doctest::Approx(formula).epsilon(1e-9));
        CHECK(lu == doctest::Approx(formula).epsilon(1e-9));
        CHECK(c.positive_count == 1);
    }
}
