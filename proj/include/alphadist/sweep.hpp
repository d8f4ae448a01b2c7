#ifndef ALPHADIST_SWEEP_HPP
#define ALPHADIST_SWEEP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "alphadist/graph.hpp"
#include "alphadist/report.hpp"

namespace alphadist {

// Corpus selection for a verification sweep.
struct Corpus {
    enum class Kind { files, family, random };
    Kind kind = Kind::random;

    // kind == files: already-loaded (name, text) pairs; graph6 files may
    // carry one graph per line, edge lists one graph per file.
    std::vector<std::pair<std::string, std::string>> files;

    // kind == family
    Family family = Family::star;
    int n_min = 3;
    int n_max = 10;
    int part_a = -1;

    // kind == random: one graph per seed k in 0..seeds-1 with
    // n = n_min + (k mod span) and extra edges drawn from the per-seed RNG.
    int seeds = 200;
    int extra_min = 0;
    int extra_max = -1; // -1: up to the maximum for n
    std::uint64_t seed_base = 0;
};

struct SweepConfig {
    std::vector<double> alpha_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 0.99};
    double slack_tol = 1e-8;    // inequality tolerance, scaled by 1 + |actual|
    double identity_tol = 1e-9; // identity checks, scaled by 1 + |expected|
    std::vector<std::string> bound_selection; // empty or {"all"}: everything
    bool closed_form_checks = false; // star/complete family corpora only
    Corpus corpus;
};

SweepConfig default_verify_config();

struct CorpusEntry {
    std::string id;
    Graph graph;
};

// Materializes the corpus deterministically. Throws parse_error /
// std::invalid_argument on bad inputs.
std::vector<CorpusEntry> build_corpus(const Corpus& corpus);

// Runs every selected bound over corpus x alpha-grid and assembles the
// report, sorted by (graph id, alpha, bound label). Deterministic: identical
// configs yield byte-identical rendered reports.
Report run_verify(const SweepConfig& config);

} // namespace alphadist

#endif
