#include "alphadist/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

#include "alphadist/closed_forms.hpp"
#include "alphadist/errors.hpp"
#include "alphadist/graph_io.hpp"

namespace alphadist {

SweepConfig default_verify_config() {
    SweepConfig config;
    config.corpus.kind = Corpus::Kind::random;
    config.corpus.n_min = 2;
    config.corpus.n_max = 12;
    config.corpus.seeds = 200;
    return config;
}

namespace {

std::string pad_number(long long value, int width) {
    std::string digits = std::to_string(value);
    if (static_cast<int>(digits.size()) < width)
        digits.insert(digits.begin(), width - digits.size(), '0');
    return digits;
}

void validate(const SweepConfig& config) {
    if (config.alpha_grid.empty())
        throw std::invalid_argument("alpha grid is empty");
    for (double a : config.alpha_grid)
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("alpha grid value outside [0,1]");
    if (!(config.slack_tol > 0.0) || !(config.identity_tol > 0.0))
        throw std::invalid_argument("tolerances must be positive");
    const Corpus& c = config.corpus;
    if (c.kind == Corpus::Kind::files && c.files.empty())
        throw std::invalid_argument("files corpus has no files");
    if (c.kind != Corpus::Kind::files) {
        if (c.n_min < 1 || c.n_max < c.n_min)
            throw std::invalid_argument("bad corpus order range");
    }
    if (c.kind == Corpus::Kind::random && c.seeds < 1)
        throw std::invalid_argument("random corpus needs at least one seed");
}

bool bound_selected(const std::vector<std::string>& selection, BoundId id) {
    if (selection.empty())
        return true;
    const std::string name = bound_id_name(id);
    for (const auto& entry : selection)
        if (entry == "all" || entry == name)
            return true;
    return false;
}

// Keeps the minimum-slack applicable record over all vertices.
void keep_worst(std::optional<BoundResult>& worst, BoundResult&& candidate) {
    if (!worst) {
        worst = std::move(candidate);
        return;
    }
    if (!candidate.applicable)
        return;
    if (!worst->applicable || candidate.slack < worst->slack)
        worst = std::move(candidate);
}

} // namespace

std::vector<CorpusEntry> build_corpus(const Corpus& corpus) {
    std::vector<CorpusEntry> out;
    switch (corpus.kind) {
    case Corpus::Kind::files: {
        for (const auto& [name, text] : corpus.files) {
            const auto graphs = parse_graph_text(text);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                out.push_back({"file/" + name + "/g" + pad_number(static_cast<long long>(i), 4),
                               graphs[i]});
            }
        }
        break;
    }
    case Corpus::Kind::family: {
        for (int n = corpus.n_min; n <= corpus.n_max; ++n) {
            out.push_back({"family/" + family_name(corpus.family) + "/n=" + pad_number(n, 6),
                           make_family(corpus.family, n, corpus.part_a)});
        }
        break;
    }
    case Corpus::Kind::random: {
        const int span = corpus.n_max - corpus.n_min + 1;
        for (int k = 0; k < corpus.seeds; ++k) {
            const int n = corpus.n_min + k % span;
            const long long max_extra =
                static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
            long long hi = corpus.extra_max < 0
                               ? max_extra
                               : std::min<long long>(corpus.extra_max, max_extra);
            long long lo = std::min<long long>(corpus.extra_min, hi);
            std::mt19937_64 rng(corpus.seed_base * 0x9e3779b97f4a7c15ULL +
                                static_cast<std::uint64_t>(k) + 1);
            const long long extra =
                lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
            out.push_back({"random/seed=" + pad_number(k, 4) + "/n=" + pad_number(n, 2),
                           random_connected(n, static_cast<int>(extra), rng())});
        }
        break;
    }
    }
    return out;
}

Report run_verify(const SweepConfig& config) {
    validate(config);

    std::vector<double> grid = config.alpha_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const BoundOptions opt{config.slack_tol};
    const auto selected = [&](BoundId id) { return bound_selected(config.bound_selection, id); };

    Report report;
    {
        std::string cfg = "corpus=";
        const Corpus& c = config.corpus;
        switch (c.kind) {
        case Corpus::Kind::files:
            cfg += "files(" + std::to_string(c.files.size()) + ")";
            break;
        case Corpus::Kind::family:
            cfg += "family(" + family_name(c.family) + ",n=" + std::to_string(c.n_min) + ".." +
                   std::to_string(c.n_max) + ")";
            break;
        case Corpus::Kind::random:
            cfg += "random(n=" + std::to_string(c.n_min) + ".." + std::to_string(c.n_max) +
                   ",extra=" + std::to_string(c.extra_min) + ".." +
                   (c.extra_max < 0 ? std::string("auto") : std::to_string(c.extra_max)) +
                   ",seeds=" + std::to_string(c.seeds) +
                   ",base=" + std::to_string(c.seed_base) + ")";
            break;
        }
        cfg += " alpha_grid=";
        for (std::size_t i = 0; i < grid.size(); ++i)
            cfg += (i ? "," : "[") + std::to_string(grid[i]);
        cfg += "]";
        cfg += " bounds=";
        if (config.bound_selection.empty()) {
            cfg += "all";
        } else {
            for (std::size_t i = 0; i < config.bound_selection.size(); ++i)
                cfg += (i ? "," : "") + config.bound_selection[i];
        }
        cfg += config.closed_form_checks ? " closed_form_checks=on" : " closed_form_checks=off";
        report.config_digest = cfg;
    }

    auto corpus = build_corpus(config.corpus);
    std::sort(corpus.begin(), corpus.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });

    ReportSummary& sum = report.summary;
    const auto absorb = [&](const BoundResult& r) {
        if (!r.applicable) {
            ++sum.inapplicable;
            return;
        }
        ++sum.bounds_evaluated;
        if (r.holds.value_or(false)) {
            ++sum.holds;
        } else {
            ++sum.violations;
        }
        if (r.slack < 0.0 &&
            (!sum.max_negative_slack || r.slack < *sum.max_negative_slack))
            sum.max_negative_slack = r.slack;
        const auto it = r.details.find("printed_differs");
        if (it != r.details.end() && it->second != 0.0)
            ++sum.printed_formula_discrepancies;
    };

    for (const auto& entry : corpus) {
        const DistanceData dd = all_pairs_distances(entry.graph);
        GraphRecord rec;
        rec.id = entry.id;
        rec.n = dd.n;
        rec.m = entry.graph.edge_count();
        rec.wiener = dd.wiener;
        rec.sq_sum = dd.sq_sum;
        rec.min_tr = dd.min_tr;
        rec.max_tr = dd.max_tr;
        rec.avg_tr = dd.avg_tr();

        if (dd.n >= 2 && selected(BoundId::L3_7)) {
            std::optional<BoundResult> lo, hi;
            for (int v = 0; v < dd.n; ++v) {
                auto pair = weighted_transmission_bounds(dd, v, opt);
                keep_worst(lo, std::move(pair[0]));
                keep_worst(hi, std::move(pair[1]));
            }
            rec.alpha_free_bounds.push_back(std::move(*lo));
            rec.alpha_free_bounds.push_back(std::move(*hi));
            for (const auto& r : rec.alpha_free_bounds)
                absorb(r);
        }

        for (double alpha : grid) {
            const Spectrum spectrum = alpha_spectrum(dd, alpha);
            const GraphInvariants inv = graph_invariants(spectrum);
            const MomentIdentities mom = moment_identities(dd, spectrum);

            AlphaRecord arec;
            arec.alpha = alpha;
            arec.sigma_1 = spectrum.radius;
            arec.sigma_n = spectrum.smallest();
            arec.energy = inv.energy;
            arec.estrada = inv.estrada;
            arec.moment1_dev = std::fabs(mom.sum - mom.sum_expected);
            arec.moment2_dev = std::fabs(mom.sq_sum - mom.sq_sum_expected);
            if (arec.moment1_dev > config.identity_tol * (1.0 + std::fabs(mom.sum_expected)))
                ++sum.identity_violations;
            if (arec.moment2_dev > config.identity_tol * (1.0 + std::fabs(mom.sq_sum_expected)))
                ++sum.identity_violations;

            if (dd.n >= 2) {
                auto append = [&](std::vector<BoundResult>&& results) {
                    for (auto& r : results)
                        arec.bounds.push_back(std::move(r));
                };
                for (auto& r : radius_bounds(dd, spectrum, opt))
                    if (selected(r.id))
                        arec.bounds.push_back(std::move(r));
                for (auto& r : energy_bounds(dd, spectrum, inv, opt))
                    if (selected(r.id))
                        arec.bounds.push_back(std::move(r));
                for (auto& r : estrada_bounds(dd, spectrum, inv, opt))
                    if (selected(r.id))
                        arec.bounds.push_back(std::move(r));

                if (selected(BoundId::P3_12) && dd.n >= 3) {
                    std::optional<BoundResult> worst;
                    for (int v = 0; v < dd.n; ++v)
                        keep_worst(worst, spread_bound(dd, spectrum, v, opt));
                    arec.bounds.push_back(std::move(*worst));
                }

                if (selected(BoundId::P3_6)) {
                    append(poly_rowsum_bound(dd, spectrum, Polynomial{{0.0, 1.0}, "x"}, opt));
                    append(poly_rowsum_bound(dd, spectrum,
                                             Polynomial{{0.0, 0.0, 1.0}, "x^2"}, opt));
                    const double b =
                        (1.0 - alpha) * (static_cast<double>(dd.min_tr) - 1.0);
                    append(poly_rowsum_bound(
                        dd, spectrum, Polynomial{{0.0, -b, 1.0}, "x^2-(1-a)(t-1)x"}, opt));
                }

                if (selected(BoundId::L3_11)) {
                    Partition blocks(2);
                    const int half = (dd.n + 1) / 2;
                    for (int v = 0; v < dd.n; ++v)
                        blocks[v < half ? 0 : 1].push_back(v);
                    append(quotient_interlacing_check(build_alpha_matrix(dd, alpha), spectrum,
                                                      blocks, opt));
                }

                std::sort(arec.bounds.begin(), arec.bounds.end(),
                          [](const BoundResult& a, const BoundResult& b) {
                              return a.label() < b.label();
                          });
                for (const auto& r : arec.bounds)
                    absorb(r);
            }

            if (config.closed_form_checks && config.corpus.kind == Corpus::Kind::family) {
                std::optional<std::vector<double>> expected;
                if (config.corpus.family == Family::star && dd.n >= 3)
                    expected = star_spectrum(dd.n, alpha).expanded();
                else if (config.corpus.family == Family::complete && dd.n >= 2)
                    expected = complete_spectrum(dd.n, alpha).expanded();
                if (expected) {
                    double dev = 0.0;
                    for (int i = 0; i < dd.n; ++i)
                        dev = std::max(dev, std::fabs((*expected)[i] - spectrum.values[i]));
                    if (!sum.closed_form_max_deviation ||
                        dev > *sum.closed_form_max_deviation)
                        sum.closed_form_max_deviation = dev;
                    if (dev > config.identity_tol * (1.0 + std::fabs(spectrum.radius)))
                        ++sum.identity_violations;
                }
            }

            rec.alphas.push_back(std::move(arec));
        }
        report.graphs.push_back(std::move(rec));
    }
    return report;
}

} // namespace alphadist
