// alphadist: alpha-distance spectra, energies, Estrada indices and the full
// inequality suite over graph corpora.
//
//   alphadist spectrum --family star --n 4 --alpha 0
//   alphadist spectrum --input graphs.g6 --alpha-grid 0,0.5,1
//   alphadist verify                       # default random corpus, all bounds
//   alphadist verify --family star --n-range 3:30 --closed-form-checks
//
// Exit codes: 0 ok, 1 bound/identity violations, 2 parse or config error,
// 3 disconnected input.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "alphadist/closed_forms.hpp"
#include "alphadist/errors.hpp"
#include "alphadist/graph_io.hpp"
#include "alphadist/sweep.hpp"

namespace {

using namespace alphadist;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size())
            throw std::invalid_argument("bad alpha value: " + token);
        grid.push_back(value);
    }
    if (grid.empty())
        throw std::invalid_argument("alpha grid is empty");
    return grid;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::string fmt17(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

struct SpectrumArgs {
    std::string input;
    std::string family;
    int n = 0;
    int part_a = -1;
    std::string format = "auto";
    std::string alpha_grid = "0";
    double tol = 1e-12;
};

int run_spectrum(const SpectrumArgs& args) {
    std::vector<Graph> graphs;
    if (!args.family.empty()) {
        graphs.push_back(make_family(family_from_string(args.family), args.n, args.part_a));
    } else if (!args.input.empty()) {
        const std::string text = read_input(args.input);
        if (args.format == "auto")
            graphs = parse_graph_text(text);
        else if (args.format == "graph6")
            graphs = parse_graph_text(text, TextFormat::graph6);
        else if (args.format == "edgelist")
            graphs = parse_graph_text(text, TextFormat::edge_list);
        else
            throw std::invalid_argument("unknown format: " + args.format);
    } else {
        throw std::invalid_argument("spectrum needs --input or --family");
    }

    const std::vector<double> grid = parse_grid(args.alpha_grid);
    for (const Graph& g : graphs) {
        const DistanceData dd = all_pairs_distances(g);
        std::printf("n=%d m=%d W=%lld S=%lld Tr: min=%lld max=%lld avg=%s\n", dd.n,
                    g.edge_count(), static_cast<long long>(dd.wiener),
                    static_cast<long long>(dd.sq_sum), static_cast<long long>(dd.min_tr),
                    static_cast<long long>(dd.max_tr), fmt17(dd.avg_tr()).c_str());
        for (double alpha : grid) {
            const Spectrum s = alpha_spectrum(dd, alpha, args.tol);
            std::printf("alpha=%s\n", fmt17(alpha).c_str());
            std::string line = "  sigma = [";
            for (std::size_t i = 0; i < s.values.size(); ++i)
                line += (i ? ", " : "") + fmt17(s.values[i]);
            line += "]";
            std::printf("%s\n", line.c_str());
            std::printf("  energy = %s\n", fmt17(alpha_energy(s)).c_str());
            std::printf("  estrada = %s\n", fmt17(alpha_estrada(s)).c_str());
        }
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> inputs;
    std::string family;
    std::string n_range;
    int part_a = -1;
    bool random = false;
    int seeds = 200;
    std::string extra_range;
    std::uint64_t seed_base = 0;
    std::string alpha_grid;
    std::string bounds;
    double slack_tol = 1e-8;
    double identity_tol = 1e-9;
    bool closed_form_checks = false;
    std::string report = "text";
    std::string out;
};

int run_verify_cmd(const VerifyArgs& args) {
    SweepConfig config = default_verify_config();
    config.slack_tol = args.slack_tol;
    config.identity_tol = args.identity_tol;
    config.closed_form_checks = args.closed_form_checks;
    if (!args.alpha_grid.empty())
        config.alpha_grid = parse_grid(args.alpha_grid);
    if (!args.bounds.empty() && args.bounds != "all") {
        std::stringstream ss(args.bounds);
        std::string token;
        config.bound_selection.clear();
        while (std::getline(ss, token, ','))
            if (!token.empty())
                config.bound_selection.push_back(token);
    }

    if (!args.inputs.empty()) {
        config.corpus.kind = Corpus::Kind::files;
        for (const auto& path : args.inputs)
            config.corpus.files.emplace_back(path == "-" ? "stdin" : path, read_input(path));
    } else if (!args.family.empty()) {
        config.corpus.kind = Corpus::Kind::family;
        config.corpus.family = family_from_string(args.family);
        config.corpus.part_a = args.part_a;
        if (!args.n_range.empty())
            std::tie(config.corpus.n_min, config.corpus.n_max) = parse_range(args.n_range);
    } else {
        config.corpus.kind = Corpus::Kind::random;
        config.corpus.seeds = args.seeds;
        config.corpus.seed_base = args.seed_base;
        if (!args.n_range.empty())
            std::tie(config.corpus.n_min, config.corpus.n_max) = parse_range(args.n_range);
        if (!args.extra_range.empty())
            std::tie(config.corpus.extra_min, config.corpus.extra_max) =
                parse_range(args.extra_range);
    }

    const Report report = run_verify(config);
    const std::string rendered = render_report(report, report_format_from_string(args.report));
    if (args.out.empty() || args.out == "-") {
        std::fwrite(rendered.data(), 1, rendered.size(), stdout);
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot open output file: " + args.out);
        out.write(rendered.data(), static_cast<std::streamsize>(rendered.size()));
    }
    return report.summary.violations + report.summary.identity_violations > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-distance spectra and bound verification"};
    app.require_subcommand(1);

    SpectrumArgs sargs;
    VerifyArgs vargs;

    if (const char* env_tol = std::getenv("ALPHADIST_TOL")) {
        try {
            vargs.slack_tol = std::stod(env_tol);
            sargs.tol = std::min(sargs.tol, vargs.slack_tol);
        } catch (const std::exception&) {
            std::fprintf(stderr, "error: bad ALPHADIST_TOL value \"%s\"\n", env_tol);
            return 2;
        }
    }

    auto* spectrum = app.add_subcommand("spectrum", "print spectrum, energy and Estrada index");
    spectrum->add_option("--input,-i", sargs.input, "input path or '-' for stdin");
    spectrum->add_option("--family", sargs.family,
                         "path|cycle|star|complete|complete_bipartite");
    spectrum->add_option("--n", sargs.n, "family order");
    spectrum->add_option("--a", sargs.part_a, "first part size for complete_bipartite");
    spectrum->add_option("--format", sargs.format, "auto|graph6|edgelist");
    spectrum->add_option("--alpha", sargs.alpha_grid, "alpha value or comma list");
    spectrum->add_option("--alpha-grid", sargs.alpha_grid, "comma list of alpha values");
    spectrum->add_option("--tol", sargs.tol, "eigensolver tolerance");

    auto* verify = app.add_subcommand("verify", "evaluate the bound suite over a corpus");
    verify->add_option("--input,-i", vargs.inputs, "input path(s), '-' for stdin");
    verify->add_option("--family", vargs.family, "family corpus");
    verify->add_option("--a", vargs.part_a, "first part size for complete_bipartite");
    verify->add_option("--n-range", vargs.n_range, "order range A:B");
    verify->add_flag("--random", vargs.random, "random corpus (default)");
    verify->add_option("--seeds", vargs.seeds, "number of random graphs");
    verify->add_option("--extra-range", vargs.extra_range, "extra-edge range A:B");
    verify->add_option("--seed", vargs.seed_base, "random corpus base seed");
    verify->add_option("--alpha-grid", vargs.alpha_grid, "comma list of alpha values");
    verify->add_option("--bounds", vargs.bounds, "comma list of bound ids, or 'all'");
    verify->add_option("--tol", vargs.slack_tol, "inequality slack tolerance");
    verify->add_option("--identity-tol", vargs.identity_tol, "identity-check tolerance");
    verify->add_flag("--closed-form-checks", vargs.closed_form_checks,
                     "cross-check star/complete family spectra against closed forms");
    verify->add_option("--report", vargs.report, "json|csv|text");
    verify->add_option("--out,-o", vargs.out, "report output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed())
            return run_spectrum(sargs);
        return run_verify_cmd(vargs);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const disconnected_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
