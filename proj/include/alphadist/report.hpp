#ifndef ALPHADIST_REPORT_HPP
#define ALPHADIST_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphadist/bounds.hpp"

namespace alphadist {

// Spectrum digest plus all alpha-dependent bound records for one grid point.
struct AlphaRecord {
    double alpha = 0.0;
    double sigma_1 = 0.0;
    double sigma_n = 0.0;
    double energy = 0.0;
    double estrada = 0.0;
    double moment1_dev = 0.0; // |sum sigma - 2aW|, identity residual
    double moment2_dev = 0.0; // |sum sigma^2 - (a^2 sum Tr^2 + 2(1-a)^2 S)|
    std::vector<BoundResult> bounds;
};

struct GraphRecord {
    std::string id;
    int n = 0;
    int m = 0;
    std::int64_t wiener = 0;
    std::int64_t sq_sum = 0;
    std::int64_t min_tr = 0;
    std::int64_t max_tr = 0;
    double avg_tr = 0.0;
    std::vector<BoundResult> alpha_free_bounds; // Lemma 3.7 records
    std::vector<AlphaRecord> alphas;
};

struct ReportSummary {
    std::int64_t bounds_evaluated = 0;
    std::int64_t holds = 0;
    std::int64_t violations = 0;
    std::int64_t inapplicable = 0;
    std::int64_t identity_violations = 0;
    std::int64_t printed_formula_discrepancies = 0;
    std::optional<double> max_negative_slack;       // most negative slack seen
    std::optional<double> closed_form_max_deviation;
};

struct Report {
    std::string config_digest; // one-line echo of the sweep configuration
    std::vector<GraphRecord> graphs;
    ReportSummary summary;
};

enum class ReportFormat { json, csv, text };

ReportFormat report_format_from_string(const std::string& name);

// JSON with sorted keys and 17-significant-digit numbers so identical runs
// serialize byte-identically; CSV one row per bound record; text summary.
std::string render_report(const Report& report, ReportFormat format);

} // namespace alphadist

#endif
