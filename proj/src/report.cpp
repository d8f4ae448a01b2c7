#include "alphadist/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace alphadist {

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown report format: " + name);
}

namespace {

// 17 significant digits round-trip doubles exactly and make reports
// byte-comparable across runs.
std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string json_number(double v) {
    // JSON has no nan/inf literals; those values are emitted as null and the
    // record's details carry the overflow flag.
    return std::isfinite(v) ? fmt(v) : "null";
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string json_opt_bool(const std::optional<bool>& b) {
    if (!b)
        return "null";
    return *b ? "true" : "false";
}

void append_bound_json(std::string& out, const BoundResult& r, const std::string& indent) {
    out += indent + "{";
    out += "\"actual\":" + json_number(r.actual_value);
    out += ",\"applicable\":" + std::string(r.applicable ? "true" : "false");
    out += ",\"bound\":" + json_number(r.bound_value);
    out += ",\"details\":{";
    bool first = true;
    for (const auto& [key, value] : r.details) { // std::map: keys sorted
        if (!first)
            out += ",";
        first = false;
        out += json_string(key) + ":" + json_number(value);
    }
    out += "}";
    out += ",\"equality_structural\":" + json_opt_bool(r.equality_structural);
    out += ",\"holds\":" + (r.applicable ? json_opt_bool(r.holds) : std::string("null"));
    out += ",\"id\":" + json_string(r.label());
    out += ",\"slack\":" + (r.applicable ? json_number(r.slack) : std::string("null"));
    out += "}";
}

std::string render_json(const Report& report) {
    std::string out = "{\n";
    out += "\"config\":" + json_string(report.config_digest) + ",\n";
    out += "\"graphs\":[";
    for (std::size_t gi = 0; gi < report.graphs.size(); ++gi) {
        const GraphRecord& g = report.graphs[gi];
        out += gi ? ",\n{" : "\n{";
        out += "\"alpha_free_bounds\":[";
        for (std::size_t i = 0; i < g.alpha_free_bounds.size(); ++i) {
            if (i)
                out += ",";
            out += "\n";
            append_bound_json(out, g.alpha_free_bounds[i], "  ");
        }
        out += "],\n";
        out += "\"alphas\":[";
        for (std::size_t ai = 0; ai < g.alphas.size(); ++ai) {
            const AlphaRecord& a = g.alphas[ai];
            out += ai ? ",\n {" : "\n {";
            out += "\"alpha\":" + json_number(a.alpha);
            out += ",\"bounds\":[";
            for (std::size_t i = 0; i < a.bounds.size(); ++i) {
                if (i)
                    out += ",";
                out += "\n";
                append_bound_json(out, a.bounds[i], "   ");
            }
            out += "],\n";
            out += "  \"energy\":" + json_number(a.energy);
            out += ",\"estrada\":" + json_number(a.estrada);
            out += ",\"moment1_dev\":" + json_number(a.moment1_dev);
            out += ",\"moment2_dev\":" + json_number(a.moment2_dev);
            out += ",\"sigma_1\":" + json_number(a.sigma_1);
            out += ",\"sigma_n\":" + json_number(a.sigma_n);
            out += "}";
        }
        out += "],\n";
        out += "\"avg_tr\":" + json_number(g.avg_tr);
        out += ",\"id\":" + json_string(g.id);
        out += ",\"m\":" + std::to_string(g.m);
        out += ",\"max_tr\":" + std::to_string(g.max_tr);
        out += ",\"min_tr\":" + std::to_string(g.min_tr);
        out += ",\"n\":" + std::to_string(g.n);
        out += ",\"s\":" + std::to_string(g.sq_sum);
        out += ",\"w\":" + std::to_string(g.wiener);
        out += "}";
    }
    out += "\n],\n";
    const ReportSummary& s = report.summary;
    out += "\"summary\":{";
    out += "\"bounds_evaluated\":" + std::to_string(s.bounds_evaluated);
    out += ",\"closed_form_max_deviation\":" +
           (s.closed_form_max_deviation ? json_number(*s.closed_form_max_deviation)
                                        : std::string("null"));
    out += ",\"holds\":" + std::to_string(s.holds);
    out += ",\"identity_violations\":" + std::to_string(s.identity_violations);
    out += ",\"inapplicable\":" + std::to_string(s.inapplicable);
    out += ",\"max_negative_slack\":" +
           (s.max_negative_slack ? json_number(*s.max_negative_slack) : std::string("null"));
    out += ",\"printed_formula_discrepancies\":" +
           std::to_string(s.printed_formula_discrepancies);
    out += ",\"violations\":" + std::to_string(s.violations);
    out += "}\n}\n";
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void append_bound_csv(std::string& out, const GraphRecord& g, const std::string& alpha,
                      const BoundResult& r) {
    out += csv_escape(g.id);
    out += "," + std::to_string(g.n);
    out += "," + std::to_string(g.m);
    out += "," + alpha;
    out += "," + bound_id_name(r.id);
    out += "," + (r.variant.empty() ? std::string() : r.variant);
    out += ",";
    out += r.side == Side::lower ? "lower" : "upper";
    out += ",";
    out += r.applicable ? "true" : "false";
    out += ",";
    if (r.applicable && r.holds)
        out += *r.holds ? "true" : "false";
    out += ",";
    if (r.equality_structural)
        out += *r.equality_structural ? "true" : "false";
    if (r.applicable) {
        out += "," + fmt(r.bound_value);
        out += "," + fmt(r.actual_value);
        out += "," + fmt(r.slack);
    } else {
        out += ",,,";
    }
    out += ",";
    std::string details;
    for (const auto& [key, value] : r.details) {
        if (!details.empty())
            details += ";";
        details += key + "=" + fmt(value);
    }
    out += csv_escape(details);
    out += "\n";
}

std::string render_csv(const Report& report) {
    std::string out = "graph_id,n,m,alpha,bound_id,variant,side,applicable,holds,"
                      "equality_structural,bound_value,actual_value,slack,details\n";
    for (const GraphRecord& g : report.graphs) {
        for (const BoundResult& r : g.alpha_free_bounds)
            append_bound_csv(out, g, "", r);
        for (const AlphaRecord& a : g.alphas)
            for (const BoundResult& r : a.bounds)
                append_bound_csv(out, g, fmt(a.alpha), r);
    }
    return out;
}

std::string render_text(const Report& report) {
    const ReportSummary& s = report.summary;
    std::string out;
    out += "verification report\n";
    out += "  " + report.config_digest + "\n";
    out += "  graphs: " + std::to_string(report.graphs.size()) + "\n";
    out += "  bounds evaluated: " + std::to_string(s.bounds_evaluated) +
           "  holds: " + std::to_string(s.holds) +
           "  violations: " + std::to_string(s.violations) +
           "  inapplicable: " + std::to_string(s.inapplicable) + "\n";
    out += "  identity violations: " + std::to_string(s.identity_violations) + "\n";
    out += "  printed-formula discrepancies: " +
           std::to_string(s.printed_formula_discrepancies) + "\n";
    if (s.max_negative_slack)
        out += "  max negative slack: " + fmt(*s.max_negative_slack) + "\n";
    if (s.closed_form_max_deviation)
        out += "  closed-form max deviation: " + fmt(*s.closed_form_max_deviation) + "\n";
    if (s.violations > 0) {
        out += "violations:\n";
        for (const GraphRecord& g : report.graphs) {
            for (const BoundResult& r : g.alpha_free_bounds)
                if (r.applicable && !r.holds.value_or(false))
                    out += "  " + g.id + " " + r.label() + " slack=" + fmt(r.slack) + "\n";
            for (const AlphaRecord& a : g.alphas)
                for (const BoundResult& r : a.bounds)
                    if (r.applicable && !r.holds.value_or(false))
                        out += "  " + g.id + " alpha=" + fmt(a.alpha) + " " + r.label() +
                               " slack=" + fmt(r.slack) + "\n";
        }
    }
    out += (s.violations == 0 && s.identity_violations == 0) ? "RESULT: PASS\n"
                                                             : "RESULT: FAIL\n";
    return out;
}

} // namespace

std::string render_report(const Report& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::json: return render_json(report);
    case ReportFormat::csv: return render_csv(report);
    case ReportFormat::text: return render_text(report);
    }
    throw std::logic_error("unreachable");
}

} // namespace alphadist
