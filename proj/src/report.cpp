#include "imean/report.hpp"

#include "imean/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace imean {

using nlohmann::json;

OutputFormat parse_format(const std::string& text) {
    if (text == "human") return OutputFormat::human;
    if (text == "csv") return OutputFormat::csv;
    if (text == "structured" || text == "json") return OutputFormat::structured;
    throw DomainError("format must be human, csv or structured, got: " + text);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

SweepRange SweepRange::parse(const std::string& text) {
    SweepRange r{};
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.first, &r.last, &r.step, &tail) != 3)
        throw DomainError("sweep range must look like first:last:step, got: " + text);
    require(std::isfinite(r.first) && std::isfinite(r.last) && std::isfinite(r.step),
            "sweep range must be finite");
    require(r.step > 0.0 && r.last >= r.first, "sweep range needs step > 0 and last >= first");
    return r;
}

std::vector<double> SweepRange::values() const {
    // Count from the rounded quotient so 1:10:0.5 gives 19 values, not 18.
    const auto n = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = first + step * static_cast<double>(i);
    return out;
}

std::vector<SweepRow> run_sweep(const SweepRange& range, const GridSpec& grid, double tol,
                                const VerifyOptions& options) {
    const std::vector<double> ss = range.values();
    for (double s : ss) require(s >= 1.0, "sweep: every s must be >= 1");
    std::vector<SweepRow> rows;
    rows.reserve(ss.size());
    for (double s : ss) {
        const ThresholdSet th = sharp_thresholds(s);
        SweepRow row{};
        row.s = s;
        row.p_closed = th.p;
        row.q_closed = th.q;
        row.p_empirical = empirical_threshold(s, Side::lower, grid, tol, options);
        row.q_empirical = empirical_threshold(s, Side::upper, grid, tol, options);
        row.lower_margin_at_p = verify_family_inequality(th.p, s, Side::lower, grid, options).worst_margin;
        row.upper_margin_at_q = verify_family_inequality(th.q, s, Side::upper, grid, options).worst_margin;
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        os << format_double(r.s) << ',' << format_double(r.p_closed) << ','
           << format_double(r.q_closed) << ',' << format_double(r.p_empirical) << ','
           << format_double(r.q_empirical) << ',' << format_double(r.lower_margin_at_p) << ','
           << format_double(r.upper_margin_at_q) << '\n';
    }
    return os.str();
}

json to_json(const GridSpec& grid) {
    return {{"count", grid.count},
            {"spacing", to_string(grid.spacing)},
            {"x_min", grid.x_min},
            {"x_max", grid.x_max}};
}

json to_json(const Witness& w) {
    return {{"x", w.x},
            {"a", w.a},
            {"b", w.b},
            {"margin", w.margin},
            {"margin_extended", w.margin_extended},
            {"extended_error", w.extended_error},
            {"confirmed", w.confirmed}};
}

json to_json(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    return {{"check", r.check},
            {"verdict", to_string(r.verdict)},
            {"worst_margin", r.worst_margin},
            {"worst_x", r.worst_x},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
            {"samples", r.samples},
            {"violations", r.violations},
            {"rounding_artifacts", r.rounding_artifacts},
            {"grid", to_json(r.grid)},
            {"parameters", params}};
}

json to_json(const FalsifyResult& r) {
    return {{"found", r.found},
            {"witness", r.found ? to_json(r.witness) : json(nullptr)},
            {"points_tried", r.points_tried},
            {"diagnostics", r.diagnostics}};
}

json to_json(const ExponentialBoundReport& r) {
    return {{"lower", to_json(r.lower)},
            {"upper", to_json(r.upper)},
            {"holds", r.holds()},
            {"within_sharp_constants", r.within_sharp_constants}};
}

json to_json(const KouReport& r) {
    return {{"p", r.p_exp},
            {"classification", to_string(r.classification)},
            {"forward", to_json(r.forward)},
            {"reverse", to_json(r.reverse)},
            {"forward_threshold", r.forward_threshold},
            {"reverse_threshold", r.reverse_threshold}};
}

json to_json(const CertificationResult& r, bool include_nodes) {
    json out = {{"proved", r.proved},
                {"nodes_visited", r.nodes.size()},
                {"leaves", r.leaves},
                {"inconclusive", r.inconclusive},
                {"refuted", r.refuted}};
    if (include_nodes) {
        json nodes = json::array();
        for (const auto& n : r.nodes)
            nodes.push_back({{"lo", n.lo},
                             {"hi", n.hi},
                             {"bound", {n.bound.lo, n.bound.hi}},
                             {"status", to_string(n.status)},
                             {"depth", n.depth}});
        out["nodes"] = std::move(nodes);
    }
    return out;
}

json to_json(const ThresholdSet& th) {
    return {{"s", th.s}, {"p", th.p}, {"q", th.q}};
}

json structured_record(const std::string& command, json body) {
    return {{"tool", "imean"}, {"version", IMEAN_VERSION}, {"command", command}, {"result", std::move(body)}};
}

std::string human(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << ": " << to_string(r.verdict) << '\n';
    for (const auto& [k, v] : r.parameters) os << "  " << k << " = " << format_double(v) << '\n';
    os << "  worst margin " << format_double(r.worst_margin) << " at x = " << format_double(r.worst_x) << '\n';
    if (r.witness) {
        const Witness& w = *r.witness;
        os << "  witness x = " << format_double(w.x) << "  pair (" << format_double(w.a) << ", "
           << format_double(w.b) << ")  margin " << format_double(w.margin) << "  extended "
           << format_double(w.margin_extended) << (w.confirmed ? " (confirmed)" : " (unconfirmed)") << '\n';
        os << "  " << r.violations << " of " << r.samples << " grid points violate\n";
    }
    if (r.rounding_artifacts > 0)
        os << "  " << r.rounding_artifacts << " negative margins not reproducible at extended precision\n";
    os << "  grid: " << r.samples << " points, " << to_string(r.grid.spacing) << ", ["
       << format_double(r.grid.x_min) << ", " << format_double(r.grid.x_max) << "]\n";
    return os.str();
}

std::string human(const FalsifyResult& r) {
    std::ostringstream os;
    if (r.found) {
        os << "counterexample: x = " << format_double(r.witness.x) << "  pair ("
           << format_double(r.witness.a) << ", " << format_double(r.witness.b) << ")\n"
           << "  margin " << format_double(r.witness.margin) << "  extended "
           << format_double(r.witness.margin_extended) << " +/- " << format_double(r.witness.extended_error)
           << '\n';
    } else {
        os << "not found: " << r.diagnostics << '\n';
    }
    return os.str();
}

std::string human(const CertificationResult& r) {
    std::ostringstream os;
    os << (r.proved ? "certified" : "not certified") << ": " << r.nodes.size() << " nodes, " << r.leaves
       << " leaves, " << r.inconclusive << " inconclusive, " << r.refuted << " refuted\n";
    return os.str();
}

std::string csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << ',' << to_string(r.verdict) << ',' << format_double(r.worst_margin) << ','
       << format_double(r.worst_x) << ',';
    if (r.witness)
        os << format_double(r.witness->x) << ',' << format_double(r.witness->margin) << ','
           << (r.witness->confirmed ? "true" : "false");
    else
        os << ",,";
    os << ',' << r.samples;
    return os.str();
}

}  // namespace imean
