#pragma once

// Report rendering (human text, CSV, structured JSON records) and the
// threshold sweep that feeds the CSV output.

#include "imean/certify.hpp"
#include "imean/thresholds.hpp"
#include "imean/verification.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace imean {

enum class OutputFormat { human, csv, structured };

OutputFormat parse_format(const std::string& text);

/// Round-trip safe: 17 significant digits.
std::string format_double(double x);

struct SweepRange {
    double first;
    double last;
    double step;

    /// Parse "first:last:step"; throws DomainError on malformed input.
    static SweepRange parse(const std::string& text);
    [[nodiscard]] std::vector<double> values() const;
};

struct SweepRow {
    double s;
    double p_closed;
    double q_closed;
    double p_empirical;
    double q_empirical;
    double lower_margin_at_p;
    double upper_margin_at_q;
};

std::vector<SweepRow> run_sweep(const SweepRange& range, const GridSpec& grid, double tol,
                                const VerifyOptions& options = {});

inline constexpr const char* kSweepCsvHeader =
    "s,p_closed,q_closed,p_empirical,q_empirical,lower_margin_at_p,upper_margin_at_q";
std::string sweep_csv(const std::vector<SweepRow>& rows);

nlohmann::json to_json(const GridSpec& grid);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const FalsifyResult& r);
nlohmann::json to_json(const ExponentialBoundReport& r);
nlohmann::json to_json(const KouReport& r);
nlohmann::json to_json(const CertificationResult& r, bool include_nodes);
nlohmann::json to_json(const ThresholdSet& th);

/// Wrap a record with the tool name, version and command.
nlohmann::json structured_record(const std::string& command, nlohmann::json body);

std::string human(const VerificationReport& r);
std::string human(const FalsifyResult& r);
std::string human(const CertificationResult& r);

inline constexpr const char* kReportCsvHeader =
    "check,verdict,worst_margin,worst_x,witness_x,witness_margin,witness_confirmed,samples";
std::string csv_row(const VerificationReport& r);

}  // namespace imean
