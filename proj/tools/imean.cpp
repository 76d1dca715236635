// imean: command-line front end for the identric-mean comparison library.
//
// Exit codes: 0 = holds / success, 1 = inequality violated (or not
// certified), 2 = usage or domain error, 3 = numerical failure.

#include "imean/certify.hpp"
#include "imean/family.hpp"
#include "imean/means.hpp"
#include "imean/numeric.hpp"
#include "imean/report.hpp"
#include "imean/thresholds.hpp"
#include "imean/verification.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace imean;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Output {
    std::string text;
    int exit_code = kExitHolds;
};

struct CommonOptions {
    std::string format = "human";
    std::string out_path;
    std::size_t grid_count = 10000;
    bool uniform = false;
    bool refined = false;
    double x_min = 1e-9;
    double x_max = 1.0 - 1e-9;
    double tol = 1e-7;

    [[nodiscard]] GridSpec grid() const {
        GridSpec g;
        g.count = grid_count;
        g.spacing = uniform ? Spacing::uniform : Spacing::endpoint_refined;
        g.x_min = x_min;
        g.x_max = x_max;
        g.validate();
        return g;
    }
};

std::size_t default_grid_count() {
    if (const char* env = std::getenv("IMEAN_GRID")) {
        char* end = nullptr;
        const unsigned long long n = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && n >= 2) return static_cast<std::size_t>(n);
    }
    return 10000;
}

// Write to a sibling temporary and rename, so a failed run never leaves a
// truncated file behind.
void write_file(const std::string& path, const std::string& text) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw DomainError("cannot open output file: " + path);
        os << text;
        if (!os) throw DomainError("failed writing output file: " + path);
    }
    std::filesystem::rename(tmp, target);
}

std::string render(const CommonOptions& opt, const std::string& command, const json& body,
                   const std::string& human_text, const std::string& csv_text) {
    switch (parse_format(opt.format)) {
        case OutputFormat::human: return human_text;
        case OutputFormat::csv: return csv_text;
        case OutputFormat::structured: return structured_record(command, body).dump(2) + "\n";
    }
    return human_text;
}

std::string report_csv(std::initializer_list<const VerificationReport*> reports) {
    std::ostringstream os;
    os << kReportCsvHeader << '\n';
    for (const auto* r : reports) os << csv_row(*r) << '\n';
    return os.str();
}

Output cmd_eval(const CommonOptions& opt, double a, double b, std::optional<double> t,
                std::optional<double> s) {
    const PositivePair pair(a, b);
    if (t.has_value() != s.has_value()) throw DomainError("eval: --t and --s must be given together");
    const double A = arithmetic_mean(pair);
    const double G = geometric_mean(pair);
    const double H = harmonic_mean(pair);
    const double I = identric_mean(pair);
    const double v = gap(pair).value();
    std::optional<double> Q;
    if (t) Q = q_mean(pair, *t, *s);

    json body = {{"a", a}, {"b", b}, {"gap", v}, {"A", A}, {"G", G}, {"H", H}, {"I", I}};
    std::ostringstream human, csv;
    human << "a = " << format_double(a) << ", b = " << format_double(b) << ", gap v = " << format_double(v) << '\n'
          << "A = " << format_double(A) << '\n'
          << "G = " << format_double(G) << '\n'
          << "H = " << format_double(H) << '\n'
          << "I = " << format_double(I) << '\n';
    csv << "a,b,gap,A,G,H,I" << (Q ? ",t,s,Q" : "") << '\n'
        << format_double(a) << ',' << format_double(b) << ',' << format_double(v) << ',' << format_double(A)
        << ',' << format_double(G) << ',' << format_double(H) << ',' << format_double(I);
    if (Q) {
        body["t"] = *t;
        body["s"] = *s;
        body["Q"] = *Q;
        human << "Q(t = " << format_double(*t) << ", s = " << format_double(*s) << ") = " << format_double(*Q)
              << '\n';
        csv << ',' << format_double(*t) << ',' << format_double(*s) << ',' << format_double(*Q);
    }
    csv << '\n';
    return {render(opt, "eval", body, human.str(), csv.str()), kExitHolds};
}

Output cmd_thresholds(const CommonOptions& opt, double s) {
    const ThresholdSet th = sharp_thresholds(s);
    const auto c = exponential_bound_constants();
    json body = to_json(th);
    body["consistent"] = threshold_consistency(s);
    body["exponential_lower"] = c.lower;
    body["exponential_upper"] = c.upper;

    std::ostringstream human;
    human << "s = " << format_double(s) << '\n'
          << "p_s = 1/2 - sqrt(1 - (2/e)^(2/s))/2 = " << format_double(th.p) << '\n'
          << "q_s = 1/2 - 1/(2 sqrt(3s))          = " << format_double(th.q) << '\n';
    if (s == 2.0) {
        human << "  p_2 = (1 - sqrt(1 - 2/e))/2, q_2 = (6 - sqrt(6))/12\n";
        body["q_closed_form"] = "(6-sqrt(6))/12";
        body["p_closed_form"] = "(1-sqrt(1-2/e))/2";
    } else if (s == 1.0) {
        human << "  p_1 = (1 - sqrt(1 - 4/e^2))/2, q_1 = (3 - sqrt(3))/6\n";
        body["q_closed_form"] = "(3-sqrt(3))/6";
        body["p_closed_form"] = "(1-sqrt(1-4/e^2))/2";
    }
    human << "exponential bound constants: 1/6 = " << format_double(c.lower)
          << ", ln(e/2) = " << format_double(c.upper) << '\n';
    std::ostringstream csv;
    csv << "s,p,q\n" << format_double(s) << ',' << format_double(th.p) << ',' << format_double(th.q) << '\n';
    return {render(opt, "thresholds", body, human.str(), csv.str()), kExitHolds};
}

Output cmd_verify(const CommonOptions& opt, double t, double s, const std::string& side) {
    const Side sd = parse_side(side);
    const GridSpec grid = opt.grid();
    const VerificationReport r = verify_family_inequality(t, s, sd, grid);
    return {render(opt, "verify", to_json(r), human(r), report_csv({&r})),
            r.holds() ? kExitHolds : kExitViolated};
}

Output cmd_falsify(const CommonOptions& opt, double t, double s, const std::string& side) {
    const FalsifyResult r = falsify(t, s, parse_side(side));
    std::ostringstream csv;
    csv << "found,x,a,b,margin,margin_extended\n" << (r.found ? "true" : "false") << ',';
    if (r.found)
        csv << format_double(r.witness.x) << ',' << format_double(r.witness.a) << ','
            << format_double(r.witness.b) << ',' << format_double(r.witness.margin) << ','
            << format_double(r.witness.margin_extended);
    else
        csv << ",,,,";
    csv << '\n';
    return {render(opt, "falsify", to_json(r), human(r), csv.str()), r.found ? kExitViolated : kExitHolds};
}

Output cmd_sweep(const CommonOptions& opt, const std::string& range) {
    const SweepRange sr = SweepRange::parse(range);
    const GridSpec grid = opt.grid();
    const auto rows = run_sweep(sr, grid, opt.tol);
    const std::string csv = sweep_csv(rows);
    json body = json::array();
    for (const auto& r : rows)
        body.push_back({{"s", r.s},
                        {"p_closed", r.p_closed},
                        {"q_closed", r.q_closed},
                        {"p_empirical", r.p_empirical},
                        {"q_empirical", r.q_empirical},
                        {"lower_margin_at_p", r.lower_margin_at_p},
                        {"upper_margin_at_q", r.upper_margin_at_q}});
    // CSV is the natural form of a sweep; "human" prints it too.
    return {render(opt, "sweep", body, csv, csv), kExitHolds};
}

Output cmd_exp_bounds(const CommonOptions& opt, double p, double q) {
    const auto r = verify_exponential_bounds(p, q, opt.grid());
    std::string text = human(r.lower) + human(r.upper);
    text += std::string("within sharp constants (p <= 1/6, q >= ln(e/2)): ") +
            (r.within_sharp_constants ? "yes" : "no") + "\n";
    return {render(opt, "exp-bounds", to_json(r), text, report_csv({&r.lower, &r.upper})),
            r.holds() ? kExitHolds : kExitViolated};
}

Output cmd_power(const CommonOptions& opt, double p, double weight, const std::string& side) {
    GridSpec grid = convex_power_grid();
    grid.count = opt.grid_count;
    if (opt.uniform) grid.spacing = Spacing::uniform;
    const auto r = verify_convex_power_bound(p, weight, parse_side(side), grid);
    return {render(opt, "power", to_json(r), human(r), report_csv({&r})), r.holds() ? kExitHolds : kExitViolated};
}

Output cmd_kou(const CommonOptions& opt, double p) {
    GridSpec grid = convex_power_grid();
    grid.count = opt.grid_count;
    const auto r = verify_kou_power(p, grid);
    std::string text = human(r.forward) + human(r.reverse) +
                       "classification: " + to_string(r.classification) + " (forward for p >= " +
                       format_double(r.forward_threshold) + ", reverse for p <= " +
                       format_double(r.reverse_threshold) + ")\n";
    return {render(opt, "kou", to_json(r), text, report_csv({&r.forward, &r.reverse})),
            r.classification == KouClass::neither ? kExitViolated : kExitHolds};
}

Output cmd_certify(const CommonOptions& opt, double t, double s, double lo, double hi,
                   const std::string& sign, std::size_t budget, bool nodes) {
    const auto r = certify_sign(t, s, lo, hi, parse_sign(sign), budget);
    std::ostringstream csv;
    csv << "lo,hi,bound_lo,bound_hi,status,depth\n";
    for (const auto& n : r.nodes)
        csv << format_double(n.lo) << ',' << format_double(n.hi) << ',' << format_double(n.bound.lo) << ','
            << format_double(n.bound.hi) << ',' << to_string(n.status) << ',' << n.depth << '\n';
    return {render(opt, "certify", to_json(r, nodes), human(r), csv.str()),
            r.proved ? kExitHolds : kExitViolated};
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_grid) {
    cmd->add_option("--format", opt.format, "Output format: human, csv or structured")
        ->check(CLI::IsMember({"human", "csv", "structured", "json"}));
    cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
    if (!with_grid) return;
    cmd->add_option("--grid", opt.grid_count, "Number of grid points (default from IMEAN_GRID or 10000)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    auto* refined = cmd->add_flag("--refined", opt.refined, "Endpoint-refined grid (default)");
    auto* uniform = cmd->add_flag("--uniform", opt.uniform, "Uniform grid");
    refined->excludes(uniform);
    cmd->add_option("--x-min", opt.x_min, "Smallest gap sampled");
    cmd->add_option("--x-max", opt.x_max, "Largest gap sampled");
    cmd->add_option("--tol", opt.tol, "Bisection tolerance for empirical thresholds");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identric mean bounds: evaluation, sharp thresholds and verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", IMEAN_VERSION);

    CommonOptions opt;
    opt.grid_count = default_grid_count();

    double a = 0, b = 0, t = 0, s = 0, p = 0, q = 0, weight = 0, lo = 0.01, hi = 0.99;
    std::optional<double> eval_t, eval_s;
    std::string side, sign = "negative", range;
    std::size_t budget = 100000;
    bool nodes = false;
    std::function<Output()> run;

    auto* eval = app.add_subcommand("eval", "Evaluate A, G, H, I (and Q_{t,s}) on a pair");
    eval->add_option("a", a)->required();
    eval->add_option("b", b)->required();
    eval->add_option("--t", eval_t, "Family parameter t in [0, 1/2]");
    eval->add_option("--s", eval_s, "Family parameter s >= 1");
    add_common(eval, opt, false);
    eval->callback([&] { run = [&] { return cmd_eval(opt, a, b, eval_t, eval_s); }; });

    auto* thr = app.add_subcommand("thresholds", "Sharp thresholds p_s and q_s");
    thr->add_option("s", s, "s >= 1")->required();
    add_common(thr, opt, false);
    thr->callback([&] { run = [&] { return cmd_thresholds(opt, s); }; });

    auto* verify = app.add_subcommand("verify", "Grid check of Q_{t,s} < I (lower) or I < Q_{t,s} (upper)");
    verify->add_option("--s", s)->required();
    verify->add_option("--t", t)->required();
    verify->add_option("--side", side)->required()->check(CLI::IsMember({"lower", "upper"}));
    add_common(verify, opt, true);
    verify->callback([&] { run = [&] { return cmd_verify(opt, t, s, side); }; });

    auto* fals = app.add_subcommand("falsify", "Search for a counterexample when t is outside the sharp interval");
    fals->add_option("--s", s)->required();
    fals->add_option("--t", t)->required();
    fals->add_option("--side", side)->required()->check(CLI::IsMember({"lower", "upper"}));
    add_common(fals, opt, false);
    fals->callback([&] { run = [&] { return cmd_falsify(opt, t, s, side); }; });

    auto* sweep = app.add_subcommand("sweep", "CSV of closed-form and empirical thresholds over a range of s");
    sweep->add_option("--s", range, "Range first:last:step")->required();
    add_common(sweep, opt, true);
    sweep->callback([&] { run = [&] { return cmd_sweep(opt, range); }; });

    auto* expb = app.add_subcommand("exp-bounds", "Check exp(p v^2) < A/I < exp(q v^2) on the grid");
    expb->add_option("--p", p)->required();
    expb->add_option("--q", q)->required();
    add_common(expb, opt, true);
    expb->callback([&] { run = [&] { return cmd_exp_bounds(opt, p, q); }; });

    auto* power = app.add_subcommand("power", "Check w A^p + (1-w) G^p against I^p");
    power->add_option("--p", p)->required();
    power->add_option("--weight", weight)->required();
    power->add_option("--side", side)->required()->check(CLI::IsMember({"lower", "upper"}));
    add_common(power, opt, true);
    power->callback([&] { run = [&] { return cmd_power(opt, p, weight, side); }; });

    auto* kou = app.add_subcommand("kou", "Classify I^p against (2/3) A^p + (1/3) G^p");
    kou->add_option("--p", p)->required();
    add_common(kou, opt, true);
    kou->callback([&] { run = [&] { return cmd_kou(opt, p); }; });

    auto* cert = app.add_subcommand("certify", "Interval certification of the sign of f on [lo, hi]");
    cert->add_option("--s", s)->required();
    cert->add_option("--t", t)->required();
    cert->add_option("--lo", lo);
    cert->add_option("--hi", hi);
    cert->add_option("--sign", sign)->check(CLI::IsMember({"negative", "positive"}));
    cert->add_option("--budget", budget);
    cert->add_flag("--nodes", nodes, "Include the certificate tree in structured output");
    add_common(cert, opt, false);
    cert->callback([&] { run = [&] { return cmd_certify(opt, t, s, lo, hi, sign, budget, nodes); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Output out = run();
        if (opt.out_path.empty())
            std::cout << out.text << std::flush;
        else
            write_file(opt.out_path, out.text);
        return out.exit_code;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
