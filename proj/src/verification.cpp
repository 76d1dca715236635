#include "imean/verification.hpp"

#include "imean/extended.hpp"
#include "imean/family.hpp"
#include "imean/means.hpp"
#include "imean/numeric.hpp"
#include "imean/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace imean {

namespace {

Witness make_witness(double x, double margin, const extended::Estimate& ext) {
    Witness w;
    w.x = x;
    w.a = 1.0 + x;
    w.b = 1.0 - x;
    w.margin = margin;
    w.margin_extended = ext.value;
    w.extended_error = ext.error_bound;
    w.confirmed = ext.certainly_negative();
    return w;
}

// Shared driver: evaluate `margin` on the grid, then confirm negative points
// in ascending x order with `extended_margin` until one is confirmed.
template <class MarginFn, class ExtendedFn>
VerificationReport run_grid_check(std::string check, const GridSpec& grid, MarginFn&& margin,
                                  ExtendedFn&& extended_margin, const VerifyOptions& options) {
    const std::vector<double> xs = make_grid(grid);
    std::vector<double> margins = kernels::evaluate(xs, margin, options.backend);
    if (std::any_of(margins.begin(), margins.end(), [](double m) { return std::isnan(m); }))
        throw NumericalError(check + ": margin evaluated to NaN");

    kernels::MarginSummary summary = kernels::summarize(margins, options.backend);

    VerificationReport report;
    report.check = std::move(check);
    report.grid = grid;
    report.samples = xs.size();

    std::size_t artifacts = 0;
    for (std::size_t i = summary.first_violation; summary.violated() && i < xs.size(); ++i) {
        if (!(margins[i] < 0.0)) continue;
        const extended::Estimate ext = extended_margin(xs[i]);
        if (ext.certainly_negative()) {
            report.witness = make_witness(xs[i], margins[i], ext);
            break;
        }
        // Not reproducible at extended precision: treat as undecided (0).
        margins[i] = 0.0;
        ++artifacts;
    }
    if (!report.witness && artifacts > 0) summary = kernels::summarize(margins, options.backend);

    report.rounding_artifacts = artifacts;
    report.verdict = report.witness ? Verdict::violated : Verdict::holds_on_grid;
    report.worst_margin = summary.worst;
    report.worst_x = xs[summary.worst_index];
    report.violations = report.witness ? summary.violations - artifacts : 0;
    return report;
}

void require_family(double t, double s) {
    require(t >= 0.0 && t <= 0.5, "t must lie in [0, 1/2]");
    require(std::isfinite(s) && s >= 1.0, "s must be >= 1");
}

double half_log_G2(double x) {
    // (1/2) ln(1 - x^2) = ln G on the pair (1+x, 1-x)
    if (x < 0.5) return 0.5 * std::log1p(-x * x);
    return 0.5 * std::log((1.0 - x) * (1.0 + x));
}

// I^p - w A^p - (1-w) G^p on (1+x, 1-x), as expm1 differences so that the
// O(x^2) parts cancel without the absolute error of the leading 1.
double convex_gap(double p, double w, double x) {
    const double e1 = std::expm1(-p * detail::log_ratio_A_over_I(x));
    const double e2 = std::expm1(p * half_log_G2(x));
    return e1 - (1.0 - w) * e2;
}

}  // namespace

VerificationReport verify_family_inequality(double t, double s, Side side, const GridSpec& grid,
                                            const VerifyOptions& options) {
    require_family(t, s);
    const FamilyParams params(t, s);
    const double sign = side == Side::lower ? -1.0 : 1.0;
    auto margin = [&](double x) { return sign * family_f(params, x); };
    auto ext = [&](double x) {
        auto e = extended::family_f(params, x);
        e.value *= sign;
        return e;
    };
    std::string name = side == Side::lower ? "family_lower" : "family_upper";
    VerificationReport r = run_grid_check(std::move(name), grid, margin, ext, options);
    r.parameters = {{"t", t}, {"s", s}, {"u", params.u()}};
    return r;
}

FalsifyResult falsify(double t, double s, Side side) {
    require_family(t, s);
    const ThresholdSet th = sharp_thresholds(s);
    if (side == Side::lower)
        require(t > th.p, "falsify: t is inside the lower-bound interval [0, p_s]");
    else
        require(t < th.q, "falsify: t is inside the upper-bound interval [q_s, 1/2]");

    // Lower-side failures live near x = 1 (the limit of f turns positive),
    // upper-side failures near x = 0 (the x^2 coefficient turns negative).
    std::vector<double> candidates;
    for (int j = 17; j <= 96; ++j) {
        const double d = std::pow(10.0, -j / 8.0);
        candidates.push_back(side == Side::lower ? 1.0 - d : d);
    }

    const FamilyParams params(t, s);
    const double sign = side == Side::lower ? -1.0 : 1.0;
    std::vector<double> margins(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        margins[i] = sign * family_f(params, candidates[i]);

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return margins[a] < margins[b]; });

    FalsifyResult result;
    result.points_tried = candidates.size();
    for (std::size_t idx : order) {
        if (!(margins[idx] < 0.0)) break;
        auto ext = extended::family_f(params, candidates[idx]);
        ext.value *= sign;
        if (ext.certainly_negative()) {
            result.found = true;
            result.witness = make_witness(candidates[idx], margins[idx], ext);
            return result;
        }
    }
    const std::size_t best = order.front();
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "no confirmed reversal among %zu candidates; best margin %.6g at x = %.17g "
                  "(t is within the resolution of binary64 near the failing endpoint)",
                  candidates.size(), margins[best], candidates[best]);
    result.diagnostics = buf;
    return result;
}

double empirical_threshold(double s, Side side, const GridSpec& grid, double tol,
                           const VerifyOptions& options) {
    require(std::isfinite(s) && s >= 1.0, "empirical_threshold: s must be >= 1");
    require(tol >= 1e-8, "empirical_threshold: tol must be >= 1e-8");
    // lower: holds at t = 0, fails at 1/2; upper: the reverse.
    double holds_end = side == Side::lower ? 0.0 : 0.5;
    double fails_end = side == Side::lower ? 0.5 : 0.0;
    while (std::fabs(fails_end - holds_end) > tol) {
        const double mid = 0.5 * (holds_end + fails_end);
        if (verify_family_inequality(mid, s, side, grid, options).holds())
            holds_end = mid;
        else
            fails_end = mid;
    }
    return 0.5 * (holds_end + fails_end);
}

ExponentialBoundReport verify_exponential_bounds(double p_coef, double q_coef,
                                                 const GridSpec& grid,
                                                 const VerifyOptions& options) {
    require(p_coef > 0.0 && q_coef > 0.0, "exponential bounds: coefficients must be > 0");
    ExponentialBoundReport out;
    out.lower = run_grid_check(
        "exp_lower", grid, [&](double x) { return family_g(p_coef, x); },
        [&](double x) { return extended::family_g(p_coef, x); }, options);
    out.lower.parameters = {{"p", p_coef}};
    out.upper = run_grid_check(
        "exp_upper", grid, [&](double x) { return -family_g(q_coef, x); },
        [&](double x) {
            auto e = extended::family_g(q_coef, x);
            e.value = -e.value;
            return e;
        },
        options);
    out.upper.parameters = {{"q", q_coef}};
    const auto c = exponential_bound_constants();
    out.within_sharp_constants = p_coef <= c.lower && q_coef >= c.upper;
    return out;
}

GridSpec convex_power_grid() {
    GridSpec g;
    g.x_min = 1e-5;
    return g;
}

std::optional<double> sharp_convex_weight(double p_exp, Side side) {
    const double two_over_e = 2.0 / constants::e;
    if (p_exp == 1.0) return side == Side::lower ? 2.0 / 3.0 : two_over_e;
    if (p_exp >= 2.0) return side == Side::lower ? std::pow(two_over_e, p_exp) : 2.0 / 3.0;
    return std::nullopt;
}

namespace {

// Any p > 0; the public entry point restricts to the p >= 1 family.
VerificationReport convex_power_check(double p_exp, double weight, Side side, const GridSpec& grid,
                                      const VerifyOptions& options) {
    require(std::isfinite(p_exp) && p_exp > 0.0, "convex power: exponent must be > 0");
    require(weight >= 0.0 && weight <= 1.0, "convex power: weight must lie in [0, 1]");
    const double sign = side == Side::lower ? 1.0 : -1.0;
    VerificationReport r = run_grid_check(
        side == Side::lower ? "convex_lower" : "convex_upper", grid,
        [&](double x) { return sign * convex_gap(p_exp, weight, x); },
        [&](double x) {
            auto e = extended::convex_power_gap(p_exp, weight, x);
            e.value *= sign;
            return e;
        },
        options);
    r.parameters = {{"p", p_exp}, {"weight", weight}};
    if (auto sharp = sharp_convex_weight(p_exp, side)) r.parameters.emplace_back("sharp_weight", *sharp);
    return r;
}

}  // namespace

VerificationReport verify_convex_power_bound(double p_exp, double weight, Side side,
                                             const GridSpec& grid, const VerifyOptions& options) {
    require(std::isfinite(p_exp) && p_exp >= 1.0, "convex power: exponent must be >= 1");
    return convex_power_check(p_exp, weight, side, grid, options);
}

KouReport verify_kou_power(double p_exp, const GridSpec& grid, const VerifyOptions& options) {
    require(std::isfinite(p_exp) && p_exp > 0.0, "kou: exponent must be > 0");
    KouReport out;
    out.p_exp = p_exp;
    out.forward = convex_power_check(p_exp, 2.0 / 3.0, Side::upper, grid, options);
    out.forward.check = "kou_forward";
    out.reverse = convex_power_check(p_exp, 2.0 / 3.0, Side::lower, grid, options);
    out.reverse.check = "kou_reverse";
    if (out.forward.holds())
        out.classification = KouClass::forward_holds;
    else if (out.reverse.holds())
        out.classification = KouClass::reverse_holds;
    out.forward_threshold = std::log(1.5) / constants::ln_e_over_2;
    out.reverse_threshold = 1.2;
    return out;
}

const char* to_string(Side s) noexcept { return s == Side::lower ? "lower" : "upper"; }

const char* to_string(Verdict v) noexcept {
    return v == Verdict::holds_on_grid ? "holds_on_grid" : "violated";
}

const char* to_string(KouClass k) noexcept {
    switch (k) {
        case KouClass::forward_holds: return "forward_holds";
        case KouClass::reverse_holds: return "reverse_holds";
        case KouClass::neither: return "neither";
    }
    return "?";
}

Side parse_side(const std::string& text) {
    if (text == "lower") return Side::lower;
    if (text == "upper") return Side::upper;
    throw DomainError("side must be 'lower' or 'upper', got: " + text);
}

}  // namespace imean
