#include "imean/family.hpp"

#include "imean/bracket.hpp"
#include "imean/means.hpp"
#include "imean/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace imean {

namespace {

constexpr double kSeriesCrossover = 0.5;
constexpr int kMaxSeriesTerms = 400;

void require_gap(double x, const char* who) {
    require(x > 0.0 && x <= constants::max_gap,
            std::string(who) + ": x must lie in (0, 1 - 1e-12]");
}

}  // namespace

FamilyParams::FamilyParams(double t, double s) : t_(t), s_(s), u_(0.0) {
    require(t >= 0.0 && t <= 0.5, "FamilyParams: t must lie in [0, 1/2]");
    require(std::isfinite(s) && s >= 1.0, "FamilyParams: s must be >= 1");
    const double w = 1.0 - 2.0 * t;
    u_ = w * w;
}

FamilyParams FamilyParams::from_u(double u, double s) {
    require(u >= 0.0 && u <= 1.0, "FamilyParams: u must lie in [0, 1]");
    require(std::isfinite(s) && s >= 1.0, "FamilyParams: s must be >= 1");
    return FamilyParams(0.5 * (1.0 - std::sqrt(u)), s, u);
}

double family_f(const FamilyParams& params, double x) {
    require_gap(x, "family_f");
    const double s = params.s();
    const double u = params.u();
    if (x >= kSeriesCrossover)
        return detail::log_ratio_A_over_I_direct(x) + 0.5 * s * detail::log_one_minus_u_x2(u, x);

    // sum_k x^{2k} [ 1/(2k(2k+1)) - s u^k / (2k) ]
    const double x2 = x * x;
    const double scale = x2 * (1.0 / 6.0 + 0.5 * s * u);
    double sum = x2 * (detail::one_minus_3su(s, u) / 6.0);
    double power = x2;
    double upow = u;
    for (int k = 2; k <= kMaxSeriesTerms; ++k) {
        power *= x2;
        upow *= u;
        const double pos = 1.0 / (2.0 * k * (2.0 * k + 1.0));
        const double neg = s * upow / (2.0 * k);
        sum += power * (pos - neg);
        if (power * (pos + neg) <= 1e-19 * scale) break;
    }
    return sum;
}

double family_h(const FamilyParams& params, double x) {
    require_gap(x, "family_h");
    const double s = params.s();
    const double u = params.u();
    if (x >= kSeriesCrossover) {
        const double one_minus = std::exp(detail::log_one_minus_u_x2(u, x));
        return (std::atanh(x) - x) - s * u * x * x * x / one_minus;
    }
    // sum_k x^{2k+1} [ 1/(2k+1) - s u^k ]
    const double x2 = x * x;
    const double scale = x2 * x * (1.0 / 3.0 + s * u);
    double sum = x2 * x * (detail::one_minus_3su(s, u) / 3.0);
    double power = x2 * x;
    double upow = u;
    for (int k = 2; k <= kMaxSeriesTerms; ++k) {
        power *= x2;
        upow *= u;
        const double pos = 1.0 / (2.0 * k + 1.0);
        const double neg = s * upow;
        sum += power * (pos - neg);
        if (power * (pos + neg) <= 1e-19 * scale) break;
    }
    return sum;
}

TrinomialCoefficients trinomial_coefficients(const FamilyParams& params) noexcept {
    const double s = params.s();
    const double u = params.u();
    return {(1.0 - s) * u * u, -(2.0 - 3.0 * s - s * u) * u, detail::one_minus_3su(s, u)};
}

double trinomial_eval(const FamilyParams& params, double X) noexcept {
    const auto c = trinomial_coefficients(params);
    return std::fma(std::fma(c.quadratic, X, c.linear), X, c.constant);
}

TrinomialRoots trinomial_roots(const FamilyParams& params) {
    TrinomialRoots out;
    const double u = params.u();
    if (u == 0.0) return out;  // T is the constant 1

    const auto [a, b, c] = trinomial_coefficients(params);
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
    if (std::fabs(a) < 1e-14 * scale) {
        if (b == 0.0) return out;
        out.kind = TrinomialRoots::Kind::linear;
        out.roots.push_back(-c / b);
    } else {
        out.kind = TrinomialRoots::Kind::quadratic;
        const auto bb = detail::two_prod(b, b);
        const auto ac4 = detail::two_prod(4.0 * a, c);
        const double disc = (bb.hi - ac4.hi) + (bb.lo - ac4.lo);
        if (disc >= 0.0) {
            const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            double r1 = q / a;
            double r2 = q != 0.0 ? c / q : r1;
            if (r1 > r2) std::swap(r1, r2);
            out.roots = {r1, r2};
        }
    }

    for (double r : out.roots)
        if (r > 0.0 && r <= 1.0) out.in_unit.push_back(r);
    if (!out.roots.empty()) out.z0 = out.roots.front();
    if (out.roots.size() == 2) out.z1 = out.roots.back();
    out.degenerate = (u == 1.0 && c < 0.0);
    return out;
}

CriticalPoint critical_point(const FamilyParams& params) {
    const double s = params.s();
    const double u = params.u();
    require(detail::one_minus_3su(s, u) < 0.0, "critical_point: requires 3su > 1");
    require(u < 1.0, "critical_point: requires u < 1 (h is monotone when u = 1)");

    const TrinomialRoots roots = trinomial_roots(params);
    if (roots.in_unit.empty())
        throw NumericalError("critical_point: trinomial has no root in (0, 1]");
    const double lo = std::sqrt(roots.in_unit.front());

    auto h = [&](double x) { return family_h(params, x); };
    if (!(h(lo) < 0.0))
        throw NumericalError("critical_point: h is not negative at sqrt(z0)");

    if (lo < kSeriesCrossover && h(kSeriesCrossover) >= 0.0) {
        BracketResult r = solve_bracketed(h, lo, kSeriesCrossover);
        if (std::fabs(r.value) > 1e-12) r = solve_bracketed(h, r.lo, r.hi, {0.0, 200});
        return {r.root, 1.0 - r.root, r.value, lo, r.iterations};
    }

    // Root in (1/2, 1): solve for w = 1 - y0 on a log scale. y0 can sit
    // closer to 1 than any binary64 below 1 (s = 2, u = 0.9 gives
    // w ~ 6e-17), so w is the quantity that carries the answer.
    auto hw = [&](double log_w) { return family_h_complement(params, std::exp(log_w)); };
    const double log_w_hi = std::log(1.0 - std::max(lo, kSeriesCrossover));
    const double log_w_lo = std::log(std::numeric_limits<double>::min());
    if (!(hw(log_w_lo) > 0.0))
        throw NumericalError("critical_point: zero of h is closer to 1 than binary64 can represent");
    if (!(hw(log_w_hi) < 0.0))
        throw NumericalError("critical_point: lost the sign change of h");
    BracketResult r = solve_bracketed(hw, log_w_lo, log_w_hi);
    if (std::fabs(r.value) > 1e-12) r = solve_bracketed(hw, r.lo, r.hi, {0.0, 200});
    const double w = std::exp(r.root);
    return {1.0 - w, w, r.value, lo, r.iterations};
}

double family_h_complement(const FamilyParams& params, double w) {
    require(w > 0.0 && w < 1.0, "family_h_complement: w must lie in (0, 1)");
    const double s = params.s();
    const double u = params.u();
    const double y = 1.0 - w;
    if (y < kSeriesCrossover) return family_h(params, y);
    // atanh(1 - w) = (ln(2 - w) - ln w) / 2 and 1 - u y^2 = (1 - u) + u w (2 - w);
    // neither forms 1 - y.
    const double atanh_y = 0.5 * (std::log(2.0 - w) - std::log(w));
    const double one_minus = (1.0 - u) + u * w * (2.0 - w);
    return (atanh_y - y) - s * u * y * y * y / one_minus;
}

double f_limit_at_one(const FamilyParams& params) noexcept {
    const double u = params.u();
    if (u == 1.0) return -std::numeric_limits<double>::infinity();
    const double log_one_minus_u = u < 0.5 ? std::log1p(-u) : std::log(1.0 - u);
    return constants::ln_e_over_2 + 0.5 * params.s() * log_one_minus_u;
}

double family_g(double coef, double x) {
    require(coef > 0.0 && std::isfinite(coef), "family_g: coefficient must be > 0");
    require_gap(x, "family_g");
    if (x >= kSeriesCrossover) return detail::log_ratio_A_over_I_direct(x) - coef * x * x;

    const double x2 = x * x;
    double sum = x2 * detail::ratio_minus(1.0, 6.0, coef);
    double power = x2;
    for (int k = 2; k <= kMaxSeriesTerms; ++k) {
        power *= x2;
        const double term = power / (2.0 * k * (2.0 * k + 1.0));
        sum += term;
        if (term <= 1e-19 * x2) break;
    }
    return sum;
}

}  // namespace imean
