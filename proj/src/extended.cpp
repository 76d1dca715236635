#include "imean/extended.hpp"

#include "imean/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace imean::extended {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

const Quad& quad_eps() {
    static const Quad eps = std::numeric_limits<Quad>::epsilon();
    return eps;
}

// Error bound for a sum of terms whose magnitudes add up to `magnitude`;
// generous factor for the handful of operations and library transcendental
// rounding involved.
double bound_for(const Quad& magnitude) {
    return static_cast<double>(Quad(64) * quad_eps() * magnitude);
}

// ln(A/I) = 1 - (1/(2v)) ln((1+v)/(1-v)) - (1/2) ln(1 - v^2), term by term.
struct RatioTerms {
    Quad value;
    Quad magnitude;
};

RatioTerms log_ratio_A_over_I_terms(const Quad& v) {
    const Quad atanh_term = (log1p(v) - log1p(-v)) / (2 * v);
    const Quad sq_term = log1p(-v * v) / 2;
    return {Quad(1) - atanh_term - sq_term, Quad(1) + abs(atanh_term) + abs(sq_term)};
}

}  // namespace

Estimate log_ratio_I_over_A(double v) {
    require(v > 0.0 && v < 1.0, "extended::log_ratio_I_over_A: v must lie in (0, 1)");
    const auto r = log_ratio_A_over_I_terms(Quad(v));
    return {static_cast<double>(-r.value), bound_for(r.magnitude)};
}

Estimate family_f(const FamilyParams& params, double x) {
    require(x > 0.0 && x < 1.0, "extended::family_f: x must lie in (0, 1)");
    const Quad qx(x);
    const auto r = log_ratio_A_over_I_terms(qx);
    const Quad q_term = Quad(params.s()) / 2 * log1p(-Quad(params.u()) * qx * qx);
    return {static_cast<double>(r.value + q_term), bound_for(r.magnitude + abs(q_term))};
}

Estimate family_g(double coef, double x) {
    require(x > 0.0 && x < 1.0, "extended::family_g: x must lie in (0, 1)");
    const Quad qx(x);
    const auto r = log_ratio_A_over_I_terms(qx);
    const Quad c_term = Quad(coef) * qx * qx;
    return {static_cast<double>(r.value - c_term), bound_for(r.magnitude + c_term)};
}

Estimate convex_power_gap(double p_exp, double weight, double x) {
    require(x > 0.0 && x < 1.0, "extended::convex_power_gap: x must lie in (0, 1)");
    const Quad qx(x);
    const Quad p(p_exp);
    const Quad w(weight);
    const auto r = log_ratio_A_over_I_terms(qx);
    const Quad I_p = exp(-p * r.value);
    const Quad G_p = exp(p / 2 * log1p(-qx * qx));
    const Quad value = I_p - w - (Quad(1) - w) * G_p;
    const Quad magnitude = I_p + abs(w) + abs(Quad(1) - w) * G_p + p * r.magnitude;
    return {static_cast<double>(value), bound_for(magnitude)};
}

double one_minus_two_over_e_pow(double s) {
    const Quad ln2 = log(Quad(2));
    return static_cast<double>(-expm1(Quad(2) / Quad(s) * (ln2 - 1)));
}

int lower_condition_sign(double t, double s) {
    const double w = 1.0 - 2.0 * t;
    const Quad u = Quad(w * w);
    const Quad ln2 = log(Quad(2));
    const Quad d = u + exp(Quad(2) / Quad(s) * (ln2 - 1)) - 1;
    if (d > 0) return 1;
    if (d < 0) return -1;
    return 0;
}

}  // namespace imean::extended
