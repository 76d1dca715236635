#pragma once

// The one-variable family behind the comparison of Q_{t,s} with the identric
// mean:
//
//   f_{u,s}(x) = 1 - ln((1+x)/(1-x)) / (2x) - ln(1-x^2)/2 + (s/2) ln(1-u x^2)
//
// so that ln(Q_{t,s}/I)(a,b) = f_{(1-2t)^2, s}(gap(a,b)). Its derivative is
// h_{u,s}(x)/x^2, and h' carries the sign of the trinomial T_{u,s}(x^2).
//
// Near x = 0 every function here is summed as an even power series whose
// leading coefficient (1 - 3su, or 1/6 - c for g) is formed to twice the
// working precision; without that the sign of f at tiny gaps is rounding
// noise whenever 3su is within an ulp of 1.

#include <optional>
#include <vector>

namespace imean {

/// (t, s) with the derived u = (1 - 2t)^2 as computed in binary64. All family
/// functions are defined in terms of (u, s); t is kept for reporting.
class FamilyParams {
public:
    FamilyParams(double t, double s);

    /// Build directly from u in [0, 1]; t is recovered as (1 - sqrt(u)) / 2.
    static FamilyParams from_u(double u, double s);

    [[nodiscard]] double t() const noexcept { return t_; }
    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] double u() const noexcept { return u_; }

private:
    FamilyParams(double t, double s, double u) : t_(t), s_(s), u_(u) {}
    double t_;
    double s_;
    double u_;
};

/// f_{u,s}(x), 0 < x <= 1 - 1e-12.
double family_f(const FamilyParams& params, double x);

/// h_{u,s}(x) = -x + atanh(x) - s u x^3 / (1 - u x^2), 0 < x <= 1 - 1e-12.
double family_h(const FamilyParams& params, double x);

/// T_{u,s}(X) = (1-s) u^2 X^2 - (2 - 3s - s u) u X + (1 - 3su).
double trinomial_eval(const FamilyParams& params, double X) noexcept;

struct TrinomialCoefficients {
    double quadratic;
    double linear;
    double constant;
};
TrinomialCoefficients trinomial_coefficients(const FamilyParams& params) noexcept;

struct TrinomialRoots {
    enum class Kind { constant, linear, quadratic };
    Kind kind = Kind::constant;
    /// Every real root, ascending.
    std::vector<double> roots;
    /// Roots inside (0, 1].
    std::vector<double> in_unit;
    /// Smaller root (the only one in the linear case). It lies in (0, 1]
    /// exactly when 3su > 1; otherwise z0 <= 0.
    std::optional<double> z0;
    /// Larger root of the quadratic; >= 1 for every s > 1, u in (0, 1].
    std::optional<double> z1;
    /// u = 1 with 3su > 1: the root in (0, 1] sits on the endpoint X = 1.
    bool degenerate = false;
};

/// Real roots of T_{u,s}. Cancellation-free quadratic formula; switches to
/// the linear solve when |(1-s) u^2| < 1e-14 * max|coefficient|.
TrinomialRoots trinomial_roots(const FamilyParams& params);

struct CriticalPoint {
    double y0;            ///< unique zero of h in (sqrt(z0), 1), rounded to binary64
    double one_minus_y0;  ///< 1 - y0 to full relative precision; may be below ulp(1)
    double residual;      ///< h at the root, evaluated in whichever form was solved
    double bracket_lo;    ///< sqrt(z0)
    int iterations;
};

/// Zero of h_{u,s} in (sqrt(z0), 1). Requires 3su > 1 and u < 1; throws
/// DomainError otherwise. Roots above 1/2 are found in w = 1 - y, so y0 may
/// round to 1 while one_minus_y0 stays exact; NumericalError only if w
/// would underflow.
CriticalPoint critical_point(const FamilyParams& params);

/// h_{u,s}(1 - w) for w in (0, 1), accurate as w -> 0.
double family_h_complement(const FamilyParams& params, double w);

/// lim_{x->1-} f_{u,s}(x) = ln(e (1-u)^{s/2} / 2); -infinity when u = 1.
double f_limit_at_one(const FamilyParams& params) noexcept;

/// g_c(x) = ln(A/I)(x) - c x^2 for c > 0, 0 < x <= 1 - 1e-12.
double family_g(double coef, double x);

}  // namespace imean
