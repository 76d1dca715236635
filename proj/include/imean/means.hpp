#pragma once

// Bivariate means: arithmetic, geometric, harmonic, identric and the
// two-parameter family Q_{t,s}. Every routine is a pure function.

#include <utility>

namespace imean {

/// Unordered pair of strictly positive, finite reals.
class PositivePair {
public:
    PositivePair(double a, double b);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] bool distinct() const noexcept { return a_ != b_; }

    /// The normalized pair (1 + v, 1 - v) realizing gap v.
    static PositivePair from_gap(double v);

private:
    double a_;
    double b_;
};

/// Normalized gap v = |a - b| / (a + b), in [0, 1).
class GapCoordinate {
public:
    explicit GapCoordinate(double v);

    [[nodiscard]] double value() const noexcept { return v_; }

private:
    double v_;
};

double arithmetic_mean(const PositivePair& p) noexcept;
double geometric_mean(const PositivePair& p) noexcept;
double harmonic_mean(const PositivePair& p) noexcept;

/// I(a,b), evaluated as A * exp(ln(I/A)(v)) so that large arguments never
/// overflow and a == b returns a.
double identric_mean(const PositivePair& p);

/// Q_{t,s}(a,b) for t in [0, 1/2], s >= 1. Throws DomainError otherwise.
double q_mean(const PositivePair& p, double t, double s);

GapCoordinate gap(const PositivePair& p) noexcept;

/// ln(I/A) as a function of the gap alone; 0 at v = 0, tends to ln(2/e)
/// as v -> 1. Throws DomainError for v outside [0, 1).
double log_ratio_I_over_A(GapCoordinate v);
double log_ratio_I_over_A(double v);

namespace detail {

/// ln(A/I)(v) = sum_{k>=1} v^{2k} / (2k(2k+1)), for 0 <= v < 1/2.
/// `max_terms` truncates the sum (0 = sum to convergence).
double log_ratio_A_over_I_series(double v, int max_terms = 0) noexcept;

/// ln(A/I)(v) = 1 - ((1+v)ln(1+v) - (1-v)ln(1-v)) / (2v), the closed form.
/// Loses absolute accuracy ~1e-16 through the leading cancellation, so it is
/// only used for v >= 1/2.
double log_ratio_A_over_I_direct(double v) noexcept;

/// ln(A/I)(v) choosing the accurate path.
double log_ratio_A_over_I(double v) noexcept;

/// ln(1 - u x^2) for u in [0, 1], x in [0, 1), without cancellation: log1p
/// while u x^2 is small, otherwise (1 - x)(1 + x) + (1 - u) x^2, where 1 - u
/// is exact because u >= 1/2 on that branch.
double log_one_minus_u_x2(double u, double x) noexcept;

}  // namespace detail

}  // namespace imean
