#pragma once

// Small floating-point toolbox shared by the evaluators: error types,
// constants and error-free transformations used where a leading coefficient
// has to be resolved below one rounding unit.

#include <cmath>
#include <stdexcept>
#include <string>

namespace imean {

/// Thrown when an argument lies outside the domain an operation accepts.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical procedure cannot deliver a result it promised
/// (bracket not established, iteration budget exhausted).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace constants {
inline constexpr double ln2 = 0.69314718055994530942;
/// ln(e/2) = 1 - ln 2; the subtraction is exact in binary64.
inline constexpr double ln_e_over_2 = 1.0 - ln2;
inline constexpr double e = 2.71828182845904523536;
/// Largest gap at which the direct formulas are still trusted.
inline constexpr double max_gap = 1.0 - 1e-12;
}  // namespace constants

namespace detail {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    [[nodiscard]] double value() const noexcept { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble two_prod(double a, double b) noexcept {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

/// 1 - 3*s*u, accurate to roughly twice the working precision. The sign of
/// this quantity decides the behaviour of the family near the origin, so it
/// must not be lost to rounding when 3su is close to 1.
inline double one_minus_3su(double s, double u) noexcept {
    const DoubleDouble three_s = two_prod(3.0, s);
    const DoubleDouble p = two_prod(three_s.hi, u);
    const double p_lo = p.lo + three_s.lo * u;
    const DoubleDouble d = two_sum(1.0, -p.hi);
    return d.hi + (d.lo - p_lo);
}

/// k - c with k given as an exact ratio num/den (e.g. 1/6), to twice the
/// working precision in the leading part.
inline double ratio_minus(double num, double den, double c) noexcept {
    const double hi = num / den;
    const double lo = std::fma(-hi, den, num) / den;
    const DoubleDouble d = two_sum(hi, -c);
    return d.hi + (d.lo + lo);
}

}  // namespace detail

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

}  // namespace imean
