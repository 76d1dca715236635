#pragma once

// Test-only reference implementations in 113-bit arithmetic, written from
// the textbook definitions of the means (no gap reduction, no series). They
// share nothing with the library's evaluation paths.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

namespace oracle {

using Quad = boost::multiprecision::cpp_bin_float_quad;

/// I(a,b) = (1/e) (a^a / b^b)^{1/(a-b)}, via logs: (a ln a - b ln b)/(a - b) - 1.
inline Quad identric(double a, double b) {
    const Quad qa(a), qb(b);
    return exp((qa * log(qa) - qb * log(qb)) / (qa - qb) - 1);
}

inline Quad arithmetic(double a, double b) { return (Quad(a) + Quad(b)) / 2; }

/// Q_{t,s}(a,b) = G^s(ta + (1-t)b, tb + (1-t)a) A^{1-s}(a,b).
inline Quad q_family(double a, double b, double t, double s) {
    const Quad qa(a), qb(b), qt(t), qs(s);
    const Quad x = qt * qa + (1 - qt) * qb;
    const Quad y = qt * qb + (1 - qt) * qa;
    return exp(qs / 2 * log(x * y) + (1 - qs) * log(arithmetic(a, b)));
}

/// ln(Q_{t,s} / I) straight from the definitions.
inline double log_q_over_i(double a, double b, double t, double s) {
    return static_cast<double>(log(q_family(a, b, t, s)) - log(identric(a, b)));
}

/// Log-uniform draw on [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
}

}  // namespace oracle
