#include "imean/extended.hpp"
#include "imean/means.hpp"
#include "imean/numeric.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace imean;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Reference values from an independent 40-digit evaluation.
constexpr double kFourOverE = 1.4715177646857692864;
constexpr double kEightOverE = 2.9430355293715385728;
constexpr double kLogEightOverThreeE = -0.019170746988273763143548872547996;

bool rel_close(double x, double y, double tol) {
    return std::fabs(x - y) <= tol * std::fabs(y);
}
}  // namespace

TEST_CASE("PositivePair rejects non-positive and non-finite arguments") {
    CHECK_THROWS_AS(PositivePair(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(PositivePair(1.0, -2.0), DomainError);
    CHECK_THROWS_AS(PositivePair(std::nan(""), 1.0), DomainError);
    CHECK_THROWS_AS(PositivePair(1.0, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_NOTHROW(PositivePair(3.0, 3.0));
    CHECK_THROWS_AS(GapCoordinate(1.0), DomainError);
    CHECK_THROWS_AS(GapCoordinate(-0.1), DomainError);
}

TEST_CASE("classical means on the worked examples") {
    CHECK(arithmetic_mean({1, 3}) == 2.0);
    CHECK(arithmetic_mean({2, 4}) == 3.0);
    CHECK(arithmetic_mean({7.25, 7.25}) == 7.25);

    CHECK(geometric_mean({4, 9}) == 6.0);
    CHECK(geometric_mean({1, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(geometric_mean({0.3, 0.3}) == 0.3);

    CHECK(harmonic_mean({1, 1}) == 1.0);
    CHECK(harmonic_mean({1, 3}) == 1.5);
    CHECK(harmonic_mean({2, 6}) == 3.0);
}

TEST_CASE("identric mean closed forms") {
    CHECK(rel_close(identric_mean({1, 2}), kFourOverE, 1e-13));
    CHECK(rel_close(identric_mean({2, 1}), kFourOverE, 1e-13));
    CHECK(rel_close(identric_mean({2, 4}), kEightOverE, 1e-13));
    CHECK(identric_mean({5, 5}) == 5.0);
    // Raw formula (1/e)(a^a/b^b)^{1/(a-b)} overflows here; the gap path does not.
    const double big = identric_mean({1e300, 5e299});
    CHECK(std::isfinite(big));
    CHECK(rel_close(big, 1e300 * identric_mean({1.0, 0.5}), 1e-13));
}

TEST_CASE("identric mean against the raw definition") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const double a = oracle::log_uniform(rng, 0.05, 20.0);
        const double b = oracle::log_uniform(rng, 0.05, 20.0);
        if (a == b) continue;
        const double ref = static_cast<double>(oracle::identric(a, b));
        CHECK(rel_close(identric_mean({a, b}), ref, 1e-13));
    }
}

TEST_CASE("Q_{t,s} special cases") {
    const PositivePair p(1.0, 3.0);
    CHECK(q_mean(p, 0.5, 1.0) == arithmetic_mean(p));
    CHECK(q_mean(p, 0.5, 7.0) == arithmetic_mean(p));
    CHECK(q_mean({4, 9}, 0.0, 1.0) == doctest::Approx(6.0).epsilon(1e-15));
    // Q_{t,2} = H(ta + (1-t)b, tb + (1-t)a); (0.2, 2) on (1, 3) gives H(2.6, 1.4).
    CHECK(q_mean(p, 0.2, 2.0) == doctest::Approx(1.82).epsilon(1e-14));
    CHECK(q_mean({5, 5}, 0.1, 3.0) == 5.0);

    CHECK_THROWS_AS(q_mean(p, -0.01, 1.0), DomainError);
    CHECK_THROWS_AS(q_mean(p, 0.51, 1.0), DomainError);
    CHECK_THROWS_AS(q_mean(p, 0.2, 0.99), DomainError);
}

TEST_CASE("gap coordinate") {
    CHECK(gap({1, 3}).value() == 0.5);
    CHECK(gap({3, 1}).value() == 0.5);
    CHECK(gap({2.5, 2.5}).value() == 0.0);
    CHECK(gap({1, 2}).value() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(gap({1e308, 1e308 / 3}).value() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("gap round trip: pair -> gap -> pair up to scale and order") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double a = oracle::log_uniform(rng, 1e-6, 1e6);
        const double b = oracle::log_uniform(rng, 1e-6, 1e6);
        const double v = gap({a, b}).value();
        const PositivePair back = PositivePair::from_gap(v);
        const double hi = std::max(a, b), lo = std::min(a, b);
        // (1+v)/(1-v) recovers hi/lo
        CHECK(rel_close(back.a() / back.b(), hi / lo, 8 * kEps * (1.0 + hi / lo)));
        CHECK(gap(back).value() == doctest::Approx(v).epsilon(4 * kEps));
    }
}

TEST_CASE("log ratio ln(I/A) as a function of the gap") {
    CHECK(log_ratio_I_over_A(0.0) == 0.0);
    CHECK(log_ratio_I_over_A(1.0 / 3.0) == doctest::Approx(kLogEightOverThreeE).epsilon(1e-14));
    CHECK(std::log(identric_mean({1, 2}) / arithmetic_mean({1, 2})) ==
          doctest::Approx(kLogEightOverThreeE).epsilon(1e-13));
    const double ln_2_over_e = -constants::ln_e_over_2;
    CHECK(std::fabs(log_ratio_I_over_A(1.0 - 1e-9) - ln_2_over_e) <= 1e-6);
    CHECK_THROWS_AS(log_ratio_I_over_A(1.0), DomainError);
    for (double v : {1e-9, 1e-4, 0.1, 0.49, 0.5, 0.9, 0.999999})
        CHECK(log_ratio_I_over_A(v) < 0.0);
}

TEST_CASE("series and direct paths agree on ln(I/A)/v^2 for small gaps") {
    // Series: four terms through v^8. Direct: the closed form in 113-bit
    // arithmetic; in binary64 it carries absolute error ~1e-16 and would be
    // useless at v = 1e-8.
    for (int i = 0; i < 100; ++i) {
        const double v = std::pow(10.0, -8.0 + 5.0 * i / 99.0);
        const double series = -detail::log_ratio_A_over_I_series(v, 4) / (v * v);
        const double direct = extended::log_ratio_I_over_A(v).value / (v * v);
        CHECK(rel_close(series, direct, 1e-12));
    }
}

TEST_CASE("library log ratio matches the extended closed form everywhere") {
    for (int i = 1; i < 400; ++i) {
        const double v = i / 400.0;
        const auto ref = extended::log_ratio_I_over_A(v);
        CHECK(std::fabs(log_ratio_I_over_A(v) - ref.value) <= 8 * kEps * std::fabs(ref.value) + 1e-300);
    }
}

TEST_CASE("property: symmetry, homogeneity and the ordering chain") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> lam_exp(-3.0, 3.0);
    int strict_checked = 0;
    for (int i = 0; i < 2000; ++i) {
        const double a = oracle::log_uniform(rng, 1e-6, 1e6);
        const double b = oracle::log_uniform(rng, 1e-6, 1e6);
        const PositivePair ab(a, b), ba(b, a);
        const double A = arithmetic_mean(ab), G = geometric_mean(ab), H = harmonic_mean(ab),
                     I = identric_mean(ab);

        CHECK(A == arithmetic_mean(ba));
        CHECK(G == geometric_mean(ba));
        CHECK(H == harmonic_mean(ba));
        CHECK(I == identric_mean(ba));

        const double lam = std::pow(10.0, lam_exp(rng));
        const PositivePair scaled(lam * a, lam * b);
        CHECK(rel_close(arithmetic_mean(scaled), lam * A, 4 * kEps));
        CHECK(rel_close(geometric_mean(scaled), lam * G, 4 * kEps));
        CHECK(rel_close(harmonic_mean(scaled), lam * H, 4 * kEps));
        CHECK(rel_close(identric_mean(scaled), lam * I, 4 * kEps));

        CHECK(H <= G);
        CHECK(G <= I);
        CHECK(I <= A);
        if (gap(ab).value() > 1e-6) {
            ++strict_checked;
            CHECK(H < G);
            CHECK(G < I);
            CHECK(I < A);
        }
    }
    CHECK(strict_checked > 1500);
}

TEST_CASE("property: identric consistency with the gap reduction") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const double v = std::pow(10.0, std::uniform_real_distribution<double>(-8.0, std::log10(1 - 1e-8))(rng));
        const double scale = oracle::log_uniform(rng, 1e-3, 1e3);
        const PositivePair p(scale * (1 + v), scale * (1 - v));
        const double lhs = std::exp(log_ratio_I_over_A(gap(p))) * arithmetic_mean(p);
        CHECK(rel_close(lhs, identric_mean(p), 1e-12));
    }
}

TEST_CASE("property: Q_{t,s} increases with t") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> sd(1.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const PositivePair p(oracle::log_uniform(rng, 1e-3, 1e3), oracle::log_uniform(rng, 1e-3, 1e3));
        if (gap(p).value() < 1e-2) continue;
        const double s = sd(rng);
        double prev = q_mean(p, 0.0, s);
        for (int k = 1; k <= 50; ++k) {
            const double q = q_mean(p, 0.5 * k / 50.0, s);
            CHECK(q > prev);
            prev = q;
        }
    }
}

TEST_CASE("property: Q_{t,2} is the harmonic mean of the shifted pair") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> td(0.0, 0.5);
    for (int i = 0; i < 1000; ++i) {
        const double a = oracle::log_uniform(rng, 1e-3, 1e3);
        const double b = oracle::log_uniform(rng, 1e-3, 1e3);
        const double t = td(rng);
        const double h = harmonic_mean({t * a + (1 - t) * b, t * b + (1 - t) * a});
        CHECK(rel_close(q_mean({a, b}, t, 2.0), h, 1e-12));
    }
}
