// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock budget.

#include "imean/certify.hpp"
#include "imean/extended.hpp"
#include "imean/family.hpp"
#include "imean/means.hpp"
#include "imean/numeric.hpp"
#include "imean/thresholds.hpp"
#include "imean/verification.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace imean;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFourOverE = 1.4715177646857692864;
constexpr double kEightOverE = 2.9430355293715385728;
constexpr double kLnEOver2 = 0.30685281944005469058;
constexpr double kSValues[] = {1.0, 1.5, 2.0, 3.0, 10.0};

bool rel_close(double x, double y, double tol) { return std::fabs(x - y) <= tol * std::fabs(y); }

// Collects failures for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            ++failed_;
            if (first_.empty()) first_ = what;
        }
    }
    [[nodiscard]] bool ok() const noexcept { return failed_ == 0; }
    [[nodiscard]] std::string detail() const {
        std::ostringstream os;
        os << total_ - failed_ << "/" << total_ << " checks";
        if (!first_.empty()) os << "; first failure: " << first_;
        return os.str();
    }
    std::string note;

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::string first_;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// ---- 1 ----------------------------------------------------------------------
void closed_forms(Check& c) {
    c.expect(rel_close(identric_mean({1, 2}), kFourOverE, 1e-13), "I(1,2) = 4/e");
    c.expect(rel_close(identric_mean({2, 4}), kEightOverE, 1e-13), "I(2,4) = 8/e");
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> td(0.0, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = oracle::log_uniform(rng, 1e-3, 1e3);
        const double b = oracle::log_uniform(rng, 1e-3, 1e3);
        const double t = td(rng);
        const double h = harmonic_mean({t * a + (1 - t) * b, t * b + (1 - t) * a});
        const double q = q_mean({a, b}, t, 2.0);
        worst = std::max(worst, std::fabs(q - h) / h);
        c.expect(rel_close(q, h, 1e-12), "Q_{t,2} = H(shifted pair)");
    }
    c.note = fmt("max rel err Q_{t,2} vs H %.2e", worst);
}

// ---- 2 ----------------------------------------------------------------------
void series_vs_direct(Check& c) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double v = std::pow(10.0, -8.0 + 5.0 * i / 99.0);
        const double series = -detail::log_ratio_A_over_I_series(v) / (v * v);
        const double direct = extended::log_ratio_I_over_A(v).value / (v * v);
        worst = std::max(worst, std::fabs(series - direct) / std::fabs(direct));
        c.expect(rel_close(series, direct, 1e-12), "series vs direct at v = " + fmt("%.3g", v));
    }
    c.note = fmt("max rel diff %.2e", worst);
}

// ---- 3 ----------------------------------------------------------------------
void sharp_holds(Check& c) {
    for (double s : kSValues) {
        const ThresholdSet th = sharp_thresholds(s);
        c.expect(verify_family_inequality(th.p, s, Side::lower).holds(), "lower at p_s, s = " + fmt("%g", s));
        c.expect(verify_family_inequality(th.q, s, Side::upper).holds(), "upper at q_s, s = " + fmt("%g", s));
    }
}

// ---- 4 ----------------------------------------------------------------------
void sharp_fails(Check& c) {
    double max_lo = 1.0, min_hi = 0.0;
    for (double s : kSValues) {
        const ThresholdSet th = sharp_thresholds(s);
        const auto lo = verify_family_inequality(th.p + 1e-3, s, Side::lower);
        c.expect(lo.witness && lo.witness->x > 0.99 && lo.witness->confirmed,
                 "lower witness x > 0.99, s = " + fmt("%g", s));
        if (lo.witness) max_lo = std::min(max_lo, lo.witness->x);
        const auto up = verify_family_inequality(th.q - 1e-3, s, Side::upper);
        c.expect(up.witness && up.witness->x < 0.2 && up.witness->confirmed,
                 "upper witness x < 0.2, s = " + fmt("%g", s));
        if (up.witness) min_hi = std::max(min_hi, up.witness->x);
    }
    c.note = "lower witnesses x >= " + fmt("%.6f", max_lo) + ", upper witnesses x <= " + fmt("%.3g", min_hi);
}

// ---- 5 ----------------------------------------------------------------------
void empirical(Check& c) {
    double worst = 0.0;
    for (double s : {1.0, 2.0, 5.0}) {
        const ThresholdSet th = sharp_thresholds(s);
        const double pe = empirical_threshold(s, Side::lower);
        const double qe = empirical_threshold(s, Side::upper);
        worst = std::max({worst, std::fabs(pe - th.p), std::fabs(qe - th.q)});
        c.expect(std::fabs(pe - th.p) <= 1e-5, "p_s recovery, s = " + fmt("%g", s));
        c.expect(std::fabs(qe - th.q) <= 1e-5, "q_s recovery, s = " + fmt("%g", s));
    }
    c.note = fmt("max |empirical - closed| %.2e", worst);
}

// ---- 6 ----------------------------------------------------------------------
void exponential(Check& c) {
    c.expect(verify_exponential_bounds(1.0 / 6.0, kLnEOver2).holds(), "sharp constants hold");
    const auto lo = verify_exponential_bounds(1.0 / 6.0 + 1e-3, kLnEOver2);
    c.expect(!lo.lower.holds() && lo.lower.witness && lo.lower.witness->x < 0.1 && lo.lower.witness->confirmed,
             "p = 1/6 + 1e-3 fails near 0");
    const auto hi = verify_exponential_bounds(1.0 / 6.0, kLnEOver2 - 1e-3);
    c.expect(!hi.upper.holds() && hi.upper.witness && hi.upper.witness->x > 0.9 && hi.upper.witness->confirmed,
             "q = ln(e/2) - 1e-3 fails near 1");
    const double r0 = -log_ratio_I_over_A(1e-4) / 1e-8;
    const double v1 = 1 - 1e-9;
    const double r1 = -log_ratio_I_over_A(v1) / (v1 * v1);
    c.expect(std::fabs(r0 - 1.0 / 6.0) <= 1e-6, "ratio at 1e-4");
    c.expect(std::fabs(r1 - kLnEOver2) <= 1e-6, "ratio at 1 - 1e-9");
    if (lo.lower.witness && hi.upper.witness)
        c.note = "witnesses at x = " + fmt("%.3g", lo.lower.witness->x) + " and " + fmt("%.9f", hi.upper.witness->x);
}

// ---- 7 ----------------------------------------------------------------------
void prior_bounds(Check& c) {
    const double two_e = 2.0 / constants::e;
    const double trif = two_e * two_e;
    auto shifted_fails = [&](double p, double w, Side side) {
        const auto r = verify_convex_power_bound(p, w, side);
        return !r.holds() && r.witness && r.witness->confirmed;
    };
    c.expect(verify_convex_power_bound(1.0, 2.0 / 3.0, Side::lower).holds(), "Alzer-Qiu alpha = 2/3");
    c.expect(verify_convex_power_bound(1.0, two_e, Side::upper).holds(), "Alzer-Qiu beta = 2/e");
    c.expect(verify_convex_power_bound(2.0, trif, Side::lower).holds(), "Trif alpha = (2/e)^2");
    c.expect(verify_convex_power_bound(2.0, 2.0 / 3.0, Side::upper).holds(), "Trif beta = 2/3");
    c.expect(shifted_fails(1.0, 2.0 / 3.0 + 1e-3, Side::lower), "Alzer-Qiu alpha + 1e-3 fails");
    c.expect(shifted_fails(1.0, two_e - 1e-3, Side::upper), "Alzer-Qiu beta - 1e-3 fails");
    c.expect(shifted_fails(2.0, trif + 1e-3, Side::lower), "Trif alpha + 1e-3 fails");
    c.expect(shifted_fails(2.0, 2.0 / 3.0 - 1e-3, Side::upper), "Trif beta - 1e-3 fails");
    c.expect(verify_kou_power(1.1).classification == KouClass::reverse_holds, "Kou p = 1.1 reverse");
    c.expect(verify_kou_power(1.25).classification == KouClass::neither, "Kou p = 1.25 neither");
    c.expect(verify_kou_power(1.4).classification == KouClass::forward_holds, "Kou p = 1.4 forward");
}

// ---- 8 ----------------------------------------------------------------------
void certification(Check& c) {
    const double t = sharp_thresholds(2.0).p - 0.01;
    const auto r = certify_sign(t, 2.0, 0.01, 0.99, Sign::negative, 100000);
    c.expect(r.proved, "certified within 1e5 nodes");
    c.expect(r.nodes.size() <= 100000, "node budget respected");

    const FamilyParams params(t, 2.0);
    GridSpec g;
    g.count = 100000;
    g.spacing = Spacing::uniform;
    g.x_min = 0.01;
    g.x_max = 0.99;
    const auto xs = make_grid(g);
    std::size_t contradicted = 0;
    for (const auto& n : r.nodes) {
        if (n.status == CertStatus::split) continue;
        const auto first = std::lower_bound(xs.begin(), xs.end(), n.lo);
        for (auto it = first; it != xs.end() && *it <= n.hi; ++it) {
            const double f = family_f(params, *it);
            if (f >= 0.0 || !n.bound.contains(f)) ++contradicted;
        }
    }
    c.expect(contradicted == 0, "no leaf contradicted by a grid sample");
    c.note = std::to_string(r.nodes.size()) + " nodes, " + std::to_string(r.leaves) + " leaves, " +
             std::to_string(xs.size()) + " grid samples";
}

// ---- 9 ----------------------------------------------------------------------
void properties(Check& c) {
    constexpr int kN = 2000;
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> lam_exp(-3.0, 3.0), td(0.0, 0.5), sd(1.0, 10.0);

    for (int i = 0; i < kN; ++i) {
        const double a = oracle::log_uniform(rng, 1e-6, 1e6);
        const double b = oracle::log_uniform(rng, 1e-6, 1e6);
        const PositivePair ab(a, b), ba(b, a);
        const double A = arithmetic_mean(ab), G = geometric_mean(ab), H = harmonic_mean(ab),
                     I = identric_mean(ab);
        c.expect(A == arithmetic_mean(ba) && G == geometric_mean(ba) && H == harmonic_mean(ba) &&
                     I == identric_mean(ba),
                 "symmetry");
        const double lam = std::pow(10.0, lam_exp(rng));
        const PositivePair sc(lam * a, lam * b);
        c.expect(rel_close(arithmetic_mean(sc), lam * A, 4 * kEps) && rel_close(geometric_mean(sc), lam * G, 4 * kEps) &&
                     rel_close(harmonic_mean(sc), lam * H, 4 * kEps) && rel_close(identric_mean(sc), lam * I, 4 * kEps),
                 "homogeneity (4 ulp)");
        c.expect(H <= G && G <= I && I <= A, "ordering H <= G <= I <= A");
    }

    for (int i = 0; i < kN; ++i) {
        const PositivePair p(oracle::log_uniform(rng, 1e-3, 1e3), oracle::log_uniform(rng, 1e-3, 1e3));
        if (gap(p).value() < 1e-2) continue;
        const double s = sd(rng);
        const double t1 = td(rng), t2 = td(rng);
        const double lo = std::min(t1, t2), hi = std::max(t1, t2);
        if (hi - lo < 1e-6) continue;
        c.expect(q_mean(p, lo, s) < q_mean(p, hi, s), "t -> Q_{t,s} increasing");
    }

    std::uniform_real_distribution<double> ld(-6.0, 0.0);
    for (int i = 0; i < kN; ++i) {
        double v;
        do v = std::pow(10.0, ld(rng));
        while (v < 1e-6 || v > 1 - 1e-6);
        const double scale = oracle::log_uniform(rng, 1e-2, 1e2);
        const double a = scale * (1 + v), b = scale * (1 - v);
        const double t = td(rng), s = sd(rng);
        const double lhs = family_f(FamilyParams(t, s), gap({a, b}).value());
        c.expect(std::fabs(lhs - oracle::log_q_over_i(a, b, t, s)) <= 1e-12, "bridge identity (1e-12 abs)");
    }

    std::uniform_real_distribution<double> ud(0.0, 1.0), xd(0.05, 0.95);
    for (int i = 0; i < kN; ++i) {
        const auto p = FamilyParams::from_u(ud(rng), sd(rng));
        const double x = xd(rng), step = 1e-6;
        const double fd = (family_f(p, x + step) - family_f(p, x - step)) / (2 * step);
        const double an = family_h(p, x) / (x * x);
        c.expect(std::fabs(fd - an) <= 1e-5 * std::fabs(an), "f' = h/x^2 (1e-5 rel)");
    }
    c.note = "6 suites x " + std::to_string(kN) + " draws";
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "closed-form identities", 1.0, closed_forms},
        {2, "series/direct consistency of ln(I/A)/v^2", 1.0, series_vs_direct},
        {3, "sharp thresholds hold on the refined grid", 5.0, sharp_holds},
        {4, "just past the thresholds: confirmed witnesses", 5.0, sharp_fails},
        {5, "empirical threshold recovery", 30.0, empirical},
        {6, "exponential bounds and their sharp constants", 2.0, exponential},
        {7, "Alzer-Qiu, Trif and Kou power bounds", 5.0, prior_bounds},
        {8, "interval certification of f < 0 on [0.01, 0.99]", 10.0, certification},
        {9, "structural property suites", 60.0, properties},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= cr.budget_s;
        const bool ok = error.empty() && check.ok() && in_time;
        if (!ok) ++failures;
        std::printf("%s  criterion %d: %s (%.2f s of %.0f s; %s", ok ? "PASS" : "FAIL", cr.id, cr.title, secs,
                    cr.budget_s, check.detail().c_str());
        if (!check.note.empty()) std::printf("; %s", check.note.c_str());
        if (!error.empty()) std::printf("; exception: %s", error.c_str());
        if (!in_time) std::printf("; over time budget");
        std::printf(")\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
