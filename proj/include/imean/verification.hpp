#pragma once

// Numerical verification and falsification of the mean inequalities: grid
// checks, targeted counterexample search, empirical threshold recovery, and
// checks of the exponential and convex-power bounds on the identric mean.
//
// Margins are signed slacks: positive where the inequality holds. A margin
// of exactly zero counts as holding (a strict/non-strict distinction below
// one rounding unit is not decidable on the grid). Every negative margin
// reported as a witness is confirmed in 113-bit arithmetic first.

#include "imean/grid.hpp"
#include "imean/kernels.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace imean {

enum class Side { lower, upper };
enum class Verdict { holds_on_grid, violated };

struct Witness {
    double x = 0.0;              ///< gap coordinate
    double a = 0.0;              ///< reconstructed pair (1 + x, 1 - x)
    double b = 0.0;
    double margin = 0.0;         ///< binary64 margin
    double margin_extended = 0.0;
    double extended_error = 0.0; ///< error bound on margin_extended
    bool confirmed = false;      ///< margin_extended < -extended_error
};

struct VerificationReport {
    std::string check;
    Verdict verdict = Verdict::holds_on_grid;
    double worst_margin = 0.0;
    double worst_x = 0.0;
    std::optional<Witness> witness;  ///< present iff violated
    std::size_t samples = 0;
    std::size_t violations = 0;
    /// Negative binary64 margins that the extended recheck did not confirm.
    std::size_t rounding_artifacts = 0;
    GridSpec grid;
    std::vector<std::pair<std::string, double>> parameters;

    [[nodiscard]] bool holds() const noexcept { return verdict == Verdict::holds_on_grid; }
};

struct VerifyOptions {
    kernels::Backend backend = kernels::default_backend();
};

/// Grid check of Q_{t,s} < I (lower) or I < Q_{t,s} (upper), i.e. the sign of
/// f_{(1-2t)^2, s} on the grid.
VerificationReport verify_family_inequality(double t, double s, Side side,
                                            const GridSpec& grid = {},
                                            const VerifyOptions& options = {});

struct FalsifyResult {
    bool found = false;
    Witness witness;
    std::size_t points_tried = 0;
    std::string diagnostics;
};

/// Targeted search for a reversed inequality when t lies strictly outside the
/// sharp interval for `side`: near x = 1 for the lower side, near x = 0 for
/// the upper side. Throws DomainError when t is inside the interval.
FalsifyResult falsify(double t, double s, Side side);

/// Bisection on t in [0, 1/2] with the grid check as predicate. Returns the
/// boundary estimate, within `tol` of the grid-detectable boundary.
double empirical_threshold(double s, Side side, const GridSpec& grid = {}, double tol = 1e-7,
                           const VerifyOptions& options = {});

/// exp(p v^2) < A/I < exp(q v^2): checks g_p > 0 and g_q < 0 on the grid.
struct ExponentialBoundReport {
    VerificationReport lower;  ///< g_p > 0
    VerificationReport upper;  ///< g_q < 0
    bool within_sharp_constants = false;  ///< p <= 1/6 and q >= ln(e/2)

    [[nodiscard]] bool holds() const noexcept { return lower.holds() && upper.holds(); }
};

ExponentialBoundReport verify_exponential_bounds(double p_coef, double q_coef,
                                                 const GridSpec& grid = {},
                                                 const VerifyOptions& options = {});

/// Grid used for the convex-power checks: endpoint refined down to 1e-5 at
/// the origin. Below that the x^4 margin at the sharp weights drops under the
/// representation error of the weight literals (2/3 is not a binary64).
GridSpec convex_power_grid();

/// lower: w A^p + (1-w) G^p < I^p;  upper: I^p < w A^p + (1-w) G^p, for p >= 1.
VerificationReport verify_convex_power_bound(double p_exp, double weight, Side side,
                                             const GridSpec& grid = convex_power_grid(),
                                             const VerifyOptions& options = {});

/// Known sharp weight for the convex-power bound: p = 1 gives 2/3 (lower) and
/// 2/e (upper); p >= 2 gives (2/e)^p (lower) and 2/3 (upper). Empty otherwise.
std::optional<double> sharp_convex_weight(double p_exp, Side side);

enum class KouClass { forward_holds, reverse_holds, neither };

struct KouReport {
    double p_exp = 0.0;
    VerificationReport forward;  ///< I^p < (2/3) A^p + (1/3) G^p
    VerificationReport reverse;  ///< (2/3) A^p + (1/3) G^p < I^p
    KouClass classification = KouClass::neither;
    double forward_threshold = 0.0;  ///< ln(3/2) / ln(e/2)
    double reverse_threshold = 0.0;  ///< 6/5
};

KouReport verify_kou_power(double p_exp, const GridSpec& grid = convex_power_grid(),
                           const VerifyOptions& options = {});

const char* to_string(Side s) noexcept;
const char* to_string(Verdict v) noexcept;
const char* to_string(KouClass k) noexcept;
Side parse_side(const std::string& text);

}  // namespace imean
