#pragma once

// Grid kernels: evaluate a margin function at every sample point and reduce
// to (worst margin, its index, first violating index). Each kernel has a
// serial reference version and an OpenMP version; the reduction is
// associative and commutative with index tie-breaking, so both return
// bit-identical results for any thread count or schedule.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace imean::kernels {

enum class Backend { serial, openmp };

struct MarginSummary {
    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_index = 0;
    /// Smallest index with margin < 0; `npos` when none.
    std::size_t first_violation = npos;
    /// Number of points with margin < 0.
    std::size_t violations = 0;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    [[nodiscard]] bool violated() const noexcept { return first_violation != npos; }
};

namespace detail {

inline void absorb(MarginSummary& acc, double m, std::size_t i) noexcept {
    if (m < acc.worst || (m == acc.worst && i < acc.worst_index)) {
        acc.worst = m;
        acc.worst_index = i;
    }
    if (m < 0.0) {
        ++acc.violations;
        if (i < acc.first_violation) acc.first_violation = i;
    }
}

inline void merge(MarginSummary& acc, const MarginSummary& other) noexcept {
    if (other.worst < acc.worst || (other.worst == acc.worst && other.worst_index < acc.worst_index)) {
        acc.worst = other.worst;
        acc.worst_index = other.worst_index;
    }
    acc.violations += other.violations;
    if (other.first_violation < acc.first_violation) acc.first_violation = other.first_violation;
}

}  // namespace detail

template <class MarginFn>
void evaluate_serial(std::span<const double> xs, std::span<double> out, MarginFn&& fn) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = fn(xs[i]);
}

template <class MarginFn>
void evaluate_openmp(std::span<const double> xs, std::span<double> out, MarginFn&& fn) {
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(xs[static_cast<std::size_t>(i)]);
}

inline MarginSummary summarize_serial(std::span<const double> margins) noexcept {
    MarginSummary acc;
    for (std::size_t i = 0; i < margins.size(); ++i) detail::absorb(acc, margins[i], i);
    return acc;
}

inline MarginSummary summarize_openmp(std::span<const double> margins) {
    MarginSummary total;
    const auto n = static_cast<std::ptrdiff_t>(margins.size());
#pragma omp parallel
    {
        MarginSummary local;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i)
            detail::absorb(local, margins[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
#pragma omp critical(imean_margin_merge)
        detail::merge(total, local);
    }
    return total;
}

/// Evaluate `fn` on every grid point with the chosen backend.
template <class MarginFn>
std::vector<double> evaluate(std::span<const double> xs, MarginFn&& fn, Backend backend) {
    std::vector<double> out(xs.size());
    if (backend == Backend::openmp)
        evaluate_openmp(xs, out, fn);
    else
        evaluate_serial(xs, out, fn);
    return out;
}

inline MarginSummary summarize(std::span<const double> margins, Backend backend) {
    return backend == Backend::openmp ? summarize_openmp(margins) : summarize_serial(margins);
}

/// Backend used by the verification routines unless told otherwise.
inline Backend default_backend() noexcept {
#ifdef _OPENMP
    return Backend::openmp;
#else
    return Backend::serial;
#endif
}

}  // namespace imean::kernels
