#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "netlab/errors.hpp"

namespace netlab {

inline double mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

/// Unbiased (n-1) sample variance.
inline double sample_variance(std::span<const double> x) {
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

inline double sample_stdev(std::span<const double> x) { return std::sqrt(sample_variance(x)); }

/// Nearest-rank percentile on an ascending-sorted span: the value at 1-indexed
/// rank max(1, ceil(p/100 * n)). Deterministic, no interpolation.
inline double nearest_rank(std::span<const double> sorted, double percentile) {
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * n));
    if (rank < 1) rank = 1;
    if (rank > sorted.size()) rank = sorted.size();
    return sorted[rank - 1];
}

struct FiveNumber {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// Five-number summary with nearest-rank quartiles. Input need not be sorted.
inline FiveNumber five_number(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    FiveNumber f;
    f.min = sorted.front();
    f.q1 = nearest_rank(sorted, 25.0);
    f.median = nearest_rank(sorted, 50.0);
    f.q3 = nearest_rank(sorted, 75.0);
    f.max = sorted.back();
    return f;
}

/// Two-sided p-value for a t statistic with `dof` degrees of freedom.
inline double student_t_two_sided_p(double statistic, double dof) {
    boost::math::students_t_distribution<double> dist(dof);
    return 2.0 * boost::math::cdf(dist, -std::abs(statistic));
}

struct PearsonResult {
    double r = 0.0;
    double p_value = 1.0;
    std::int64_t n = 0;
};

/// Pearson correlation with a two-sided significance p-value from the
/// t-distributed statistic r*sqrt((n-2)/(1-r^2)). Returns nullopt when either
/// vector is constant (correlation undefined).
inline std::optional<PearsonResult> pearson(std::span<const double> x,
                                            std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 3) return std::nullopt;
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    double r = sxy / std::sqrt(sxx * syy);
    r = std::clamp(r, -1.0, 1.0);
    PearsonResult out;
    out.r = r;
    out.n = static_cast<std::int64_t>(n);
    if (std::abs(r) == 1.0) {
        out.p_value = 0.0;
    } else {
        const double t = r * std::sqrt((static_cast<double>(n) - 2.0) / (1.0 - r * r));
        out.p_value = student_t_two_sided_p(t, static_cast<double>(n) - 2.0);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Portable seeded randomness.
//
// All randomness in the library flows through std::mt19937_64 (bit-exact per
// the standard) plus the explicit transforms below, so a run is reproducible
// from the seed and this file alone. Independent streams are derived from a
// master seed by index via the splitmix64 finalizer.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1): top 53 bits of one engine draw.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n): Lemire multiply-shift reduction of one draw.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    /// Standard normal via one Box-Muller cosine term (two u01 draws,
    /// sine partner discarded to keep the draw order flat).
    double normal() {
        double u1 = u01();
        const double u2 = u01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

    double lognormal(double mean_log, double sd_log) {
        return std::exp(mean_log + sd_log * normal());
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace netlab
