// SPDX-License-Identifier: Apache-2.0
//
// scatterlab -- Rician K-factor laboratory for random scattering environments
// Copyright (C) 2026 the scatterlab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "scatterlab/bessel.hpp"
#include "scatterlab/constants.hpp"
#include "scatterlab/kfactor.hpp"
#include "scatterlab/rician.hpp"

namespace scatterlab::stats {

class degenerate_sample_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FitMethod { moments, max_likelihood_grid };

inline const char *fit_method_name(FitMethod m) {
    return m == FitMethod::moments ? "moments" : "max_likelihood_grid";
}

struct FitResult {
    RicianParams params;
    FitMethod method;
    double gof_statistic; // Kolmogorov-Smirnov distance against the fit
    std::int64_t n;
};

/// Moment ratio g(K) = E[|v|]^2 / E[|v|^2] of the Rician envelope.
/// Strictly increasing from pi/4 at K=0 towards 1; expressed through the
/// scaled Bessel functions so it stays finite for K up to ~1e16.
inline double rician_moment_ratio(double k) {
    detail::require(k >= 0.0, "K must be >= 0");
    // E[|v|] = sqrt(pi P / (4(1+K))) e^{-K/2} [(1+K) I0(K/2) + K I1(K/2)]
    const double half = 0.5 * k;
    const double l = (1.0 + k) * bessel_i0e(half) + k * bessel_i1e(half);
    return pi / (4.0 * (1.0 + k)) * l * l;
}

namespace detail_stats {

/// Inverts the moment ratio by exponential bracketing plus bisection in
/// log K; accurate to 1e-10 relative in K.
inline double invert_moment_ratio(double ratio) {
    const double r0 = pi / 4.0;
    if (ratio <= r0)
        return 0.0;
    const double k_max = 1e8;
    if (ratio >= rician_moment_ratio(k_max))
        return k_max;

    double lo = 1e-12, hi = 1.0;
    while (rician_moment_ratio(hi) < ratio)
        hi *= 2.0; // bounded by the k_max check above
    while (rician_moment_ratio(lo) > ratio)
        lo *= 0.5;

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = std::sqrt(lo * hi);
        if (rician_moment_ratio(mid) < ratio)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-10 * hi)
            break;
    }
    return 0.5 * (lo + hi);
}

inline double log_likelihood(std::span<const double> envelopes, const RicianParams &p) {
    // log f = log(2(1+K)x/P) - (sqrt((1+K)/P) x - sqrt(K))^2 + log i0e(z)
    const double kp1 = 1.0 + p.k;
    const double sk = std::sqrt(p.k);
    const double c = std::sqrt(kp1 / p.total_power);
    double ll = 0.0;
    for (double x : envelopes) {
        const double u = c * x - sk;
        const double z = 2.0 * std::sqrt(p.k * kp1 / p.total_power) * x;
        ll += std::log(2.0 * kp1 * x / p.total_power) - u * u + std::log(bessel_i0e(z));
    }
    return ll;
}

} // namespace detail_stats

/// Kolmogorov-Smirnov distance between pre-sorted envelope samples and the
/// Rician CDF (numerically integrated density, accumulated interval by
/// interval so each segment is integrated once).
inline double ks_distance_sorted(const std::vector<double> &sorted, const RicianParams &params) {
    detail::require(!sorted.empty(), "ks_distance needs samples");
    const double n = static_cast<double>(sorted.size());
    const double hi = rician_upper_bound(params);
    double cdf = 0.0;
    double prev = 0.0;
    double dist = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double x = std::min(sorted[i], hi);
        if (x > prev) {
            cdf += integrate_adaptive([&](double u) { return rician_pdf(u, params); }, prev, x,
                                      1e-12);
            prev = x;
        }
        const double f = std::clamp(cdf, 0.0, 1.0);
        dist = std::max(dist, std::max(f - static_cast<double>(i) / n,
                                       static_cast<double>(i + 1) / n - f));
    }
    return dist;
}

inline double ks_distance(std::span<const double> envelopes, const RicianParams &params) {
    std::vector<double> sorted(envelopes.begin(), envelopes.end());
    std::sort(sorted.begin(), sorted.end());
    return ks_distance_sorted(sorted, params);
}

/// Fits (K, P_r) to envelope samples.
///
/// Moments: P_r = <x^2>, K from inverting <x>^2/<x^2> (monotone 1-D
/// root-finding).  max_likelihood_grid additionally polishes K by a
/// golden-section search of the likelihood around the moment solution with
/// P_r held at the sample power.
inline FitResult fit_rician(std::span<const double> envelopes,
                            FitMethod method = FitMethod::moments) {
    detail::require(envelopes.size() >= 100, "fit_rician needs at least 100 samples");

    scatterlab::detail::KahanSum s1, s2;
    for (double x : envelopes) {
        detail::require(x >= 0.0, "envelopes must be non-negative");
        s1.add(x);
        s2.add(x * x);
    }
    const double n = static_cast<double>(envelopes.size());
    const double m1 = s1.value() / n;
    const double m2 = s2.value() / n;
    if (!(m2 > 0.0))
        throw degenerate_sample_error("fit_rician: all envelopes are zero");
    const double variance = m2 - m1 * m1;
    if (variance <= 16.0 * std::numeric_limits<double>::epsilon() * m2)
        throw degenerate_sample_error("fit_rician: sample variance is numerically zero");

    double k_hat = detail_stats::invert_moment_ratio(m1 * m1 / m2);

    if (method == FitMethod::max_likelihood_grid && k_hat > 0.0) {
        // Golden-section maximization of the log-likelihood in log K.
        double lo = std::log(k_hat) - std::log(4.0);
        double hi = std::log(k_hat) + std::log(4.0);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - gr * (hi - lo);
        double d = lo + gr * (hi - lo);
        double fc = detail_stats::log_likelihood(envelopes, RicianParams(std::exp(c), m2));
        double fd = detail_stats::log_likelihood(envelopes, RicianParams(std::exp(d), m2));
        for (int iter = 0; iter < 80 && (hi - lo) > 1e-6; ++iter) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - gr * (hi - lo);
                fc = detail_stats::log_likelihood(envelopes, RicianParams(std::exp(c), m2));
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + gr * (hi - lo);
                fd = detail_stats::log_likelihood(envelopes, RicianParams(std::exp(d), m2));
            }
        }
        k_hat = std::exp(0.5 * (lo + hi));
    }

    const RicianParams params(k_hat, m2);
    std::vector<double> sorted(envelopes.begin(), envelopes.end());
    std::sort(sorted.begin(), sorted.end());
    const double gof = ks_distance_sorted(sorted, params);
    return {params, method, gof, static_cast<std::int64_t>(envelopes.size())};
}

/// Asymptotic critical KS distance at significance alpha.
inline double ks_critical_value(std::int64_t n, double alpha = 0.01) {
    detail::require(n >= 1, "n must be >= 1");
    detail::require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

} // namespace scatterlab::stats
