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

#include "scatterlab/bessel.hpp"
#include "scatterlab/constants.hpp"
#include "scatterlab/quadrature.hpp"

namespace scatterlab {

/// Parameters of the Rician envelope distribution in the (K, P_r)
/// parameterization: K is the ratio of deterministic to scattered power and
/// P_r the total mean power E[|v|^2].
struct RicianParams {
    double k;       // K-factor, >= 0 (0 = Rayleigh)
    double total_power; // P_r > 0

    RicianParams(double k_factor, double p_r) : k(k_factor), total_power(p_r) {
        detail::require(k_factor >= 0.0, "Rician K must be >= 0");
        detail::require_positive(p_r, "Rician total power");
    }

    bool operator==(const RicianParams &) const = default;
};

/// Rician envelope density
///   f(x) = 2(1+K)x/P_r exp(-K - (1+K)x^2/P_r) I0(2 sqrt(K(1+K)/P_r) x).
///
/// Evaluated with the exponentially scaled Bessel function: the exponent
/// -K - (1+K)x^2/P_r + z with z = 2 sqrt(K(1+K)/P_r) x collapses to
/// -(sqrt((1+K)/P_r) x - sqrt(K))^2, which never overflows no matter how
/// large K gets.
inline double rician_pdf(double x, const RicianParams &p) {
    detail::require(x >= 0.0, "envelope must be >= 0");
    if (x == 0.0)
        return 0.0;
    const double kp1 = 1.0 + p.k;
    const double z = 2.0 * std::sqrt(p.k * kp1 / p.total_power) * x;
    const double u = std::sqrt(kp1 / p.total_power) * x - std::sqrt(p.k);
    return 2.0 * kp1 * x / p.total_power * std::exp(-u * u) * bessel_i0e(z);
}

/// Envelope value beyond which the upper tail mass is negligible
/// (< 1e-30); used as the integration cutoff for the numeric CDF.
inline double rician_upper_bound(const RicianParams &p) {
    const double mean_sq = std::sqrt(p.total_power);
    const double spread = std::sqrt(p.total_power / (2.0 * (1.0 + p.k)));
    return mean_sq + 14.0 * spread;
}

/// Numeric CDF by adaptive quadrature of the density.
inline double rician_cdf(double x, const RicianParams &p, double tol = 1e-9) {
    if (x <= 0.0)
        return 0.0;
    const double hi = rician_upper_bound(p);
    const double upper = std::min(x, hi);
    const double v = integrate_adaptive([&](double u) { return rician_pdf(u, p); }, 0.0, upper, tol);
    return std::clamp(v, 0.0, 1.0);
}

} // namespace scatterlab
