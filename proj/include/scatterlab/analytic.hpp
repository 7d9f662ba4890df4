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

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "scatterlab/constants.hpp"

namespace scatterlab::analytic {

/// Spatially averaged bistatic scattering cross-section of a straight wire
/// dipole of electrical length L/lambda, normalized by lambda^2.
///
/// Empirical closed form
///   sigma/lambda^2 = (1.178 L/l + 0.179 ln(22.368 L/l) - 0.131) / ln^2(22.368 L/l),
/// intended for resonant lengths L = n lambda/2 (n odd); the canonical grid
/// is L/lambda in {0.5, 1.5, 2.5, 3.5, 4.5}.
inline double avg_dipole_xsec(double l_over_lambda) {
    detail::require_positive(l_over_lambda, "L/lambda");
    const double arg = 22.368 * l_over_lambda;
    if (!(arg > 1.0))
        throw std::domain_error("avg_dipole_xsec: log argument 22.368*L/lambda must exceed 1");
    const double ln = std::log(arg);
    return (1.178 * l_over_lambda + 0.179 * ln - 0.131) / (ln * ln);
}

/// Far-field reference distance of an antenna of gain g_o at wavelength
/// lambda for a tolerated gain reduction factor gamma_a:
///   R_FF = (4 lambda g_o / pi^2) sqrt(alpha_e / (1 - gamma_a)).
inline double far_field_distance(double lambda_m, double g_o, double gamma_a, double alpha_e) {
    detail::require_positive(lambda_m, "lambda [m]");
    detail::require_positive(g_o, "antenna gain");
    detail::require_positive(alpha_e, "alpha_E");
    if (!(gamma_a > 0.0 && gamma_a < 1.0))
        throw std::domain_error("far_field_distance: gamma_A must lie in (0, 1)");
    return 4.0 * lambda_m * g_o / (pi * pi) * std::sqrt(alpha_e / (1.0 - gamma_a));
}

struct PackingEstimate {
    std::int64_t count; // floor of the packed-sphere estimate, 0 if below one
    double raw;         // un-floored value, diagnostic
    bool below_one() const { return raw < 1.0; }
};

/// Largest number of mutually far-field scatterers that fit in a sphere of
/// radius r_s when each occupies an exclusion sphere of diameter r_ff:
///   N_s = floor(8 eta_pack (r_s/r_ff)^3).
inline PackingEstimate max_packed_count(double r_s, double r_ff, double eta_pack) {
    detail::require_positive(r_s, "R_s [m]");
    detail::require_positive(r_ff, "R_FF [m]");
    if (eta_pack < 0.0)
        throw std::invalid_argument("eta_pack must be non-negative");
    const double ratio = r_s / r_ff;
    const double raw = 8.0 * eta_pack * ratio * ratio * ratio;
    if (raw < 1.0)
        return {0, raw};
    return {static_cast<std::int64_t>(std::floor(raw)), raw};
}

/// Scatterer density of the packed arrangement, rho_s = 6 eta_pack / (pi r_ff^3).
inline double packed_density(double r_ff, double eta_pack) {
    detail::require_positive(r_ff, "R_FF [m]");
    if (eta_pack < 0.0)
        throw std::invalid_argument("eta_pack must be non-negative");
    return 6.0 * eta_pack / (pi * r_ff * r_ff * r_ff);
}

/// K-factor for a fixed number of scatterers in a sphere of radius r_s:
///   K = 8 pi D_or r_s^2 / (3 N_s sigma_avg).
inline double k_fixed_count(double directivity_rx, double r_s, std::int64_t n_s,
                            double sigma_avg_m2) {
    detail::require_positive(directivity_rx, "D_or");
    detail::require_positive(r_s, "R_s [m]");
    detail::require(n_s >= 1, "N_s must be >= 1");
    detail::require_positive(sigma_avg_m2, "sigma_avg [m^2]");
    return 8.0 * pi * directivity_rx * r_s * r_s /
           (3.0 * static_cast<double>(n_s) * sigma_avg_m2);
}

/// K-factor at a fixed scatterer density rho_s:
///   K = 2 D_or / (rho_s r_s sigma_avg).
inline double k_fixed_density(double directivity_rx, double rho_s, double r_s,
                              double sigma_avg_m2) {
    detail::require_positive(directivity_rx, "D_or");
    detail::require_positive(rho_s, "rho_s [1/m^3]");
    detail::require_positive(r_s, "R_s [m]");
    detail::require_positive(sigma_avg_m2, "sigma_avg [m^2]");
    return 2.0 * directivity_rx / (rho_s * r_s * sigma_avg_m2);
}

/// Lower bound of the K-factor when the volume is packed at eta_pack with
/// scatterers spaced by their far-field distance:
///   K = pi D_or r_ff^3 / (3 eta_pack r_s sigma_avg).
inline double k_lower_bound(double directivity_rx, double r_ff, double r_s, double sigma_avg_m2,
                            double eta_pack) {
    detail::require_positive(directivity_rx, "D_or");
    detail::require_positive(r_ff, "R_FF [m]");
    detail::require_positive(r_s, "R_s [m]");
    detail::require_positive(sigma_avg_m2, "sigma_avg [m^2]");
    detail::require_positive(eta_pack, "eta_pack");
    return pi * directivity_rx * r_ff * r_ff * r_ff / (3.0 * eta_pack * r_s * sigma_avg_m2);
}

/// Friis line-of-sight power, (lambda / 4 pi r_o)^2 G_or G_ot P_t.
inline double los_power(double lambda_m, double r_o, double gain_rx, double gain_tx,
                        double tx_power_w) {
    detail::require_positive(lambda_m, "lambda [m]");
    detail::require_positive(r_o, "r_o [m]");
    detail::require_positive(gain_rx, "G_or");
    detail::require_positive(gain_tx, "G_ot");
    detail::require_positive(tx_power_w, "P_t [W]");
    const double friis = lambda_m / (4.0 * pi * r_o);
    return friis * friis * gain_rx * gain_tx * tx_power_w;
}

/// Mean scattered (multipath) power collected by the receive antenna,
///   P_RIMP = (3 N_s / 4 pi r_s^2) (lambda / 4 pi r_o)^2 (e_r / 2) G_ot sigma_avg P_t.
inline double rimp_power(std::int64_t n_s, double r_s, double lambda_m, double r_o,
                         double radiation_efficiency, double gain_tx, double sigma_avg_m2,
                         double tx_power_w) {
    detail::require(n_s >= 0, "N_s must be >= 0");
    detail::require_positive(r_s, "R_s [m]");
    detail::require_positive(lambda_m, "lambda [m]");
    detail::require_positive(r_o, "r_o [m]");
    detail::require_positive(radiation_efficiency, "e_r");
    detail::require_positive(gain_tx, "G_ot");
    detail::require_positive(sigma_avg_m2, "sigma_avg [m^2]");
    detail::require_positive(tx_power_w, "P_t [W]");
    if (n_s == 0)
        return 0.0;
    const double friis = lambda_m / (4.0 * pi * r_o);
    return 3.0 * static_cast<double>(n_s) / (4.0 * pi * r_s * r_s) * friis * friis *
           0.5 * radiation_efficiency * gain_tx * sigma_avg_m2 * tx_power_w;
}

} // namespace scatterlab::analytic
