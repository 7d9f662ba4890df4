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
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scatterlab/analytic.hpp"
#include "scatterlab/cloud.hpp"
#include "scatterlab/config.hpp"
#include "scatterlab/kfactor.hpp"
#include "scatterlab/parallel.hpp"
#include "scatterlab/rng.hpp"
#include "scatterlab/sweep.hpp"

namespace scatterlab::ensemble {

using SignalSample = std::complex<double>;

/// Per-scatterer amplitude of the single-scattering voltage model,
/// normalized to a unit direct term:
///
///   A = |v_d| sqrt(sigma_avg / (4 pi D_or)).
///
/// Matching contract: with <cos^2 psi> = 1/2 and <1/rho^2> = 3/R_s^2 the
/// scattered power is <|v_s|^2> = N_s A^2 (1/2)(3/R_s^2); setting that equal
/// to |v_d|^2 P_RIMP/P_LOS = |v_d|^2 3 N_s sigma / (8 pi D_or R_s^2) fixes
/// A as above, so the ensemble K converges to the fixed-count closed form
/// by construction.  A unit test asserts this match.
inline double scattered_amplitude(double sigma_avg_m2, double directivity_rx,
                                  double v_direct_abs = 1.0) {
    detail::require_positive(sigma_avg_m2, "sigma_avg [m^2]");
    detail::require_positive(directivity_rx, "D_or");
    return v_direct_abs * std::sqrt(sigma_avg_m2 / (4.0 * pi * directivity_rx));
}

/// Complex received sample for one cloud realization, direct term
/// normalized to v_d = 1:
///
///   v = 1 + A sum_n cos(psi_n) exp(-j k rho_n (1 - cos theta_n)) / rho_n.
///
/// The phase is the plane-wave incidence limit; the common factor
/// exp(-j k r_o)/r_o of the direct and scattered waves is absorbed into the
/// normalization.
inline SignalSample receive_voltage(const ScattererCloud &cloud, double sigma_avg_m2,
                                    double directivity_rx, Frequency f) {
    const double k = f.wavenumber();
    const double amplitude = scattered_amplitude(sigma_avg_m2, directivity_rx);
    std::complex<double> scattered{0.0, 0.0};
    for (std::size_t n = 0; n < cloud.size(); ++n) {
        const double rho = cloud.rho[n];
        if (rho <= 0.0)
            throw std::domain_error("receive_voltage: scatterer collides with the receiver");
        const double phase = -k * rho * (1.0 - std::cos(cloud.theta[n]));
        scattered += std::cos(cloud.psi[n]) / rho *
                     std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return 1.0 + amplitude * scattered;
}

inline SignalSample receive_voltage(const ScattererCloud &cloud, const ScenarioConfig &config,
                                    Frequency f) {
    return receive_voltage(cloud, config.scatterer.avg_cross_section_m2(f),
                           config.antenna.directivity_rx, f);
}

/// Analytic K-factor row matching the configured population model.
inline SweepRow analytic_row(const ScenarioConfig &config, Frequency f) {
    const double sigma = config.scatterer.avg_cross_section_m2(f);
    const double r_eq = config.geometry.equivalent_radius_m();
    const double d_or = config.antenna.directivity_rx;
    const std::int64_t n_s = config.scatterer_count(f);

    SweepMethod method = SweepMethod::analytic_fixed_count;
    double k = 0.0;
    switch (config.population.kind) {
    case PopulationKind::fixed_count:
        method = SweepMethod::analytic_fixed_count;
        k = analytic::k_fixed_count(d_or, r_eq, n_s, sigma);
        break;
    case PopulationKind::fixed_density:
        method = SweepMethod::analytic_fixed_density;
        k = analytic::k_fixed_density(d_or, config.population.per_m3, r_eq, sigma);
        break;
    case PopulationKind::max_packed:
        method = SweepMethod::analytic_lower_bound;
        k = analytic::k_lower_bound(d_or, config.scatterer_far_field_distance_m(f), r_eq, sigma,
                                    config.population.eta_pack);
        break;
    }
    return {f.hertz(), method,       k,     10.0 * std::log10(k), 0.0,
            n_s,       r_eq,         sigma, 0,                    config.seed};
}

/// Monte-Carlo sweep over the configured frequency grid: M independent
/// cloud realizations per frequency, one complex sample each, moment
/// estimator over the ensemble.  Emits an `mc` row plus the analytic
/// companion row per frequency.  Ensemble index i always maps to RNG
/// stream (seed, mc-domain | freq << 32 | i), so any worker count gives
/// bit-identical results.
inline SweepTable mc_sweep(const ScenarioConfig &config, unsigned workers = 0) {
    config.check();
    SweepTable table;
    const std::int64_t m = config.ensembles;

    for (std::size_t fi = 0; fi < config.frequencies.size(); ++fi) {
        const Frequency f = config.frequencies[fi];
        const std::int64_t n_s = config.scatterer_count(f);
        const double sigma = config.scatterer.avg_cross_section_m2(f);

        std::vector<SignalSample> samples(static_cast<std::size_t>(m));
        parallel_for_index(samples.size(), workers, [&](std::size_t i) {
            RngStream rng(config.seed,
                          rng_domain::stream_for(rng_domain::monte_carlo, fi, i));
            const ScattererCloud cloud = sample_cloud(config.geometry, n_s, rng);
            samples[i] = receive_voltage(cloud, sigma, config.antenna.directivity_rx, f);
        });

        const KFactorEstimate est = estimate_k(samples);
        table.rows.push_back({f.hertz(), SweepMethod::mc, est.k_linear, est.k_db, est.stderr_db,
                              n_s, config.geometry.equivalent_radius_m(), sigma, m, config.seed});
        table.rows.push_back(analytic_row(config, f));
    }

    table.sort();
    return table;
}

} // namespace scatterlab::ensemble
