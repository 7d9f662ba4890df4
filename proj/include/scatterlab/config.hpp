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
#include <optional>
#include <string>
#include <vector>

#include "scatterlab/analytic.hpp"
#include "scatterlab/constants.hpp"
#include "scatterlab/frequency.hpp"

namespace scatterlab {

/// Station antenna description.  Directivity/gain are linear, the receive
/// gain follows from G_or = e_r * D_or.  In normalized-power mode the
/// line-of-sight link budget is pinned to P_LOS = 1 and no Tx-Rx range is
/// needed (the K-factor is range-independent); otherwise range_m must be set.
struct AntennaSpec {
    double directivity_rx = 1.0;      // D_or
    double gain_tx = 1.0;             // G_ot
    double radiation_efficiency = 1.0; // e_r in (0, 1]
    double tx_power_w = 1.0;          // P_t
    bool normalized_power = true;
    std::optional<double> range_m;    // r_o, required when !normalized_power

    double gain_rx() const { return radiation_efficiency * directivity_rx; }

    void check() const {
        detail::require_positive(directivity_rx, "directivity_rx");
        detail::require_positive(gain_tx, "gain_tx");
        detail::require_positive(radiation_efficiency, "radiation_efficiency");
        detail::require(radiation_efficiency <= 1.0, "radiation_efficiency must be <= 1");
        detail::require_positive(tx_power_w, "tx_power_w");
        if (!normalized_power)
            detail::require(range_m.has_value() && *range_m > 0.0,
                            "range_m must be set and positive when normalized_power is off");
    }

    bool operator==(const AntennaSpec &) const = default;
};

enum class ScattererKind { resonant_half_wave, dipole, fixed_cross_section };

/// What kind of object scatters, and how a loaded dipole is terminated in
/// the full-wave solver.  Cross-sections: wire dipoles use the averaged
/// closed form (scaled by lambda^2 at each frequency), fixed_cross_section
/// is frequency-flat.
struct ScattererSpec {
    ScattererKind kind = ScattererKind::resonant_half_wave;
    double length_over_lambda = 0.5; // dipole kind only
    double sigma_m2 = 0.0;           // fixed_cross_section kind only
    bool matched_load = false;       // MoM: terminate in conj(Z_in) per frequency
    std::optional<std::complex<double>> load_ohms; // MoM: explicit lumped load

    double l_over_lambda() const {
        return kind == ScattererKind::resonant_half_wave ? 0.5 : length_over_lambda;
    }

    double avg_cross_section_m2(Frequency f) const {
        if (kind == ScattererKind::fixed_cross_section)
            return sigma_m2;
        const double lambda = f.wavelength_m();
        return analytic::avg_dipole_xsec(l_over_lambda()) * lambda * lambda;
    }

    void check() const {
        switch (kind) {
        case ScattererKind::resonant_half_wave:
            break;
        case ScattererKind::dipole:
            detail::require_positive(length_over_lambda, "length_over_lambda");
            detail::require(22.368 * length_over_lambda > 1.0,
                            "length_over_lambda too small for the cross-section formula");
            break;
        case ScattererKind::fixed_cross_section:
            detail::require_positive(sigma_m2, "sigma_m2");
            break;
        }
        detail::require(!(matched_load && load_ohms.has_value()),
                        "matched_load and an explicit load are mutually exclusive");
    }

    bool operator==(const ScattererSpec &) const = default;
};

enum class RegionKind { sphere, cube };
enum class TxPlacement { far_field_plane_wave, in_volume_dipole };

/// Scattering region with the receiver fixed at its center.  Analytic
/// formulas are defined on the sphere; a cube is mapped to the companion
/// sphere of radius side/2 when analytic rows are emitted next to sampled
/// ones.
struct GeometrySpec {
    RegionKind region = RegionKind::sphere;
    double radius_m = 0.0; // sphere
    double side_m = 0.0;   // cube
    TxPlacement tx = TxPlacement::far_field_plane_wave;
    double tx_distance_m = 0.0; // in_volume_dipole only

    double equivalent_radius_m() const {
        return region == RegionKind::sphere ? radius_m : 0.5 * side_m;
    }

    double bounding_radius_m() const {
        return region == RegionKind::sphere ? radius_m
                                            : 0.5 * side_m * std::sqrt(3.0);
    }

    double volume_m3() const {
        if (region == RegionKind::sphere)
            return 4.0 / 3.0 * pi * radius_m * radius_m * radius_m;
        return side_m * side_m * side_m;
    }

    void check() const {
        if (region == RegionKind::sphere)
            detail::require_positive(radius_m, "radius_m");
        else
            detail::require_positive(side_m, "side_m");
        if (tx == TxPlacement::in_volume_dipole) {
            detail::require_positive(tx_distance_m, "tx_distance_m");
            detail::require(tx_distance_m < bounding_radius_m(),
                            "tx_distance_m must lie inside the bounding radius");
        }
    }

    bool operator==(const GeometrySpec &) const = default;
};

enum class PopulationKind { fixed_count, fixed_density, max_packed };

/// How many scatterers occupy the region: a fixed count, a fixed density,
/// or the maximum far-field packing (random close packing of exclusion
/// spheres of diameter R_FF).  antenna_gain is the gain entering the
/// far-field distance of one scatterer; the default is the half-wave
/// dipole value.
struct Population {
    PopulationKind kind = PopulationKind::fixed_count;
    std::int64_t count = 1;  // fixed_count
    double per_m3 = 0.0;     // fixed_density
    double gamma_a = 0.9;    // max_packed
    double eta_pack = 0.64;  // max_packed
    double alpha_e = 0.06;   // max_packed
    double antenna_gain = 1.64; // max_packed, G_o of one scatterer

    void check() const {
        switch (kind) {
        case PopulationKind::fixed_count:
            detail::require(count >= 1, "population count must be >= 1");
            break;
        case PopulationKind::fixed_density:
            detail::require_positive(per_m3, "population density");
            break;
        case PopulationKind::max_packed:
            detail::require(gamma_a > 0.0 && gamma_a < 1.0, "gamma_a must lie in (0, 1)");
            detail::require_positive(eta_pack, "eta_pack");
            detail::require_positive(alpha_e, "alpha_e");
            detail::require_positive(antenna_gain, "antenna_gain");
            break;
        }
    }

    bool operator==(const Population &) const = default;
};

/// Complete description of one propagation scenario.
struct ScenarioConfig {
    GeometrySpec geometry;
    AntennaSpec antenna;
    ScattererSpec scatterer;
    Population population;
    std::vector<Frequency> frequencies;
    std::int64_t ensembles = 1; // M
    std::uint64_t seed = 42;

    void check() const {
        geometry.check();
        antenna.check();
        scatterer.check();
        population.check();
        detail::require(!frequencies.empty(), "at least one frequency is required");
        for (std::size_t i = 1; i < frequencies.size(); ++i)
            detail::require(frequencies[i - 1] < frequencies[i],
                            "frequencies must be strictly increasing");
        detail::require(ensembles >= 1, "ensembles must be >= 1");
    }

    /// Far-field distance of one scatterer at f (max_packed population).
    double scatterer_far_field_distance_m(Frequency f) const {
        return analytic::far_field_distance(f.wavelength_m(), population.antenna_gain,
                                            population.gamma_a, population.alpha_e);
    }

    /// Number of scatterers realized at frequency f.
    std::int64_t scatterer_count(Frequency f) const {
        switch (population.kind) {
        case PopulationKind::fixed_count:
            return population.count;
        case PopulationKind::fixed_density:
            return std::max<std::int64_t>(
                1, static_cast<std::int64_t>(std::llround(population.per_m3 * geometry.volume_m3())));
        case PopulationKind::max_packed: {
            const auto packed = analytic::max_packed_count(
                geometry.equivalent_radius_m(), scatterer_far_field_distance_m(f),
                population.eta_pack);
            return packed.count;
        }
        }
        return 0;
    }

    /// Implied scatterer density at frequency f [1/m^3].
    double scatterer_density(Frequency f) const {
        if (population.kind == PopulationKind::fixed_density)
            return population.per_m3;
        return static_cast<double>(scatterer_count(f)) / geometry.volume_m3();
    }

    bool operator==(const ScenarioConfig &) const = default;
};

/// Soft validation outcome: violations make a scenario unusable for the
/// model, warnings flag questionable but runnable settings.
struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

/// Checks the modeling assumptions that config invariants alone cannot
/// enforce: electrically large scattering volume, feasible far-field
/// packing, and full-wave solver applicability.
inline ValidationReport validate(const ScenarioConfig &config) {
    config.check();
    ValidationReport report;
    const double r_eq = config.geometry.equivalent_radius_m();

    for (const Frequency &f : config.frequencies) {
        const double threshold = 10.0 * f.wavelength_m() / two_pi;
        if (r_eq < threshold) {
            report.violations.push_back(
                "scattering radius " + std::to_string(r_eq) + " m is not large against lambda/2pi at " +
                std::to_string(f.ghz()) + " GHz (need >= " + std::to_string(threshold) + " m)");
        }
        if (config.population.kind == PopulationKind::max_packed) {
            const auto packed = analytic::max_packed_count(
                r_eq, config.scatterer_far_field_distance_m(f), config.population.eta_pack);
            if (packed.below_one())
                report.violations.push_back(
                    "far-field packing yields no scatterer at " + std::to_string(f.ghz()) + " GHz");
        }
    }

    if (config.scatterer.kind == ScattererKind::dipole) {
        const double l = config.scatterer.length_over_lambda;
        const double n = 2.0 * l; // odd integer on the canonical grid
        if (l < 0.5 || l > 4.5 || std::abs(n - std::round(n)) > 1e-9 ||
            (static_cast<std::int64_t>(std::llround(n)) % 2) == 0)
            report.warnings.push_back(
                "length_over_lambda outside the tabulated resonant grid {0.5, 1.5, 2.5, 3.5, 4.5}; "
                "cross-section formula extrapolated");
    }

    for (const Frequency &f : config.frequencies) {
        if (config.scatterer_count(f) > 200) {
            report.warnings.push_back(
                "scatterer count above 200: full-wave sweeps become slow (dense direct solve)");
            break;
        }
    }
    if (config.scatterer.kind == ScattererKind::fixed_cross_section)
        report.warnings.push_back(
            "fixed_cross_section scatterers have no wire model; full-wave sweeps reject them");

    return report;
}

} // namespace scatterlab
