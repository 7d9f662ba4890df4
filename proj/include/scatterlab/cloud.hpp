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

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scatterlab/config.hpp"
#include "scatterlab/constants.hpp"
#include "scatterlab/rng.hpp"

namespace scatterlab {

/// One realization of scatterer positions (spherical coordinates around the
/// receiver, polar axis = region +z) and polarization mismatch angles.
/// The single-scattering voltage model takes the transmit direction along
/// +z, so cos(theta) enters its phase term directly.  redraws counts
/// degenerate positions that were re-sampled to keep 1/rho bounded.
struct ScattererCloud {
    std::vector<double> rho;   // [m], distance from receiver
    std::vector<double> theta; // [rad], polar angle from the Tx axis
    std::vector<double> phi;   // [rad]
    std::vector<double> psi;   // [rad], polarization mismatch angle
    std::int64_t redraws = 0;

    std::size_t size() const { return rho.size(); }

    std::array<double, 3> cartesian(std::size_t i) const {
        const double st = std::sin(theta[i]);
        return {rho[i] * st * std::cos(phi[i]), rho[i] * st * std::sin(phi[i]),
                rho[i] * std::cos(theta[i])};
    }
};

/// Draws one cloud of `count` scatterers.
///
/// Sphere: inverse-CDF sampling of p(rho) = 3 rho^2 / R^3 and
/// p(theta) = sin(theta)/2, i.e. rho = R u^(1/3), theta = acos(1 - 2u);
/// phi and psi uniform on [0, 2 pi).  Cube: positions uniform in the cube,
/// converted to the same spherical convention.  Positions closer to the
/// receiver than 1e-6 of the region radius are redrawn.
inline ScattererCloud sample_cloud(const GeometrySpec &geometry, std::int64_t count,
                                   RngStream &rng) {
    ScattererCloud cloud;
    cloud.rho.reserve(count);
    cloud.theta.reserve(count);
    cloud.phi.reserve(count);
    cloud.psi.reserve(count);

    if (geometry.region == RegionKind::sphere) {
        const double r_s = geometry.radius_m;
        const double rho_min = 1e-6 * r_s;
        for (std::int64_t n = 0; n < count; ++n) {
            double rho = r_s * std::cbrt(rng.next_unit());
            while (rho < rho_min) {
                rho = r_s * std::cbrt(rng.next_unit());
                ++cloud.redraws;
            }
            cloud.rho.push_back(rho);
            cloud.theta.push_back(std::acos(1.0 - 2.0 * rng.next_unit()));
            cloud.phi.push_back(rng.next_uniform(0.0, two_pi));
            cloud.psi.push_back(rng.next_uniform(0.0, two_pi));
        }
    } else {
        const double half = 0.5 * geometry.side_m;
        const double rho_min = 1e-6 * half;
        for (std::int64_t n = 0; n < count; ++n) {
            double x, y, z, rho;
            do {
                x = rng.next_uniform(-half, half);
                y = rng.next_uniform(-half, half);
                z = rng.next_uniform(-half, half);
                rho = std::sqrt(x * x + y * y + z * z);
                if (rho < rho_min)
                    ++cloud.redraws;
            } while (rho < rho_min);
            cloud.rho.push_back(rho);
            cloud.theta.push_back(std::acos(z / rho));
            const double az = std::atan2(y, x);
            cloud.phi.push_back(az < 0.0 ? az + two_pi : az);
            cloud.psi.push_back(rng.next_uniform(0.0, two_pi));
        }
    }
    return cloud;
}

} // namespace scatterlab
