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
#include <stdexcept>
#include <utility>
#include <vector>

#include "scatterlab/cloud.hpp"
#include "scatterlab/config.hpp"
#include "scatterlab/constants.hpp"
#include "scatterlab/frequency.hpp"
#include "scatterlab/rng.hpp"

namespace scatterlab::mom {

// Default discretization: 21 segments per half-wave of wire, and the strip
// width of lambda/100 mapped to the equivalent wire radius w/4 = lambda/400.
inline constexpr int segments_per_half_wave = 21;
inline constexpr double strip_width_over_lambda = 0.01;

/// One straight vertical (z-directed) thin wire.  Current expanded in
/// triangle functions over n_seg uniform segments, vanishing at both ends;
/// n_seg odd keeps the wire center inside a segment so loads and feeds can
/// sit exactly at the center.
struct Wire {
    double x = 0.0;
    double y = 0.0;
    double z_center = 0.0;
    double length = 0.0;
    double radius = 0.0;
    int n_seg = segments_per_half_wave;

    double z_bottom() const { return z_center - 0.5 * length; }
    double z_top() const { return z_center + 0.5 * length; }
    double dz() const { return length / n_seg; }
    int n_basis() const { return n_seg - 1; }
};

/// Segmented geometry of one ensemble realization plus bookkeeping of
/// rejected draws.  tx_wire_index >= 0 marks a driven transmit wire that is
/// part of the mesh but not of the scatterer population.
struct WireMesh {
    std::vector<Wire> wires;
    std::int64_t redraws = 0;
    int tx_wire_index = -1;

    int total_basis() const {
        int n = 0;
        for (const Wire &w : wires)
            n += w.n_basis();
        return n;
    }

    int basis_offset(std::size_t wire_index) const {
        int n = 0;
        for (std::size_t i = 0; i < wire_index; ++i)
            n += wires[i].n_basis();
        return n;
    }

    bool is_tx(std::size_t wire_index) const {
        return static_cast<int>(wire_index) == tx_wire_index;
    }
};

namespace detail_mesh {

// Wires are parallel and vertical: they clash only if the axes come closer
// than 2a laterally while the z extents overlap.  The same test guards the
// receiver probe point at the origin.
inline bool wire_conflict(const Wire &a, const Wire &b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double lateral = std::sqrt(dx * dx + dy * dy);
    if (lateral >= a.radius + b.radius)
        return false;
    return a.z_bottom() <= b.z_top() && b.z_bottom() <= a.z_top();
}

inline bool touches_origin(const Wire &w, double clearance) {
    const double lateral = std::sqrt(w.x * w.x + w.y * w.y);
    if (lateral >= clearance)
        return false;
    return w.z_bottom() - clearance <= 0.0 && 0.0 <= w.z_top() + clearance;
}

inline Wire draw_wire(const GeometrySpec &geometry, double length, double radius, int n_seg,
                      RngStream &rng) {
    Wire w;
    w.length = length;
    w.radius = radius;
    w.n_seg = n_seg;
    if (geometry.region == RegionKind::cube) {
        // Keep the whole wire inside: shrink the z-range by half a length.
        const double half = 0.5 * geometry.side_m;
        w.x = rng.next_uniform(-half, half);
        w.y = rng.next_uniform(-half, half);
        w.z_center = rng.next_uniform(-(half - 0.5 * length), half - 0.5 * length);
    } else {
        const double r_s = geometry.radius_m;
        const double rho = r_s * std::cbrt(rng.next_unit());
        const double ct = 1.0 - 2.0 * rng.next_unit();
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const double phi = rng.next_uniform(0.0, two_pi);
        w.x = rho * st * std::cos(phi);
        w.y = rho * st * std::sin(phi);
        w.z_center = rho * ct;
    }
    return w;
}

} // namespace detail_mesh

/// Resonant wire length for the configured scatterer at frequency f
/// (exact multiple of lambda/2), with the matching odd segment count.
inline std::pair<double, int> wire_discretization(const ScattererSpec &scatterer, Frequency f) {
    if (scatterer.kind == ScattererKind::fixed_cross_section)
        throw std::invalid_argument("fixed_cross_section scatterers have no wire model");
    const double l_over_lambda = scatterer.l_over_lambda();
    const double n_half_waves = 2.0 * l_over_lambda;
    const auto half_waves = static_cast<int>(std::llround(n_half_waves));
    if (std::abs(n_half_waves - half_waves) > 1e-9 || half_waves < 1 || half_waves % 2 == 0)
        throw std::invalid_argument(
            "wire scatterers require resonant lengths L = n lambda/2 with odd n");
    const double length = l_over_lambda * f.wavelength_m();
    return {length, half_waves * segments_per_half_wave};
}

/// Builds the wire mesh of one realization from a sampled cloud: one
/// vertical resonant wire per scatterer.  Wires that overlap an earlier
/// wire or the receiver probe at the origin are redrawn from the same
/// stream (counted in redraws).
inline WireMesh mesh_ensemble(const ScattererCloud &cloud, const ScenarioConfig &config,
                              Frequency f, RngStream &rng) {
    const auto [length, n_seg] = wire_discretization(config.scatterer, f);
    const double radius = strip_width_over_lambda * f.wavelength_m() / 4.0;

    WireMesh mesh;
    mesh.wires.reserve(cloud.size());
    for (std::size_t n = 0; n < cloud.size(); ++n) {
        const auto pos = cloud.cartesian(n);
        Wire w;
        w.x = pos[0];
        w.y = pos[1];
        w.z_center = pos[2];
        w.length = length;
        w.radius = radius;
        w.n_seg = n_seg;
        if (config.geometry.region == RegionKind::cube) {
            // Clamp into the shrunk z-range used by direct mesh draws.
            const double zmax = 0.5 * config.geometry.side_m - 0.5 * length;
            w.z_center = std::clamp(w.z_center, -zmax, zmax);
        }

        bool ok = false;
        while (!ok) {
            ok = !detail_mesh::touches_origin(w, 2.0 * radius);
            for (std::size_t j = 0; ok && j < mesh.wires.size(); ++j)
                ok = !detail_mesh::wire_conflict(mesh.wires[j], w);
            if (!ok) {
                w = detail_mesh::draw_wire(config.geometry, length, radius, n_seg, rng);
                ++mesh.redraws;
            }
        }
        mesh.wires.push_back(w);
    }
    return mesh;
}

} // namespace scatterlab::mom
