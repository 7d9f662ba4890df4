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
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "scatterlab/constants.hpp"
#include "scatterlab/frequency.hpp"
#include "scatterlab/mom/wire.hpp"

namespace scatterlab::mom {

/// Uniform plane wave E(r) = pol * amplitude * exp(-j k dir . r); dir and
/// pol must be unit vectors, pol orthogonal to dir.
struct PlaneWave {
    std::array<double, 3> direction{1.0, 0.0, 0.0};
    std::array<double, 3> polarization{0.0, 0.0, 1.0};
    double amplitude = 1.0;

    std::complex<double> field_z(const std::array<double, 3> &point, double k) const {
        const double phase =
            -k * (direction[0] * point[0] + direction[1] * point[1] + direction[2] * point[2]);
        return polarization[2] * amplitude * std::complex<double>(std::cos(phase), std::sin(phase));
    }
};

/// Delta-gap voltage generator across the center of one wire.
struct GapFeed {
    std::size_t wire_index = 0;
    std::complex<double> voltage{1.0, 0.0};
};

namespace detail_excitation {

inline void check_plane_wave(const PlaneWave &pw) {
    auto norm2 = [](const std::array<double, 3> &v) {
        return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    };
    const double dot = pw.direction[0] * pw.polarization[0] +
                       pw.direction[1] * pw.polarization[1] +
                       pw.direction[2] * pw.polarization[2];
    if (std::abs(norm2(pw.direction) - 1.0) > 1e-9 || std::abs(norm2(pw.polarization) - 1.0) > 1e-9)
        throw std::invalid_argument("plane wave direction/polarization must be unit vectors");
    if (std::abs(dot) > 1e-9)
        throw std::invalid_argument("plane wave polarization must be orthogonal to direction");
}

} // namespace detail_excitation

/// Tested incident field of a plane wave: V_p = int T_p(z) E_z(r(z)) dz.
/// Along a vertical wire the transverse phase is constant and the triangle
/// transform has the closed form h sinc^2(beta h / 2) per basis function.
inline Eigen::VectorXcd excite_plane_wave(const WireMesh &mesh, const PlaneWave &pw, Frequency f) {
    detail_excitation::check_plane_wave(pw);
    const double k = f.wavenumber();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(mesh.total_basis());

    int off = 0;
    for (const Wire &w : mesh.wires) {
        const double h = w.dz();
        const double beta = k * pw.direction[2];
        double shape = h;
        if (beta != 0.0) {
            const double x = beta * h / 2.0;
            const double s = std::sin(x) / x;
            shape = h * s * s;
        }
        for (int p = 1; p <= w.n_basis(); ++p) {
            const double z_node = w.z_bottom() + p * h;
            const std::complex<double> e =
                pw.field_z({w.x, w.y, 0.0}, k) *
                std::complex<double>(std::cos(-k * pw.direction[2] * z_node),
                                     std::sin(-k * pw.direction[2] * z_node));
            v(off + p - 1) = e * shape;
        }
        off += w.n_basis();
    }
    return v;
}

/// Delta-gap excitation at the center of one wire: V_p = voltage * T_p(z_c),
/// i.e. 1/2 on the two bases straddling the center segment.
inline Eigen::VectorXcd excite_gap(const WireMesh &mesh, const GapFeed &feed) {
    if (feed.wire_index >= mesh.wires.size())
        throw std::invalid_argument("gap feed wire index out of range");
    const Wire &w = mesh.wires[feed.wire_index];
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(mesh.total_basis());
    const int off = mesh.basis_offset(feed.wire_index);
    const int center_seg = (w.n_seg - 1) / 2;
    v(off + center_seg - 1) = 0.5 * feed.voltage;
    v(off + center_seg) = 0.5 * feed.voltage;
    return v;
}

} // namespace scatterlab::mom
