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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "scatterlab/constants.hpp"
#include "scatterlab/frequency.hpp"
#include "scatterlab/mom/kernel.hpp"
#include "scatterlab/mom/wire.hpp"

namespace scatterlab::mom {

/// Dense Galerkin EFIE system for one mesh realization.  The impedance
/// matrix is reciprocity-symmetric; lumped loads enter as rank-one additions
/// at wire centers.
struct MomSystem {
    Eigen::MatrixXcd impedance;  // Z, N x N
    Eigen::VectorXcd excitation; // V, N
    Frequency frequency;
};

namespace detail_assembly {

// Z_pq between triangle p (test, wire m) and q (source, wire n):
//
//   Z_pq = (j eta / 4 pi k) sum_{i,j} [ k^2 A_ij - sgn_i sgn_j m00(ij)/h^2 ],
//
// i in {p-1, p}, j in {q-1, q} the segments each triangle covers, A_ij the
// bilinear moment combination of the linear shape functions (ascending on
// the lower segment, descending on the upper), sgn the constant derivative
// signs.  All moments for a wire pair depend on the segment index offset
// only, so one table of 2 n_seg - 1 entries serves the whole block.
struct BlockTable {
    std::vector<SegmentMoments> by_offset; // index delta + (n_seg - 1)
    int n_seg;

    const SegmentMoments &at(int delta) const { return by_offset[delta + n_seg - 1]; }
};

inline BlockTable build_table(const Wire &test, const Wire &source, double k) {
    const double h = test.dz();
    const double dx = test.x - source.x;
    const double dy = test.y - source.y;
    const bool same_axis = (dx == 0.0 && dy == 0.0);
    const double d = same_axis ? source.radius : std::sqrt(dx * dx + dy * dy);
    const double base = test.z_bottom() - source.z_bottom();

    BlockTable table;
    table.n_seg = test.n_seg;
    table.by_offset.resize(2 * test.n_seg - 1);
    for (int delta = -(test.n_seg - 1); delta <= test.n_seg - 1; ++delta)
        table.by_offset[delta + test.n_seg - 1] = segment_moments(base + delta * h, d, h, k);
    return table;
}

inline void fill_block(Eigen::MatrixXcd &z, int row0, int col0, const BlockTable &table,
                       double h, double k, double eta) {
    const std::complex<double> front(0.0, eta / (4.0 * pi * k));
    const double k2 = k * k;
    const double inv_h2 = 1.0 / (h * h);
    const int nb = table.n_seg - 1;
    for (int p = 1; p <= nb; ++p) {
        for (int q = 1; q <= nb; ++q) {
            std::complex<double> acc{0.0, 0.0};
            for (int ii = 0; ii < 2; ++ii) {
                const int i = p - 1 + ii;       // segment covered by test triangle
                const double sgn_i = ii == 0 ? 1.0 : -1.0;
                const bool asc_i = ii == 0;     // ascending shape on the lower segment
                for (int jj = 0; jj < 2; ++jj) {
                    const int j = q - 1 + jj;
                    const double sgn_j = jj == 0 ? 1.0 : -1.0;
                    const bool asc_j = jj == 0;
                    const SegmentMoments &m = table.at(i - j);
                    std::complex<double> a;
                    if (asc_i && asc_j)
                        a = m.m11;
                    else if (asc_i && !asc_j)
                        a = m.m10 - m.m11;
                    else if (!asc_i && asc_j)
                        a = m.m01 - m.m11;
                    else
                        a = m.m00 - m.m10 - m.m01 + m.m11;
                    acc += k2 * a - sgn_i * sgn_j * inv_h2 * m.m00;
                }
            }
            z(row0 + p - 1, col0 + q - 1) = front * acc;
        }
    }
}

} // namespace detail_assembly

/// Assembles the dense Galerkin impedance matrix for a mesh at frequency f.
/// Every ordered wire pair is integrated independently (no mirroring), so
/// the reciprocity symmetry of the result is a genuine numerical check.
/// Identical wires share one cached self-block.
inline Eigen::MatrixXcd assemble(const WireMesh &mesh, Frequency f) {
    const double k = f.wavenumber();
    const int n = mesh.total_basis();
    Eigen::MatrixXcd z(n, n);

    // Self-interaction block is position-independent; reuse it for every
    // wire with the same discretization.
    std::vector<int> offsets(mesh.wires.size());
    for (std::size_t w = 0; w < mesh.wires.size(); ++w)
        offsets[w] = mesh.basis_offset(w);

    Eigen::MatrixXcd self_block;
    int self_nseg = -1;
    double self_len = 0.0, self_rad = 0.0;

    for (std::size_t wm = 0; wm < mesh.wires.size(); ++wm) {
        const Wire &test = mesh.wires[wm];
        for (std::size_t wn = 0; wn < mesh.wires.size(); ++wn) {
            const Wire &source = mesh.wires[wn];
            if (wm == wn) {
                const bool reusable = test.n_seg == self_nseg && test.length == self_len &&
                                      test.radius == self_rad;
                if (!reusable) {
                    const auto table = detail_assembly::build_table(test, test, k);
                    self_block.resize(test.n_basis(), test.n_basis());
                    detail_assembly::fill_block(self_block, 0, 0, table, test.dz(), k, eta0);
                    self_nseg = test.n_seg;
                    self_len = test.length;
                    self_rad = test.radius;
                }
                z.block(offsets[wm], offsets[wn], test.n_basis(), test.n_basis()) = self_block;
                continue;
            }
            const auto table = detail_assembly::build_table(test, source, k);
            detail_assembly::fill_block(z, offsets[wm], offsets[wn], table, test.dz(), k, eta0);
        }
    }
    return z;
}

/// Variant of assemble() with all wire-to-wire coupling blocks zeroed;
/// solving it superposes isolated single-wire responses, which quantifies
/// the single-scattering approximation.
inline Eigen::MatrixXcd assemble_uncoupled(const WireMesh &mesh, Frequency f) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(mesh.total_basis(), mesh.total_basis());
    const double k = f.wavenumber();
    Eigen::MatrixXcd self_block;
    int done = 0;
    for (std::size_t wm = 0; wm < mesh.wires.size(); ++wm) {
        const Wire &w = mesh.wires[wm];
        if (wm == 0) {
            const auto table = detail_assembly::build_table(w, w, k);
            self_block.resize(w.n_basis(), w.n_basis());
            detail_assembly::fill_block(self_block, 0, 0, table, w.dz(), k, eta0);
        }
        z.block(done, done, w.n_basis(), w.n_basis()) = self_block;
        done += w.n_basis();
    }
    return z;
}

/// Adds a lumped impedance at the center of one wire.  With triangle
/// bases the two center-straddling functions take value 1/2 there, so the
/// load contributes Z_L T_p(z_c) T_q(z_c) over that 2x2 block.
inline void add_center_load(Eigen::MatrixXcd &z, const WireMesh &mesh, std::size_t wire_index,
                            std::complex<double> load_ohms) {
    const Wire &w = mesh.wires[wire_index];
    const int off = mesh.basis_offset(wire_index);
    const int center_seg = (w.n_seg - 1) / 2; // 0-based middle segment
    const int p_left = off + center_seg - 1;  // triangle peaking at the segment's lower node
    const int p_right = off + center_seg;
    z(p_left, p_left) += 0.25 * load_ohms;
    z(p_left, p_right) += 0.25 * load_ohms;
    z(p_right, p_left) += 0.25 * load_ohms;
    z(p_right, p_right) += 0.25 * load_ohms;
}

} // namespace scatterlab::mom
