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

namespace scatterlab::mom {

// Quadrature of the reduced thin-wire kernel g(R) = exp(-jkR)/R with
// R = sqrt((dz_offset + s - t)^2 + d^2) over one segment pair, producing
// the four bilinear moments
//
//   m_pq = int_0^h int_0^h (s/h)^p (t/h)^q g(R) ds dt,   p, q in {0, 1},
//
// from which every triangle basis/test combination assembles.  Separated
// pairs use a 6x6 Gauss-Legendre tensor rule; pairs whose minimum distance
// falls below ~1.5 segment lengths switch to singularity extraction:
// g = (exp(-jkR) - 1)/R + 1/R, the bounded part by Gauss quadrature and the
// 1/R part by its closed-form inner antiderivative, with a panel-composite
// outer rule to absorb the log-like kink.

struct SegmentMoments {
    std::complex<double> m00{0.0, 0.0};
    std::complex<double> m10{0.0, 0.0};
    std::complex<double> m01{0.0, 0.0};
    std::complex<double> m11{0.0, 0.0};
};

namespace detail_kernel {

// 6-point Gauss-Legendre rule on [0, 1].
inline constexpr std::array<double, 6> gauss6_x = {
    0.033765242898423986, 0.169395306766867743, 0.380690406958401546,
    0.619309593041598454, 0.830604693233132257, 0.966234757101576014,
};
inline constexpr std::array<double, 6> gauss6_w = {
    0.085662246189585173, 0.180380786524069304, 0.233956967286345524,
    0.233956967286345524, 0.180380786524069304, 0.085662246189585173,
};

inline std::complex<double> green(double dz, double d, double k) {
    const double r = std::sqrt(dz * dz + d * d);
    const double ph = -k * r;
    return {std::cos(ph) / r, std::sin(ph) / r};
}

// (exp(-jkR) - 1)/R, bounded as R -> 0 (limit -jk).
inline std::complex<double> green_smooth(double dz, double d, double k) {
    const double r = std::sqrt(dz * dz + d * d);
    const double ph = -k * r;
    if (r < 1e-300)
        return {0.0, -k};
    return {(std::cos(ph) - 1.0) / r, std::sin(ph) / r};
}

// int_0^h t^q / sqrt((z0 - t)^2 + d^2) dt for q = 0, 1 (exact).
inline void static_inner_moments(double z0, double d, double h, double &i0, double &i1) {
    const double u1 = -z0;
    const double u2 = h - z0;
    const double a1 = std::asinh(u1 / d);
    const double a2 = std::asinh(u2 / d);
    i0 = a2 - a1;
    i1 = (std::sqrt(u2 * u2 + d * d) - std::sqrt(u1 * u1 + d * d)) + z0 * i0;
}

} // namespace detail_kernel

/// Segment-pair moments, well-separated case (6x6 Gauss tensor rule).
inline SegmentMoments segment_moments_far(double offset, double d, double h, double k) {
    using namespace detail_kernel;
    SegmentMoments m;
    for (int a = 0; a < 6; ++a) {
        const double s = gauss6_x[a] * h;
        std::complex<double> row00{0.0, 0.0}, row01{0.0, 0.0};
        for (int b = 0; b < 6; ++b) {
            const double t = gauss6_x[b] * h;
            const std::complex<double> g = gauss6_w[b] * green(offset + s - t, d, k);
            row00 += g;
            row01 += (t / h) * g;
        }
        const double ws = gauss6_w[a];
        m.m00 += ws * row00;
        m.m01 += ws * row01;
        m.m10 += ws * (s / h) * row00;
        m.m11 += ws * (s / h) * row01;
    }
    const double scale = h * h;
    m.m00 *= scale;
    m.m01 *= scale;
    m.m10 *= scale;
    m.m11 *= scale;
    return m;
}

/// Segment-pair moments with the 1/R singularity extracted; valid for any
/// separation, required when the pair nearly touches (self terms, adjacent
/// segments, closely passing wires).
inline SegmentMoments segment_moments_near(double offset, double d, double h, double k) {
    using namespace detail_kernel;
    SegmentMoments m;
    constexpr int panels = 8;
    const double panel_h = h / panels;
    for (int p = 0; p < panels; ++p) {
        for (int a = 0; a < 6; ++a) {
            const double s = (p + gauss6_x[a]) * panel_h;
            const double z0 = offset + s;

            std::complex<double> inner0{0.0, 0.0}, inner1{0.0, 0.0};
            for (int b = 0; b < 6; ++b) {
                const double t = gauss6_x[b] * h;
                const std::complex<double> g = gauss6_w[b] * green_smooth(z0 - t, d, k);
                inner0 += g;
                inner1 += (t / h) * g;
            }
            inner0 *= h;
            inner1 *= h;

            double s0 = 0.0, s1 = 0.0;
            static_inner_moments(z0, d, h, s0, s1);
            inner0 += s0;
            inner1 += s1 / h;

            const double ws = gauss6_w[a] * panel_h;
            m.m00 += ws * inner0;
            m.m01 += ws * inner1;
            m.m10 += ws * (s / h) * inner0;
            m.m11 += ws * (s / h) * inner1;
        }
    }
    return m;
}

/// Dispatching entry: `offset` is the z displacement between the two
/// segment start points, `d` the lateral axis distance (wire radius for
/// same-wire terms), `h` the segment length.
inline SegmentMoments segment_moments(double offset, double d, double h, double k) {
    const double gap = std::max(0.0, std::abs(offset) - h);
    const double r_min = std::sqrt(gap * gap + d * d);
    if (r_min < 1.5 * h)
        return segment_moments_near(offset, d, h, k);
    return segment_moments_far(offset, d, h, k);
}

} // namespace scatterlab::mom
