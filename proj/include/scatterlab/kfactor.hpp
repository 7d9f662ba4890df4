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
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "scatterlab/constants.hpp"

namespace scatterlab {

/// Moment estimate of the Rician K-factor from complex signal samples.
/// `deterministic` marks inputs whose sample variance underflowed machine
/// epsilon times the mean power; k_linear/k_db carry the +inf sentinel then.
struct KFactorEstimate {
    double k_linear;
    double k_db;
    double total_power; // P_r = <|v|^2>
    double stderr_db;
    std::int64_t samples;
    bool deterministic;

    static KFactorEstimate make(double k_linear, double total_power, double stderr_db,
                                std::int64_t samples, bool deterministic) {
        return {k_linear, 10.0 * std::log10(k_linear), total_power, stderr_db, samples,
                deterministic};
    }
};

namespace detail {

/// Neumaier compensated accumulator; keeps sums reproducible to a few ulp
/// independent of sample count.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

struct MomentSums {
    KahanSum re, im, p;
    std::int64_t n = 0;

    void add(std::complex<double> v) {
        re.add(v.real());
        im.add(v.imag());
        p.add(std::norm(v));
        ++n;
    }

    double mean_power() const { return p.value() / static_cast<double>(n); }

    double k_hat(bool *deterministic = nullptr) const {
        const double nn = static_cast<double>(n);
        const double mr = re.value() / nn;
        const double mi = im.value() / nn;
        const double num = mr * mr + mi * mi;
        const double pr = mean_power();
        const double den = pr - num;
        const double floor_den = std::numeric_limits<double>::epsilon() * pr;
        if (den <= floor_den) {
            if (deterministic)
                *deterministic = true;
            return std::numeric_limits<double>::infinity();
        }
        if (deterministic)
            *deterministic = false;
        return num / den;
    }
};

} // namespace detail

/// K = |<v>|^2 / (<|v|^2> - |<v>|^2) with a delete-one-batch jackknife
/// standard error on K in dB.  Requires at least two samples.
inline KFactorEstimate estimate_k(std::span<const std::complex<double>> samples,
                                  int requested_batches = 20) {
    detail::require(samples.size() >= 2, "estimate_k needs at least 2 samples");

    detail::MomentSums total;
    for (const auto &v : samples)
        total.add(v);

    bool deterministic = false;
    const double k_hat = total.k_hat(&deterministic);
    const double p_hat = total.mean_power();
    const auto n = static_cast<std::int64_t>(samples.size());

    if (deterministic)
        return KFactorEstimate::make(std::numeric_limits<double>::infinity(), p_hat, 0.0, n, true);

    // Jackknife over contiguous batches, dB domain.
    const int batches = std::clamp<int>(requested_batches, 2, static_cast<int>(samples.size() / 2));
    std::vector<double> theta(batches);
    double theta_mean = 0.0;
    std::size_t begin = 0;
    for (int b = 0; b < batches; ++b) {
        const std::size_t end =
            samples.size() * static_cast<std::size_t>(b + 1) / static_cast<std::size_t>(batches);
        detail::MomentSums rest;
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (i < begin || i >= end)
                rest.add(samples[i]);
        bool batch_det = false;
        const double kb = rest.k_hat(&batch_det);
        const double kb_safe = batch_det ? std::numeric_limits<double>::max()
                                         : std::max(kb, std::numeric_limits<double>::min());
        theta[b] = 10.0 * std::log10(kb_safe);
        theta_mean += theta[b];
        begin = end;
    }
    theta_mean /= batches;
    double var = 0.0;
    for (double t : theta)
        var += (t - theta_mean) * (t - theta_mean);
    const double stderr_db = std::sqrt(var * (batches - 1) / static_cast<double>(batches));

    return KFactorEstimate::make(k_hat, p_hat, stderr_db, n, false);
}

} // namespace scatterlab
