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
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace scatterlab {

enum class SweepMethod {
    analytic_fixed_count,
    analytic_fixed_density,
    analytic_lower_bound,
    mc,
    mom,
};

inline const char *method_name(SweepMethod m) {
    switch (m) {
    case SweepMethod::analytic_fixed_count: return "analytic_fixed_count";
    case SweepMethod::analytic_fixed_density: return "analytic_fixed_density";
    case SweepMethod::analytic_lower_bound: return "analytic_lower_bound";
    case SweepMethod::mc: return "mc";
    case SweepMethod::mom: return "mom";
    }
    return "?";
}

struct SweepRow {
    double frequency_hz;
    SweepMethod method;
    double k_linear;
    double k_db;
    double stderr_db;
    std::int64_t n_s;
    double r_s_m;
    double sigma_avg_m2;
    std::int64_t ensembles; // 0 for closed-form rows
    std::uint64_t seed;

    bool operator==(const SweepRow &) const = default;
};

/// Per-frequency sweep results, one row per (method, frequency).
struct SweepTable {
    std::vector<SweepRow> rows;

    void sort() {
        std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
            if (a.method != b.method)
                return static_cast<int>(a.method) < static_cast<int>(b.method);
            return a.frequency_hz < b.frequency_hz;
        });
    }

    bool operator==(const SweepTable &) const = default;
};

namespace detail {

inline std::string format_numeric(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace detail

/// CSV emission: '#'-prefixed key=value header block, fixed column set,
/// LF line endings, '.' decimal separator, +/-inf spelled "inf"/"-inf".
inline std::string
to_csv(const SweepTable &table,
       const std::vector<std::pair<std::string, std::string>> &header = {}) {
    std::string out;
    for (const auto &[key, value] : header)
        out += "# " + key + "=" + value + "\n";
    out += "frequency_hz,method,k_linear,k_db,stderr_db,n_s,r_s_m,sigma_avg_m2,ensembles,seed\n";
    for (const SweepRow &r : table.rows) {
        out += detail::format_numeric(r.frequency_hz);
        out += ',';
        out += method_name(r.method);
        out += ',';
        out += detail::format_numeric(r.k_linear);
        out += ',';
        out += detail::format_numeric(r.k_db);
        out += ',';
        out += detail::format_numeric(r.stderr_db);
        out += ',';
        out += std::to_string(r.n_s);
        out += ',';
        out += detail::format_numeric(r.r_s_m);
        out += ',';
        out += detail::format_numeric(r.sigma_avg_m2);
        out += ',';
        out += std::to_string(r.ensembles);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

} // namespace scatterlab
