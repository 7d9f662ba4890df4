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

#include <numbers>
#include <stdexcept>
#include <string>

namespace scatterlab {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Speed of light in vacuum [m/s], exact by SI definition.
inline constexpr double c0 = 299792458.0;

// Free-space permeability and wave impedance (conventional 4*pi*1e-7 value).
inline constexpr double mu0 = 4.0e-7 * std::numbers::pi;
inline constexpr double eta0 = mu0 * c0;

namespace detail {

inline void require(bool cond, const std::string &msg) {
    if (!cond)
        throw std::invalid_argument(msg);
}

inline void require_positive(double v, const char *name) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string(name) + " must be positive");
}

} // namespace detail

} // namespace scatterlab
