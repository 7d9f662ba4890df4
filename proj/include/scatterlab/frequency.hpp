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

#include <compare>

#include "scatterlab/constants.hpp"

namespace scatterlab {

/// Carrier frequency, strictly positive.  All unit conversions to
/// wavelength and wavenumber go through here.
class Frequency {
public:
    explicit Frequency(double hertz) : hz_(hertz) {
        detail::require_positive(hertz, "frequency [Hz]");
    }

    static Frequency from_ghz(double ghz) { return Frequency(ghz * 1e9); }

    double hertz() const { return hz_; }
    double ghz() const { return hz_ * 1e-9; }
    double wavelength_m() const { return c0 / hz_; }
    double wavenumber() const { return two_pi * hz_ / c0; }

    auto operator<=>(const Frequency &) const = default;

private:
    double hz_;
};

} // namespace scatterlab
