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
#include <cstdint>
#include <set>
#include <string>

#include <json.hpp>

#include "scatterlab/config.hpp"

namespace scatterlab {

namespace detail {

inline void reject_unknown_keys(const nlohmann::json &obj, const std::set<std::string> &allowed,
                                const std::string &where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.contains(it.key()))
            throw std::invalid_argument("unknown key \"" + it.key() + "\" in " + where);
}

} // namespace detail

/// Parses a scenario from JSON text.  Unknown keys are rejected at every
/// level; invariant breaches throw std::invalid_argument.
inline ScenarioConfig parse_scenario(const std::string &text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("scenario must be a JSON object");
    detail::reject_unknown_keys(
        j, {"geometry", "antenna", "scatterer", "population", "frequencies_hz", "ensembles", "seed"},
        "scenario");

    ScenarioConfig config;

    const json &g = j.at("geometry");
    detail::reject_unknown_keys(g, {"region", "radius_m", "side_m", "tx", "tx_distance_m"},
                                "geometry");
    const std::string region = g.at("region").get<std::string>();
    if (region == "sphere") {
        config.geometry.region = RegionKind::sphere;
        config.geometry.radius_m = g.at("radius_m").get<double>();
    } else if (region == "cube") {
        config.geometry.region = RegionKind::cube;
        config.geometry.side_m = g.at("side_m").get<double>();
    } else {
        throw std::invalid_argument("geometry.region must be \"sphere\" or \"cube\"");
    }
    const std::string tx = g.value("tx", std::string("plane_wave"));
    if (tx == "plane_wave") {
        config.geometry.tx = TxPlacement::far_field_plane_wave;
    } else if (tx == "in_volume") {
        config.geometry.tx = TxPlacement::in_volume_dipole;
        config.geometry.tx_distance_m = g.at("tx_distance_m").get<double>();
    } else {
        throw std::invalid_argument("geometry.tx must be \"plane_wave\" or \"in_volume\"");
    }

    if (j.contains("antenna")) {
        const json &a = j.at("antenna");
        detail::reject_unknown_keys(a,
                                    {"directivity_rx", "gain_tx", "radiation_efficiency",
                                     "tx_power_w", "normalized_power", "range_m"},
                                    "antenna");
        config.antenna.directivity_rx = a.value("directivity_rx", 1.0);
        config.antenna.gain_tx = a.value("gain_tx", 1.0);
        config.antenna.radiation_efficiency = a.value("radiation_efficiency", 1.0);
        config.antenna.tx_power_w = a.value("tx_power_w", 1.0);
        config.antenna.normalized_power = a.value("normalized_power", true);
        if (a.contains("range_m"))
            config.antenna.range_m = a.at("range_m").get<double>();
    }

    const json &s = j.at("scatterer");
    detail::reject_unknown_keys(s, {"kind", "length_over_lambda", "sigma_m2", "load"}, "scatterer");
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "resonant_half_wave") {
        config.scatterer.kind = ScattererKind::resonant_half_wave;
        config.scatterer.length_over_lambda = 0.5;
    } else if (kind == "dipole") {
        config.scatterer.kind = ScattererKind::dipole;
        config.scatterer.length_over_lambda = s.at("length_over_lambda").get<double>();
    } else if (kind == "fixed_cross_section") {
        config.scatterer.kind = ScattererKind::fixed_cross_section;
        config.scatterer.sigma_m2 = s.at("sigma_m2").get<double>();
    } else {
        throw std::invalid_argument(
            "scatterer.kind must be \"resonant_half_wave\", \"dipole\" or \"fixed_cross_section\"");
    }
    if (s.contains("load")) {
        const json &load = s.at("load");
        if (load.is_string() && load.get<std::string>() == "matched") {
            config.scatterer.matched_load = true;
        } else if (load.is_object()) {
            detail::reject_unknown_keys(load, {"resistance_ohm", "reactance_ohm"}, "scatterer.load");
            config.scatterer.load_ohms = std::complex<double>(
                load.value("resistance_ohm", 0.0), load.value("reactance_ohm", 0.0));
        } else {
            throw std::invalid_argument("scatterer.load must be \"matched\" or an impedance object");
        }
    }

    const json &p = j.at("population");
    detail::reject_unknown_keys(
        p, {"type", "count", "per_m3", "gamma_a", "eta_pack", "alpha_e", "antenna_gain"},
        "population");
    const std::string type = p.at("type").get<std::string>();
    if (type == "fixed_count") {
        config.population.kind = PopulationKind::fixed_count;
        config.population.count = p.at("count").get<std::int64_t>();
    } else if (type == "fixed_density") {
        config.population.kind = PopulationKind::fixed_density;
        config.population.per_m3 = p.at("per_m3").get<double>();
    } else if (type == "max_packed") {
        config.population.kind = PopulationKind::max_packed;
        config.population.gamma_a = p.value("gamma_a", 0.9);
        config.population.eta_pack = p.value("eta_pack", 0.64);
        config.population.alpha_e = p.value("alpha_e", 0.06);
        config.population.antenna_gain = p.value("antenna_gain", 1.64);
    } else {
        throw std::invalid_argument(
            "population.type must be \"fixed_count\", \"fixed_density\" or \"max_packed\"");
    }

    const json &freqs = j.at("frequencies_hz");
    if (!freqs.is_array() || freqs.empty())
        throw std::invalid_argument("frequencies_hz must be a non-empty array");
    for (const auto &f : freqs)
        config.frequencies.emplace_back(f.get<double>());

    config.ensembles = j.at("ensembles").get<std::int64_t>();
    config.seed = j.value("seed", std::uint64_t{42});

    config.check();
    return config;
}

/// Serializes a scenario back to JSON with every field spelled out.
/// nlohmann orders object keys, so the dump is canonical and hashable.
inline nlohmann::json scenario_to_json(const ScenarioConfig &config) {
    using nlohmann::json;
    json g;
    if (config.geometry.region == RegionKind::sphere) {
        g["region"] = "sphere";
        g["radius_m"] = config.geometry.radius_m;
    } else {
        g["region"] = "cube";
        g["side_m"] = config.geometry.side_m;
    }
    if (config.geometry.tx == TxPlacement::far_field_plane_wave) {
        g["tx"] = "plane_wave";
    } else {
        g["tx"] = "in_volume";
        g["tx_distance_m"] = config.geometry.tx_distance_m;
    }

    json a;
    a["directivity_rx"] = config.antenna.directivity_rx;
    a["gain_tx"] = config.antenna.gain_tx;
    a["radiation_efficiency"] = config.antenna.radiation_efficiency;
    a["tx_power_w"] = config.antenna.tx_power_w;
    a["normalized_power"] = config.antenna.normalized_power;
    if (config.antenna.range_m)
        a["range_m"] = *config.antenna.range_m;

    json s;
    switch (config.scatterer.kind) {
    case ScattererKind::resonant_half_wave:
        s["kind"] = "resonant_half_wave";
        break;
    case ScattererKind::dipole:
        s["kind"] = "dipole";
        s["length_over_lambda"] = config.scatterer.length_over_lambda;
        break;
    case ScattererKind::fixed_cross_section:
        s["kind"] = "fixed_cross_section";
        s["sigma_m2"] = config.scatterer.sigma_m2;
        break;
    }
    if (config.scatterer.matched_load)
        s["load"] = "matched";
    else if (config.scatterer.load_ohms)
        s["load"] = {{"resistance_ohm", config.scatterer.load_ohms->real()},
                     {"reactance_ohm", config.scatterer.load_ohms->imag()}};

    json p;
    switch (config.population.kind) {
    case PopulationKind::fixed_count:
        p["type"] = "fixed_count";
        p["count"] = config.population.count;
        break;
    case PopulationKind::fixed_density:
        p["type"] = "fixed_density";
        p["per_m3"] = config.population.per_m3;
        break;
    case PopulationKind::max_packed:
        p["type"] = "max_packed";
        p["gamma_a"] = config.population.gamma_a;
        p["eta_pack"] = config.population.eta_pack;
        p["alpha_e"] = config.population.alpha_e;
        p["antenna_gain"] = config.population.antenna_gain;
        break;
    }

    json freqs = json::array();
    for (const Frequency &f : config.frequencies)
        freqs.push_back(f.hertz());

    json j;
    j["geometry"] = g;
    j["antenna"] = a;
    j["scatterer"] = s;
    j["population"] = p;
    j["frequencies_hz"] = freqs;
    j["ensembles"] = config.ensembles;
    j["seed"] = config.seed;
    return j;
}

inline std::string serialize_scenario(const ScenarioConfig &config) {
    return scenario_to_json(config).dump(2) + "\n";
}

/// FNV-1a 64-bit hash of the canonical serialization.  Two configs hash
/// equal iff every semantic field matches.
inline std::uint64_t config_hash(const ScenarioConfig &config) {
    const std::string canonical = scenario_to_json(config).dump();
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace scatterlab
