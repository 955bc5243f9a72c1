// SPDX-License-Identifier: Apache-2.0
//
// a2a-channel: air-to-air mmWave path loss modelling toolkit
// Copyright (C) 2026 The a2a-channel authors
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

// 3GPP TR 38.901 LOS path loss (Table 7.4.1-1) for UMi-Street Canyon, UMa,
// RMa and InH-Office (open office), plus the linear oxygen absorption term of
// TR 38.901 Sec. 7.6.1.
//
// Conventions used here:
//   - d is the 3D distance; TX and RX are treated as co-planar, so d2D = d3D.
//   - The lower validity bound is relaxed to 1 m for every scenario so the
//     curves can be evaluated over short aerial links. Upper bounds follow
//     the standard.

#include "a2a/units.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace a2a {

enum class Scenario
{
    kUmiStreetCanyon,
    kUma,
    kRma,
    kInOo
};

inline std::string_view scenario_name(Scenario s)
{
    switch (s)
    {
    case Scenario::kUmiStreetCanyon: return "UMi-StreetCanyon";
    case Scenario::kUma: return "UMa";
    case Scenario::kRma: return "RMa";
    case Scenario::kInOo: return "InOo";
    }
    return "unknown";
}

/// Oxygen absorption coefficient [dB/km] from TR 38.901 Table 7.6.1-1,
/// linearly interpolated between tabulated frequencies. Zero outside 53-67 GHz.
inline double oxygen_absorption_coefficient(FrequencyGHz f)
{
    static constexpr std::array<std::pair<double, double>, 17> table{{
        {52.0, 0.0}, {53.0, 1.0}, {54.0, 2.2}, {55.0, 4.0}, {56.0, 6.6}, {57.0, 9.7},
        {58.0, 12.6}, {59.0, 14.6}, {60.0, 15.0}, {61.0, 14.6}, {62.0, 14.3}, {63.0, 10.5},
        {64.0, 6.8}, {65.0, 3.9}, {66.0, 1.9}, {67.0, 1.0}, {68.0, 0.0},
    }};
    if (!(f.value > 0.0))
        throw std::domain_error("oxygen_absorption_coefficient: frequency must be positive");
    if (f.value <= table.front().first || f.value >= table.back().first)
        return 0.0;
    const auto hi = std::upper_bound(table.begin(), table.end(), f.value,
                                     [](double v, const auto &row) { return v < row.first; });
    const auto lo = hi - 1;
    const double t = (f.value - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

/// alpha [dB/km] * d / 1000.
inline double oxygen_loss(DistanceM d, double alpha_db_per_km)
{
    if (!(d.value >= 0.0))
        throw std::domain_error("oxygen_loss: distance must be >= 0");
    if (!(alpha_db_per_km >= 0.0))
        throw std::domain_error("oxygen_loss: absorption coefficient must be >= 0");
    return alpha_db_per_km * d.value / 1000.0;
}

struct ScenarioParams
{
    Scenario scenario = Scenario::kUmiStreetCanyon;
    double bs_height_m = 10.0;
    double ut_height_m = 1.5;
    double avg_building_height_m = 5.0; // RMa only
    double street_width_m = 20.0;       // RMa only, unused by the LOS formula
    double oxygen_alpha_db_per_km = 0.0;

    /// TR 38.901 calibration heights with the oxygen coefficient taken at the
    /// given carrier: UMi 10/1.5 m, UMa 25/1.5 m, RMa 35/1.5 m (h = 5 m,
    /// W = 20 m), InOo 3/1 m. With f = 60.48 GHz these reproduce the
    /// reference curves bundled in data/fig5_reference_curves.csv.
    static ScenarioParams defaults(Scenario s, FrequencyGHz carrier = kCarrier)
    {
        ScenarioParams p;
        p.scenario = s;
        p.oxygen_alpha_db_per_km = oxygen_absorption_coefficient(carrier);
        switch (s)
        {
        case Scenario::kUmiStreetCanyon: p.bs_height_m = 10.0; p.ut_height_m = 1.5; break;
        case Scenario::kUma: p.bs_height_m = 25.0; p.ut_height_m = 1.5; break;
        case Scenario::kRma: p.bs_height_m = 35.0; p.ut_height_m = 1.5; break;
        case Scenario::kInOo: p.bs_height_m = 3.0; p.ut_height_m = 1.0; break;
        }
        return p;
    }
};

namespace detail {

inline constexpr double kEffectiveEnvironmentHeightM = 1.0;

[[noreturn]] inline void out_of_range(const ScenarioParams &p, const std::string &what)
{
    throw std::domain_error("pl_3gpp_los(" + std::string(scenario_name(p.scenario)) + "): " + what);
}

inline void check_params(const ScenarioParams &p, FrequencyGHz f)
{
    if (!(f.value >= 0.5 && f.value <= 100.0))
        out_of_range(p, "frequency " + std::to_string(f.value) + " GHz outside [0.5, 100] GHz");
    if (!(p.bs_height_m > 0.0))
        out_of_range(p, "bs_height_m must be > 0");
    if (!(p.ut_height_m > 0.0))
        out_of_range(p, "ut_height_m must be > 0");
    if (!(p.oxygen_alpha_db_per_km >= 0.0))
        out_of_range(p, "oxygen_alpha_db_per_km must be >= 0");
    if (p.scenario == Scenario::kRma && !(p.avg_building_height_m > 0.0))
        out_of_range(p, "avg_building_height_m must be > 0");
    if ((p.scenario == Scenario::kUmiStreetCanyon || p.scenario == Scenario::kUma) &&
        (p.bs_height_m <= kEffectiveEnvironmentHeightM || p.ut_height_m <= kEffectiveEnvironmentHeightM))
        out_of_range(p, "antenna heights must exceed the 1 m effective environment height");
}

inline void check_distance(const ScenarioParams &p, double d, double max_m)
{
    if (!(d >= kReferenceDistanceM))
        out_of_range(p, "distance " + std::to_string(d) + " m below the lower bound of 1 m");
    if (!(d <= max_m))
        out_of_range(p, "distance " + std::to_string(d) + " m above the upper bound of " + std::to_string(max_m) + " m");
}

inline double rma_pl1(const ScenarioParams &p, double fc_ghz, double d)
{
    const double h = p.avg_building_height_m;
    const double hp = std::pow(h, 1.72);
    return 20.0 * std::log10(40.0 * std::numbers::pi * d * fc_ghz / 3.0) + std::min(0.03 * hp, 10.0) * std::log10(d) -
           std::min(0.044 * hp, 14.77) + 0.002 * std::log10(h) * d;
}

} // namespace detail

/// Breakpoint distance [m]: d'_BP = 4 h'_BS h'_UT f / c for UMi/UMa (heights
/// reduced by h_E = 1 m), d_BP = 2 pi h_BS h_UT f / c for RMa. InOo has none
/// (returns +inf).
inline double breakpoint_distance_m(const ScenarioParams &p, FrequencyGHz f)
{
    switch (p.scenario)
    {
    case Scenario::kUmiStreetCanyon:
    case Scenario::kUma:
        return 4.0 * (p.bs_height_m - detail::kEffectiveEnvironmentHeightM) *
               (p.ut_height_m - detail::kEffectiveEnvironmentHeightM) * f.hz() / kSpeedOfLight;
    case Scenario::kRma:
        return 2.0 * std::numbers::pi * p.bs_height_m * p.ut_height_m * f.hz() / kSpeedOfLight;
    case Scenario::kInOo:
        break;
    }
    return std::numeric_limits<double>::infinity();
}

/// LOS path loss [dB] including the oxygen absorption term.
inline double pl_3gpp_los(const ScenarioParams &p, FrequencyGHz f, DistanceM dist)
{
    detail::check_params(p, f);
    const double d = dist.value;
    const double fc = f.value;
    const double d_bp = breakpoint_distance_m(p, f);
    const double dh = p.bs_height_m - p.ut_height_m;

    double pl = 0.0;
    switch (p.scenario)
    {
    case Scenario::kUmiStreetCanyon:
        detail::check_distance(p, d, 5000.0);
        if (d <= d_bp)
            pl = 32.4 + 21.0 * std::log10(d) + 20.0 * std::log10(fc);
        else
            pl = 32.4 + 40.0 * std::log10(d) + 20.0 * std::log10(fc) - 9.5 * std::log10(d_bp * d_bp + dh * dh);
        break;
    case Scenario::kUma:
        detail::check_distance(p, d, 5000.0);
        if (d <= d_bp)
            pl = 28.0 + 22.0 * std::log10(d) + 20.0 * std::log10(fc);
        else
            pl = 28.0 + 40.0 * std::log10(d) + 20.0 * std::log10(fc) - 9.0 * std::log10(d_bp * d_bp + dh * dh);
        break;
    case Scenario::kRma:
        detail::check_distance(p, d, 10000.0);
        if (d <= d_bp)
            pl = detail::rma_pl1(p, fc, d);
        else
            pl = detail::rma_pl1(p, fc, d_bp) + 40.0 * std::log10(d / d_bp);
        break;
    case Scenario::kInOo:
        detail::check_distance(p, d, 150.0);
        pl = 32.4 + 17.3 * std::log10(d) + 20.0 * std::log10(fc);
        break;
    }
    return pl + oxygen_loss(dist, p.oxygen_alpha_db_per_km);
}

} // namespace a2a
