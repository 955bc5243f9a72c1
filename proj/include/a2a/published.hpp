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

// Parameter values as published with the bundled measurement campaign. Used
// for side-by-side comparison in reports and as the built-in misalignment
// table; fitted results are never replaced by these.
//
// The sigma entries follow the published convention (mean squared residual,
// see ShadowingStatistic::kMeanSquare).

#include "a2a/beam_analysis.hpp"
#include "a2a/propagation.hpp"
#include "a2a/units.hpp"

#include <array>

namespace a2a::published {

inline constexpr int kVersion = 1;

struct FitParams
{
    double intercept_db;
    double ple;
    double sigma_db;
};

// CI vs FI over all heights.
inline constexpr FitParams kCiAllHeights{68.08, 2.25, 3.56};
inline constexpr FitParams kFiAllHeights{67.03, 2.33, 3.52};

// CI fit per height, columns as printed.
struct HeightColumn
{
    double height_m; // 0 = all heights
    double ple;
    double sigma_db;
};
inline constexpr std::array<HeightColumn, 4> kCiByHeight{{
    {0.0, 2.25, 3.56},
    {6.0, 2.23, 0.82},
    {12.0, 2.25, 2.62},
    {15.0, 2.28, 8.06},
}};

// Best through ninth-best beam pair.
struct RankColumn
{
    double ple;
    double intercept_db;
    double sigma_db;
    double delta_deg;
};
inline constexpr std::array<RankColumn, 9> kByRank{{
    {2.25, 68.08, 3.56, 0.0},
    {2.28, 69.68, 3.78, 1.87},
    {2.07, 74.10, 4.85, 2.59},
    {1.96, 76.79, 4.61, 2.70},
    {2.01, 77.26, 4.01, 3.47},
    {1.93, 79.31, 5.76, 3.42},
    {1.99, 79.35, 5.80, 4.20},
    {2.02, 79.52, 5.38, 3.89},
    {2.03, 79.73, 4.82, 4.20},
}};

// Closing model: PL(d) = 68.08 + 22.5 log10(d), sigma 3.56 dB.
inline constexpr double kConclusionInterceptDb = 68.08;
inline constexpr double kConclusionSlopeDb = 22.5;
inline constexpr double kConclusionSigmaDb = 3.56;

/// The all-heights CI model. Its intercept comes from Friis at the carrier.
inline CiModel ci_model(FrequencyGHz f = kCarrier)
{
    return CiModel{f, kCiAllHeights.ple, kCiAllHeights.sigma_db};
}

inline FiModel fi_model()
{
    return FiModel{kFiAllHeights.intercept_db, kFiAllHeights.ple, kFiAllHeights.sigma_db};
}

inline MisalignmentTable misalignment_table(FrequencyGHz f = kCarrier)
{
    MisalignmentTable table;
    for (std::size_t i = 0; i < kByRank.size(); ++i)
    {
        const auto &c = kByRank[i];
        if (i == 0)
            table.set(1, {CiModel{f, c.ple, c.sigma_db}, c.delta_deg});
        else
            table.set(i + 1, {FiModel{c.intercept_db, c.ple, c.sigma_db}, c.delta_deg});
    }
    return table;
}

} // namespace a2a::published
