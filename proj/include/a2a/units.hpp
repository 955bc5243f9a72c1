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

#include <compare>
#include <cstdint>

namespace a2a {

/// Speed of light in vacuum [m/s], exact SI value.
inline constexpr double kSpeedOfLight = 299792458.0;

/// Reference distance of the close-in model [m].
inline constexpr double kReferenceDistanceM = 1.0;

// Radio configuration of the 60 GHz channel sounders used for the bundled data.
inline constexpr double kCarrierGHz = 60.48;
inline constexpr double kBandwidthGHz = 2.16;
inline constexpr double kMaxErpDbm = 45.0;
inline constexpr double kBeamSpacingDeg = 1.4;
inline constexpr int kScanWindow = 20;          // 20 x 20 = 400 beam pairs per scan
inline constexpr int kTrialsPerScan = 15;
inline constexpr int kMaxMisalignmentRank = 9;

/// Carrier frequency in GHz.
struct FrequencyGHz
{
    double value;

    constexpr explicit FrequencyGHz(double ghz) : value(ghz) {}
    constexpr double hz() const { return value * 1.0e9; }
    constexpr auto operator<=>(const FrequencyGHz &) const = default;
};

/// 3D TX-RX separation in meters.
struct DistanceM
{
    double value;

    constexpr explicit DistanceM(double m) : value(m) {}
    constexpr auto operator<=>(const DistanceM &) const = default;
};

struct RngSeed
{
    std::uint64_t value;

    constexpr explicit RngSeed(std::uint64_t s) : value(s) {}
    constexpr auto operator<=>(const RngSeed &) const = default;
};

inline constexpr FrequencyGHz kCarrier{kCarrierGHz};

} // namespace a2a
