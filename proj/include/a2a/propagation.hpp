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

// Closed-form path-loss laws (close-in, floating intercept, free space) and
// log-normal shadow-fading sampling. All values are in dB.

#include "a2a/units.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace a2a {

/// Free-space path loss at the 1 m reference distance: 20 log10(4 pi f / c).
inline double friis_reference_pl(FrequencyGHz f)
{
    if (!(f.value > 0.0) || !std::isfinite(f.value))
        throw std::domain_error("friis_reference_pl: frequency must be positive, got " + std::to_string(f.value) + " GHz");
    return 20.0 * std::log10(4.0 * std::numbers::pi * f.hz() / kSpeedOfLight);
}

namespace detail {

inline void require_reference_distance(DistanceM d, const char *who)
{
    if (!(d.value >= kReferenceDistanceM) || !std::isfinite(d.value))
        throw std::domain_error(std::string(who) + ": distance " + std::to_string(d.value) +
                                " m is below the 1 m reference distance");
}

inline void require_sigma(double sigma_db, const char *who)
{
    if (!(sigma_db >= 0.0) || !std::isfinite(sigma_db))
        throw std::invalid_argument(std::string(who) + ": shadowing sigma must be finite and >= 0");
}

} // namespace detail

/// Close-in model. The intercept is not stored; it always follows from the
/// carrier frequency through friis_reference_pl().
struct CiModel
{
    FrequencyGHz freq{kCarrierGHz};
    double ple = 2.0;
    double sigma_db = 0.0;

    double intercept_db() const { return friis_reference_pl(freq); }
};

/// Floating-intercept model (single-frequency alpha-beta-gamma form, where
/// intercept_db = beta + 10 gamma log10(f)).
struct FiModel
{
    double intercept_db = 0.0;
    double ple = 2.0;
    double sigma_db = 0.0;
};

using PathLossModel = std::variant<CiModel, FiModel>;

inline double ci_mean_pl(const CiModel &model, DistanceM d)
{
    detail::require_reference_distance(d, "ci_mean_pl");
    return friis_reference_pl(model.freq) + 10.0 * model.ple * std::log10(d.value);
}

inline double fi_mean_pl(const FiModel &model, DistanceM d)
{
    detail::require_reference_distance(d, "fi_mean_pl");
    return model.intercept_db + 10.0 * model.ple * std::log10(d.value);
}

inline double mean_pl(const PathLossModel &model, DistanceM d)
{
    return std::visit([d](const auto &m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, CiModel>)
            return ci_mean_pl(m, d);
        else
            return fi_mean_pl(m, d);
    }, model);
}

inline double intercept_db(const PathLossModel &model)
{
    return std::visit([](const auto &m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, CiModel>)
            return m.intercept_db();
        else
            return m.intercept_db;
    }, model);
}

inline double ple(const PathLossModel &model)
{
    return std::visit([](const auto &m) { return m.ple; }, model);
}

inline double sigma_db(const PathLossModel &model)
{
    return std::visit([](const auto &m) { return m.sigma_db; }, model);
}

/// Friis free-space loss. No atmospheric term.
inline double free_space_pl(FrequencyGHz f, DistanceM d)
{
    if (!(d.value > 0.0) || !std::isfinite(d.value))
        throw std::domain_error("free_space_pl: distance must be positive, got " + std::to_string(d.value) + " m");
    return friis_reference_pl(f) + 20.0 * std::log10(d.value);
}

/// Standard normal variates from std::mt19937_64 through the Box-Muller
/// transform. Both the engine and the transform are fully specified, so a
/// given seed yields the same sequence with every standard library.
class GaussianSampler
{
  public:
    explicit GaussianSampler(RngSeed seed) : engine_(seed.value) {}

    double operator()()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1], u2 in [0, 1), 53-bit resolution
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double phase = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(phase);
        has_spare_ = true;
        return radius * std::cos(phase);
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// n draws of mean_pl(d) + xi, xi ~ N(0, sigma_db^2).
inline std::vector<double> sample_pl(const PathLossModel &model, DistanceM d, std::size_t n, RngSeed seed)
{
    const double mean = mean_pl(model, d);
    const double sigma = sigma_db(model);
    detail::require_sigma(sigma, "sample_pl");

    std::vector<double> out;
    out.reserve(n);
    GaussianSampler gauss(seed);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(mean + sigma * gauss());
    return out;
}

} // namespace a2a
