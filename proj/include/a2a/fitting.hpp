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

// Least-squares fits of close-in (CI) and floating-intercept (FI) laws in
// log-distance. The regressor is x = 10 log10(d), so slopes are path-loss
// exponents directly.

#include "a2a/propagation.hpp"
#include "a2a/units.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace a2a {

struct FitPoint
{
    double distance_m;
    double path_loss_db;
};

/// Raised when the data cannot determine the requested parameters.
class FitError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Which residual statistic is stored as the model's sigma_db.
///
/// kMeanSquare is the convention behind the published parameter tables: their
/// "sigma" column equals the mean of the squared residuals (in dB^2), even
/// though it is described as a root-mean-square error. kRootMeanSquare gives
/// the standard deviation of the residuals in dB.
enum class ShadowingStatistic
{
    kMeanSquare,
    kRootMeanSquare
};

struct FitReport
{
    PathLossModel model;
    std::vector<double> residuals_db; // measured - fitted, in input order
    std::size_t point_count = 0;

    double mean_square_db2() const
    {
        if (residuals_db.empty())
            return 0.0;
        const double ss = std::inner_product(residuals_db.begin(), residuals_db.end(), residuals_db.begin(), 0.0);
        return ss / static_cast<double>(residuals_db.size());
    }
    double rmse_db() const { return std::sqrt(mean_square_db2()); }

    const CiModel &ci() const { return std::get<CiModel>(model); }
    const FiModel &fi() const { return std::get<FiModel>(model); }
};

namespace detail {

inline double shadowing_value(const FitReport &r, ShadowingStatistic stat)
{
    return stat == ShadowingStatistic::kMeanSquare ? r.mean_square_db2() : r.rmse_db();
}

inline void validate_fit_points(std::span<const FitPoint> points, const char *who)
{
    if (points.empty())
        throw FitError(std::string(who) + ": no points to fit");
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        const auto &p = points[i];
        if (!(p.distance_m >= kReferenceDistanceM) || !std::isfinite(p.distance_m))
            throw std::domain_error(std::string(who) + ": point " + std::to_string(i) + " has distance " +
                                    std::to_string(p.distance_m) + " m below the 1 m reference distance");
        if (!std::isfinite(p.path_loss_db))
            throw std::invalid_argument(std::string(who) + ": point " + std::to_string(i) + " has a non-finite path loss");
    }
}

} // namespace detail

/// CI fit: least squares through the origin of y = PL - PL_ref(f) on x.
inline FitReport fit_ci(std::span<const FitPoint> points, FrequencyGHz f,
                        ShadowingStatistic stat = ShadowingStatistic::kMeanSquare)
{
    detail::validate_fit_points(points, "fit_ci");
    const double ref = friis_reference_pl(f);

    double sxx = 0.0, sxy = 0.0;
    for (const auto &p : points)
    {
        const double x = 10.0 * std::log10(p.distance_m);
        sxx += x * x;
        sxy += x * (p.path_loss_db - ref);
    }
    if (sxx == 0.0)
        throw FitError("fit_ci: degenerate fit, every point lies at the 1 m reference distance");

    CiModel model{f, sxy / sxx, 0.0};
    FitReport report{model, {}, points.size()};
    report.residuals_db.reserve(points.size());
    for (const auto &p : points)
        report.residuals_db.push_back(p.path_loss_db - ref - model.ple * 10.0 * std::log10(p.distance_m));
    std::get<CiModel>(report.model).sigma_db = detail::shadowing_value(report, stat);
    return report;
}

/// FI fit: ordinary least squares of PL on x; slope = n_FI, intercept = PL_FI.
inline FitReport fit_fi(std::span<const FitPoint> points,
                        ShadowingStatistic stat = ShadowingStatistic::kMeanSquare)
{
    detail::validate_fit_points(points, "fit_fi");

    std::set<double> distinct;
    for (const auto &p : points)
        distinct.insert(p.distance_m);
    if (distinct.size() < 2)
        throw FitError("fit_fi: degenerate fit, need at least two distinct distances (got " +
                       std::to_string(distinct.size()) + ")");

    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto &p : points)
    {
        mx += 10.0 * std::log10(p.distance_m);
        my += p.path_loss_db;
    }
    mx /= n;
    my /= n;

    // centred sums
    double sxx = 0.0, sxy = 0.0;
    for (const auto &p : points)
    {
        const double dx = 10.0 * std::log10(p.distance_m) - mx;
        sxx += dx * dx;
        sxy += dx * (p.path_loss_db - my);
    }

    FiModel model;
    model.ple = sxy / sxx;
    model.intercept_db = my - model.ple * mx;

    FitReport report{model, {}, points.size()};
    report.residuals_db.reserve(points.size());
    for (const auto &p : points)
        report.residuals_db.push_back(p.path_loss_db - model.intercept_db - model.ple * 10.0 * std::log10(p.distance_m));
    std::get<FiModel>(report.model).sigma_db = detail::shadowing_value(report, stat);
    return report;
}

enum class ModelKind
{
    kCi,
    kFi
};

/// Outcome of one group in fit_grouped(): either a report or the reason the
/// group could not be fitted.
struct GroupFitResult
{
    std::optional<FitReport> report;
    std::string error;

    bool ok() const { return report.has_value(); }
};

/// Fits each group independently. Groups whose fit fails keep their key and
/// carry the error message instead of a report.
template <class Key>
std::map<Key, GroupFitResult> fit_grouped(std::span<const std::pair<Key, FitPoint>> points, ModelKind kind,
                                          FrequencyGHz f, ShadowingStatistic stat = ShadowingStatistic::kMeanSquare)
{
    std::map<Key, std::vector<FitPoint>> groups;
    for (const auto &[key, p] : points)
        groups[key].push_back(p);

    std::map<Key, GroupFitResult> out;
    for (const auto &[key, pts] : groups)
    {
        GroupFitResult result;
        try
        {
            result.report = kind == ModelKind::kCi ? fit_ci(pts, f, stat) : fit_fi(pts, stat);
        }
        catch (const std::exception &e)
        {
            result.error = e.what();
        }
        out.emplace(key, std::move(result));
    }
    return out;
}

} // namespace a2a
