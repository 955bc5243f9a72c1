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

// Beam-pair ranking, angular displacement between best and i-th best pairs,
// and per-rank misalignment path-loss models.

#include "a2a/fitting.hpp"
#include "a2a/propagation.hpp"
#include "a2a/units.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace a2a {

/// Trial-averaged path loss of one (tx, rx) beam pair at one (distance, height).
struct BeamScanRecord
{
    double distance_m;
    double height_m;
    int tx_beam_idx;
    int rx_beam_idx;
    double path_loss_db;
};

struct PointKey
{
    double distance_m;
    double height_m;

    auto operator<=>(const PointKey &) const = default;
};

inline std::string to_string(const PointKey &k)
{
    return "(d=" + std::to_string(k.distance_m) + " m, h=" + std::to_string(k.height_m) + " m)";
}

struct RankedPair
{
    int tx_beam_idx;
    int rx_beam_idx;
    double path_loss_db;
};

/// Beam pairs at one measurement point, ascending by path loss. Rank 1 (index
/// 0) is the best pair.
struct BeamPairRanking
{
    PointKey key;
    std::vector<RankedPair> pairs;

    std::size_t size() const { return pairs.size(); }

    const RankedPair &at_rank(std::size_t rank) const
    {
        if (rank < 1 || rank > pairs.size())
            throw std::out_of_range("ranking " + to_string(key) + " has " + std::to_string(pairs.size()) +
                                    " pairs, rank " + std::to_string(rank) + " requested");
        return pairs[rank - 1];
    }
};

/// Angle [deg] of a beam relative to boresight, for a scan window centred on
/// boresight with kBeamSpacingDeg between neighbours.
inline double beam_angle(int beam_idx, int window_size = kScanWindow)
{
    if (window_size <= 0)
        throw std::domain_error("beam_angle: window size must be positive");
    if (beam_idx < 0 || beam_idx >= window_size)
        throw std::domain_error("beam_angle: beam index " + std::to_string(beam_idx) + " outside scan window [0, " +
                                std::to_string(window_size) + ")");
    return (beam_idx - (window_size - 1) / 2.0) * kBeamSpacingDeg;
}

/// Ranks the beam pairs of a single measurement point. Equal path losses are
/// ordered by (tx, rx) ascending.
inline BeamPairRanking rank_beam_pairs(std::span<const BeamScanRecord> records, int window_size = kScanWindow)
{
    if (records.empty())
        throw std::invalid_argument("rank_beam_pairs: no records");

    const PointKey key{records.front().distance_m, records.front().height_m};
    std::set<std::pair<int, int>> seen;
    BeamPairRanking ranking{key, {}};
    ranking.pairs.reserve(records.size());
    for (const auto &r : records)
    {
        if (PointKey{r.distance_m, r.height_m} != key)
            throw std::invalid_argument("rank_beam_pairs: mixed measurement points " + to_string(key) + " and " +
                                        to_string(PointKey{r.distance_m, r.height_m}));
        if (r.tx_beam_idx < 0 || r.tx_beam_idx >= window_size || r.rx_beam_idx < 0 || r.rx_beam_idx >= window_size)
            throw std::invalid_argument("rank_beam_pairs: beam pair (" + std::to_string(r.tx_beam_idx) + ", " +
                                        std::to_string(r.rx_beam_idx) + ") outside the scan window at " + to_string(key));
        if (!std::isfinite(r.path_loss_db))
            throw std::invalid_argument("rank_beam_pairs: non-finite path loss at " + to_string(key));
        if (!seen.emplace(r.tx_beam_idx, r.rx_beam_idx).second)
            throw std::invalid_argument("rank_beam_pairs: duplicate beam pair (" + std::to_string(r.tx_beam_idx) + ", " +
                                        std::to_string(r.rx_beam_idx) + ") at " + to_string(key));
        ranking.pairs.push_back({r.tx_beam_idx, r.rx_beam_idx, r.path_loss_db});
    }
    std::sort(ranking.pairs.begin(), ranking.pairs.end(), [](const RankedPair &a, const RankedPair &b) {
        return std::tie(a.path_loss_db, a.tx_beam_idx, a.rx_beam_idx) <
               std::tie(b.path_loss_db, b.tx_beam_idx, b.rx_beam_idx);
    });
    return ranking;
}

/// Groups records by measurement point and ranks each group. Output is ordered
/// by (distance, height).
inline std::vector<BeamPairRanking> rank_all(std::span<const BeamScanRecord> records, int window_size = kScanWindow)
{
    std::map<PointKey, std::vector<BeamScanRecord>> groups;
    for (const auto &r : records)
        groups[{r.distance_m, r.height_m}].push_back(r);

    std::vector<BeamPairRanking> out;
    out.reserve(groups.size());
    for (const auto &[key, group] : groups)
        out.push_back(rank_beam_pairs(group, window_size));
    return out;
}

/// Mean over rankings of |theta_tx,best - theta_tx,i| + |theta_rx,best - theta_rx,i|
/// in degrees. Rank 1 is zero by definition.
inline double displacement(std::span<const BeamPairRanking> rankings, std::size_t rank, int window_size = kScanWindow)
{
    if (rank < 1)
        throw std::domain_error("displacement: rank must be >= 1");
    if (rank == 1)
        return 0.0;
    if (rankings.empty())
        throw std::invalid_argument("displacement: no rankings");

    double total = 0.0;
    for (const auto &r : rankings)
    {
        if (r.size() < rank)
            throw std::invalid_argument("displacement: ranking " + to_string(r.key) + " has only " +
                                        std::to_string(r.size()) + " pairs, rank " + std::to_string(rank) + " requested");
        const auto &best = r.pairs.front();
        const auto &other = r.pairs[rank - 1];
        total += std::abs(beam_angle(best.tx_beam_idx, window_size) - beam_angle(other.tx_beam_idx, window_size)) +
                 std::abs(beam_angle(best.rx_beam_idx, window_size) - beam_angle(other.rx_beam_idx, window_size));
    }
    return total / static_cast<double>(rankings.size());
}

/// Fit points of the rank-i pair at every measurement point, in ranking order.
inline std::vector<FitPoint> rank_fit_points(std::span<const BeamPairRanking> rankings, std::size_t rank)
{
    std::vector<FitPoint> out;
    out.reserve(rankings.size());
    for (const auto &r : rankings)
        out.push_back({r.key.distance_m, r.at_rank(rank).path_loss_db});
    return out;
}

struct MisalignmentEntry
{
    PathLossModel model; // CiModel for rank 1, FiModel for ranks 2..9
    std::optional<double> delta_deg;
};

/// Path-loss models for the best through ninth-best beam pair. Ranks may be
/// absent when the data to fit them is not available.
class MisalignmentTable
{
  public:
    static constexpr std::size_t kRanks = kMaxMisalignmentRank;

    void set(std::size_t rank, MisalignmentEntry entry)
    {
        check_rank(rank);
        if (rank == 1 && !std::holds_alternative<CiModel>(entry.model))
            throw std::invalid_argument("MisalignmentTable: rank 1 must be a CI model");
        if (rank > 1 && !std::holds_alternative<FiModel>(entry.model))
            throw std::invalid_argument("MisalignmentTable: ranks 2-9 must be FI models");
        if (entry.delta_deg && (rank == 1 ? *entry.delta_deg != 0.0 : *entry.delta_deg < 0.0))
            throw std::invalid_argument("MisalignmentTable: invalid displacement for rank " + std::to_string(rank));
        entries_[rank - 1] = std::move(entry);
    }

    bool has(std::size_t rank) const
    {
        check_rank(rank);
        return entries_[rank - 1].has_value();
    }

    const MisalignmentEntry &at(std::size_t rank) const
    {
        check_rank(rank);
        if (!entries_[rank - 1])
            throw std::invalid_argument("MisalignmentTable: no model for rank " + std::to_string(rank));
        return *entries_[rank - 1];
    }

  private:
    static void check_rank(std::size_t rank)
    {
        if (rank < 1 || rank > kRanks)
            throw std::domain_error("MisalignmentTable: rank " + std::to_string(rank) + " outside 1.." +
                                    std::to_string(kRanks));
    }

    std::array<std::optional<MisalignmentEntry>, kRanks> entries_{};
};

/// Combined path loss and beamforming-gain reduction [dB] of the rank-i pair at d.
inline double misalignment_loss(const MisalignmentTable &table, std::size_t rank, DistanceM d)
{
    return mean_pl(table.at(rank).model, d);
}

/// Builds the full table from beam-level rankings: CI fit of the best pairs,
/// FI fits of ranks 2..9 pooled over heights, and displacement per rank.
inline MisalignmentTable build_misalignment_table(std::span<const BeamPairRanking> rankings, FrequencyGHz f,
                                                  ShadowingStatistic stat = ShadowingStatistic::kMeanSquare,
                                                  int window_size = kScanWindow)
{
    MisalignmentTable table;
    for (std::size_t rank = 1; rank <= MisalignmentTable::kRanks; ++rank)
    {
        const auto points = rank_fit_points(rankings, rank);
        MisalignmentEntry entry{rank == 1 ? fit_ci(points, f, stat).model : fit_fi(points, stat).model,
                                displacement(rankings, rank, window_size)};
        table.set(rank, std::move(entry));
    }
    return table;
}

} // namespace a2a
