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

// Measurement ingestion. Two CSV schemas are understood, selected by header:
//
//   raw:        distance_m,height_m,tx_beam_idx,rx_beam_idx,trial_idx,path_loss_db
//   aggregated: distance_m,height_m,rank,path_loss_db   (rank empty = best pair)
//
// Columns may appear in any order; extra columns are ignored. Rows are
// numbered from 1 starting at the first data row.

#include "a2a/beam_analysis.hpp"
#include "a2a/fitting.hpp"
#include "a2a/units.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace a2a {

struct RawTrialRecord
{
    double distance_m;
    double height_m;
    int tx_beam_idx;
    int rx_beam_idx;
    int trial_idx;
    double path_loss_db;
};

struct AggregatedPoint
{
    double distance_m;
    double height_m;
    std::optional<int> rank; // empty for best-beam data
    std::optional<int> tx_beam_idx;
    std::optional<int> rx_beam_idx;
    double mean_path_loss_db;
    std::size_t trial_count = 1;

    /// Rank used for selection; unranked points are best-pair measurements.
    int effective_rank() const { return rank.value_or(1); }
};

class ParseError : public std::runtime_error
{
  public:
    ParseError(std::size_t row, std::string column, std::string detail, std::string source = {})
        : std::runtime_error(format(row, column, detail, source)), row_(row), column_(std::move(column)),
          detail_(std::move(detail))
    {
    }

    /// 1-based data row; 0 refers to the header.
    std::size_t row() const { return row_; }
    const std::string &column() const { return column_; }
    const std::string &detail() const { return detail_; }

  private:
    static std::string format(std::size_t row, const std::string &column, const std::string &detail,
                              const std::string &source)
    {
        std::string msg = source.empty() ? std::string() : source + ": ";
        msg += row == 0 ? std::string("header") : "row " + std::to_string(row) + " (line " + std::to_string(row + 1) + ")";
        if (!column.empty())
            msg += ", column " + column;
        return msg + ": " + detail;
    }

    std::size_t row_;
    std::string column_;
    std::string detail_;
};

/// Raised when a selection filter leaves no points.
class EmptySelectionError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

class CsvTable
{
  public:
    CsvTable(std::istream &in)
    {
        std::string line;
        bool header_done = false;
        while (std::getline(in, line))
        {
            if (!header_done)
            {
                if (line.rfind("\xEF\xBB\xBF", 0) == 0)
                    line.erase(0, 3);
                if (trim(line).empty())
                    continue;
                header_ = line;
                for (auto f : split_csv_line(header_))
                    names_.emplace_back(f);
                header_done = true;
                continue;
            }
            lines_.push_back(line);
        }
        if (!header_done)
            throw ParseError(0, "", "empty input, expected a header line");
        // trailing blank lines are not rows
        while (!lines_.empty() && trim(lines_.back()).empty())
            lines_.pop_back();
    }

    bool has_column(std::string_view name) const
    {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    std::size_t column(std::string_view name) const
    {
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end())
            throw ParseError(0, std::string(name), "missing column");
        return static_cast<std::size_t>(it - names_.begin());
    }

    const std::vector<std::string> &lines() const { return lines_; }

  private:
    std::string header_;
    std::vector<std::string> names_;
    std::vector<std::string> lines_;
};

struct RowReader
{
    std::vector<std::string_view> fields;
    std::size_t row;

    std::string_view field(std::size_t idx, std::string_view name) const
    {
        if (idx >= fields.size())
            throw ParseError(row, std::string(name), "missing field");
        return fields[idx];
    }

    double number(std::size_t idx, std::string_view name) const
    {
        const auto text = field(idx, name);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
            throw ParseError(row, std::string(name), "'" + std::string(text) + "' is not a finite number");
        return v;
    }

    int integer(std::size_t idx, std::string_view name) const
    {
        const auto text = field(idx, name);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            throw ParseError(row, std::string(name), "'" + std::string(text) + "' is not an integer");
        return v;
    }

    double positive(std::size_t idx, std::string_view name) const
    {
        const double v = number(idx, name);
        if (!(v > 0.0))
            throw ParseError(row, std::string(name), "must be positive, got " + std::string(field(idx, name)));
        return v;
    }
};

inline bool is_raw_schema(const CsvTable &t)
{
    return t.has_column("trial_idx");
}

inline std::vector<RawTrialRecord> parse_raw(const CsvTable &t)
{
    const auto c_d = t.column("distance_m"), c_h = t.column("height_m"), c_tx = t.column("tx_beam_idx"),
               c_rx = t.column("rx_beam_idx"), c_trial = t.column("trial_idx"), c_pl = t.column("path_loss_db");
    std::vector<RawTrialRecord> out;
    out.reserve(t.lines().size());
    std::size_t row = 0;
    for (const auto &line : t.lines())
    {
        ++row;
        if (trim(line).empty())
            continue;
        const RowReader r{split_csv_line(line), row};
        RawTrialRecord rec{};
        rec.distance_m = r.positive(c_d, "distance_m");
        rec.height_m = r.positive(c_h, "height_m");
        rec.tx_beam_idx = r.integer(c_tx, "tx_beam_idx");
        if (rec.tx_beam_idx < 0)
            throw ParseError(row, "tx_beam_idx", "must be >= 0");
        rec.rx_beam_idx = r.integer(c_rx, "rx_beam_idx");
        if (rec.rx_beam_idx < 0)
            throw ParseError(row, "rx_beam_idx", "must be >= 0");
        rec.trial_idx = r.integer(c_trial, "trial_idx");
        if (rec.trial_idx < 0 || rec.trial_idx >= kTrialsPerScan)
            throw ParseError(row, "trial_idx", "must be in [0, " + std::to_string(kTrialsPerScan) + ")");
        rec.path_loss_db = r.number(c_pl, "path_loss_db");
        out.push_back(rec);
    }
    return out;
}

inline std::vector<AggregatedPoint> parse_aggregated(const CsvTable &t)
{
    const auto c_d = t.column("distance_m"), c_h = t.column("height_m"), c_rank = t.column("rank"),
               c_pl = t.column("path_loss_db");
    std::vector<AggregatedPoint> out;
    out.reserve(t.lines().size());
    std::size_t row = 0;
    for (const auto &line : t.lines())
    {
        ++row;
        if (trim(line).empty())
            continue;
        const RowReader r{split_csv_line(line), row};
        AggregatedPoint p{};
        p.distance_m = r.positive(c_d, "distance_m");
        p.height_m = r.positive(c_h, "height_m");
        if (!r.field(c_rank, "rank").empty())
        {
            const int rank = r.integer(c_rank, "rank");
            if (rank < 1)
                throw ParseError(row, "rank", "must be >= 1");
            p.rank = rank;
        }
        p.mean_path_loss_db = r.number(c_pl, "path_loss_db");
        p.trial_count = 1;
        out.push_back(p);
    }
    return out;
}

} // namespace detail

inline std::vector<RawTrialRecord> parse_raw_csv(std::istream &in)
{
    return detail::parse_raw(detail::CsvTable(in));
}

inline std::vector<AggregatedPoint> parse_aggregated_csv(std::istream &in)
{
    return detail::parse_aggregated(detail::CsvTable(in));
}

using MeasurementSet = std::variant<std::vector<RawTrialRecord>, std::vector<AggregatedPoint>>;

/// Parses either schema, chosen by the presence of a trial_idx column.
inline MeasurementSet parse_csv(std::istream &in)
{
    const detail::CsvTable table(in);
    if (detail::is_raw_schema(table))
        return detail::parse_raw(table);
    return detail::parse_aggregated(table);
}

inline MeasurementSet load_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    try
    {
        return parse_csv(in);
    }
    catch (const ParseError &e)
    {
        throw ParseError(e.row(), e.column(), e.detail(), path);
    }
}

/// Mean path loss per (distance, height, tx, rx). Output is sorted by that key.
/// Within a group the trials are summed in (trial_idx, value) order, so the
/// result does not depend on input row order.
inline std::vector<AggregatedPoint> aggregate_trials(std::span<const RawTrialRecord> records)
{
    using Key = std::tuple<double, double, int, int>;
    std::map<Key, std::vector<std::pair<int, double>>> groups;
    for (const auto &r : records)
        groups[{r.distance_m, r.height_m, r.tx_beam_idx, r.rx_beam_idx}].emplace_back(r.trial_idx, r.path_loss_db);

    std::vector<AggregatedPoint> out;
    out.reserve(groups.size());
    for (auto &[key, trials] : groups)
    {
        std::sort(trials.begin(), trials.end());
        double sum = 0.0;
        for (const auto &t : trials)
            sum += t.second;
        const auto &[d, h, tx, rx] = key;
        out.push_back({d, h, std::nullopt, tx, rx, sum / static_cast<double>(trials.size()), trials.size()});
    }
    return out;
}

/// Beam-level points (tx/rx present) as scan records for ranking.
inline std::vector<BeamScanRecord> to_scan_records(std::span<const AggregatedPoint> points)
{
    std::vector<BeamScanRecord> out;
    out.reserve(points.size());
    for (const auto &p : points)
    {
        if (!p.tx_beam_idx || !p.rx_beam_idx)
            throw std::invalid_argument("to_scan_records: point without beam indices");
        out.push_back({p.distance_m, p.height_m, *p.tx_beam_idx, *p.rx_beam_idx, p.mean_path_loss_db});
    }
    return out;
}

/// The rank 1..max_rank pairs of every ranking as ranked points.
inline std::vector<AggregatedPoint> ranked_points(std::span<const BeamPairRanking> rankings, std::size_t max_rank)
{
    std::vector<AggregatedPoint> out;
    for (std::size_t rank = 1; rank <= max_rank; ++rank)
        for (const auto &r : rankings)
        {
            const auto &pair = r.at_rank(rank);
            out.push_back({r.key.distance_m, r.key.height_m, static_cast<int>(rank), pair.tx_beam_idx,
                           pair.rx_beam_idx, pair.path_loss_db, 1});
        }
    return out;
}

/// std::nullopt selects everything.
struct Selection
{
    std::optional<double> height_m;
    std::optional<int> rank;
};

inline std::string to_string(const Selection &s)
{
    return "height=" + (s.height_m ? std::to_string(*s.height_m) : std::string("all")) +
           ", rank=" + (s.rank ? std::to_string(*s.rank) : std::string("all"));
}

inline std::vector<FitPoint> to_fit_points(std::span<const AggregatedPoint> points, const Selection &sel)
{
    std::vector<FitPoint> out;
    for (const auto &p : points)
    {
        if (sel.height_m && p.height_m != *sel.height_m)
            continue;
        if (sel.rank && p.effective_rank() != *sel.rank)
            continue;
        out.push_back({p.distance_m, p.mean_path_loss_db});
    }
    if (out.empty())
        throw EmptySelectionError("empty selection: no points match " + to_string(sel));
    return out;
}

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Aggregated-schema CSV. Beam indices and trial counts are not part of the
/// schema and are not written.
inline void write_aggregated_csv(std::ostream &out, std::span<const AggregatedPoint> points)
{
    out << "distance_m,height_m,rank,path_loss_db\n";
    for (const auto &p : points)
    {
        out << format_double(p.distance_m) << ',' << format_double(p.height_m) << ',';
        if (p.rank)
            out << *p.rank;
        out << ',' << format_double(p.mean_path_loss_db) << '\n';
    }
}

} // namespace a2a
