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
#include "cli.hpp"

#include "a2a/a2a.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace a2a::cli {
namespace {

// ---- output ----------------------------------------------------------------

enum class OutputFormat
{
    kCsv,
    kJson,
    kMarkdown
};

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string cell_text(const Cell &c, OutputFormat fmt)
{
    return std::visit([fmt](const auto &v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
            return fmt == OutputFormat::kMarkdown ? "-" : "";
        else if constexpr (std::is_same_v<T, double>)
            return fmt == OutputFormat::kMarkdown ? fmt::format("{:.2f}", v) : fmt::format("{}", v);
        else if constexpr (std::is_same_v<T, long long>)
            return std::to_string(v);
        else
            return fmt == OutputFormat::kCsv ? csv_escape(v) : v;
    }, c);
}

void render(const Table &t, OutputFormat fmt, std::ostream &out)
{
    switch (fmt)
    {
    case OutputFormat::kCsv:
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << t.columns[i];
        out << '\n';
        for (const auto &row : t.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << cell_text(row[i], fmt);
            out << '\n';
        }
        break;
    case OutputFormat::kJson: {
        auto doc = nlohmann::ordered_json::array();
        for (const auto &row : t.rows)
        {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                std::visit([&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        obj[t.columns[i]] = nullptr;
                    else
                        obj[t.columns[i]] = v;
                }, row[i]);
            doc.push_back(std::move(obj));
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::kMarkdown:
        out << '|';
        for (const auto &c : t.columns)
            out << ' ' << c << " |";
        out << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << "---|";
        out << '\n';
        for (const auto &row : t.rows)
        {
            out << '|';
            for (const auto &c : row)
                out << ' ' << cell_text(c, fmt) << " |";
            out << '\n';
        }
        break;
    }
}

// ---- argument helpers --------------------------------------------------------

double parse_double(const std::string &text, const std::string &what)
{
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(text, &used);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v))
        throw UsageError(what + ": '" + text + "' is not a number");
    return v;
}

std::optional<double> parse_height(const std::string &text)
{
    if (text == "all")
        return std::nullopt;
    return parse_double(text, "--height");
}

std::optional<int> parse_rank(const std::string &text)
{
    if (text == "all")
        return std::nullopt;
    const double v = parse_double(text, "--rank");
    if (v < 1 || v != std::floor(v))
        throw UsageError("--rank: expected 'all' or a positive integer, got '" + text + "'");
    return static_cast<int>(v);
}

/// START:STOP:STEP, inclusive of STOP (to within a small tolerance).
std::vector<double> parse_range(const std::string &text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw UsageError("--distances: expected START:STOP:STEP, got '" + text + "'");
    const double start = parse_double(text.substr(0, c1), "--distances START");
    const double stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "--distances STOP");
    const double step = parse_double(text.substr(c2 + 1), "--distances STEP");
    if (!(step > 0.0))
        throw UsageError("--distances: STEP must be positive");
    if (start < kReferenceDistanceM)
        throw UsageError("--distances: START must be >= 1 m");
    if (stop < start)
        throw UsageError("--distances: STOP must be >= START");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000)
        throw UsageError("--distances: more than 10^6 distances requested");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(start + static_cast<double>(k) * step);
    return out;
}

ShadowingStatistic parse_sigma_stat(const std::string &s)
{
    return s == "rmse" ? ShadowingStatistic::kRootMeanSquare : ShadowingStatistic::kMeanSquare;
}

std::string data_dir(const std::string &flag)
{
    if (!flag.empty())
        return flag;
    if (const char *env = std::getenv("A2A_DATA_DIR"); env && *env)
        return env;
    return A2A_DEFAULT_DATA_DIR;
}

std::string fixture(const std::string &dir, const std::string &name)
{
    return (std::filesystem::path(dir) / name).string();
}

// ---- data access -------------------------------------------------------------

std::vector<BeamPairRanking> rankings_from(const std::vector<RawTrialRecord> &raw)
{
    return rank_all(to_scan_records(aggregate_trials(raw)));
}

/// Loads a measurement file as aggregated points. Raw trial files are averaged
/// per beam pair and ranked; up to kMaxMisalignmentRank ranks are kept.
std::vector<AggregatedPoint> load_points(const std::string &path, bool *beam_level = nullptr)
{
    auto set = load_csv(path);
    if (auto *agg = std::get_if<std::vector<AggregatedPoint>>(&set))
    {
        if (beam_level)
            *beam_level = false;
        return std::move(*agg);
    }
    const auto rankings = rankings_from(std::get<std::vector<RawTrialRecord>>(set));
    std::size_t depth = kMaxMisalignmentRank;
    for (const auto &r : rankings)
        depth = std::min(depth, r.size());
    if (beam_level)
        *beam_level = true;
    return ranked_points(rankings, depth);
}

FitReport fit(ModelKind kind, std::span<const FitPoint> points, FrequencyGHz f, ShadowingStatistic stat)
{
    return kind == ModelKind::kCi ? fit_ci(points, f, stat) : fit_fi(points, stat);
}

Cell delta(double computed, double published)
{
    return std::abs(computed - published);
}

// ---- commands ----------------------------------------------------------------

struct Common
{
    std::string format = "csv";
    double freq_ghz = kCarrierGHz;
    std::string data_dir;

    OutputFormat output() const
    {
        if (format == "json")
            return OutputFormat::kJson;
        if (format == "markdown")
            return OutputFormat::kMarkdown;
        return OutputFormat::kCsv;
    }
    FrequencyGHz freq() const { return FrequencyGHz{freq_ghz}; }
};

struct FitArgs
{
    std::string model = "ci";
    std::string input;
    std::string height = "all";
    std::string rank;
    std::string sigma_stat = "mse";
};

void cmd_fit(const FitArgs &a, const Common &c, std::ostream &out)
{
    const std::string path = a.input.empty() ? fixture(data_dir(c.data_dir), "fig2_measurements.csv") : a.input;
    bool beam_level = false;
    const auto points = load_points(path, &beam_level);
    // Raw beam-level input defaults to the best pair; aggregated files to every row.
    const Selection sel{parse_height(a.height), a.rank.empty() ? (beam_level ? std::optional<int>(1) : std::nullopt)
                                                               : parse_rank(a.rank)};
    const auto fit_points = to_fit_points(points, sel);
    const auto kind = a.model == "fi" ? ModelKind::kFi : ModelKind::kCi;
    const auto report = fit(kind, fit_points, c.freq(), parse_sigma_stat(a.sigma_stat));

    Table t{{"model", "intercept_db", "ple", "sigma_db", "sigma_statistic", "rmse_db", "points"}, {}};
    t.rows.push_back({std::string(kind == ModelKind::kCi ? "ci" : "fi"), intercept_db(report.model), ple(report.model),
                      sigma_db(report.model), a.sigma_stat, report.rmse_db(),
                      static_cast<long long>(report.point_count)});
    render(t, c.output(), out);
}

void cmd_compare(const std::string &distances, const Common &c, std::ostream &out)
{
    const auto ds = parse_range(distances);
    const auto f = c.freq();
    const auto ci = published::ci_model(f);
    const std::array scenarios{Scenario::kUmiStreetCanyon, Scenario::kUma, Scenario::kRma, Scenario::kInOo};

    Table t{{"distance_m", "ci_db", "umi_db", "uma_db", "rma_db", "inoo_db", "free_space_db"}, {}};
    for (double d : ds)
    {
        std::vector<Cell> row{d, ci_mean_pl(ci, DistanceM{d})};
        for (auto s : scenarios)
            row.emplace_back(pl_3gpp_los(ScenarioParams::defaults(s, f), f, DistanceM{d}));
        row.emplace_back(free_space_pl(f, DistanceM{d}));
        t.rows.push_back(std::move(row));
    }
    render(t, c.output(), out);
}

struct SampleArgs
{
    double distance = 0.0;
    long long n = 0;
    std::uint64_t seed = 0;
    std::string model = "ci";
    std::optional<double> ple;
    std::optional<double> intercept_db;
    std::optional<double> sigma_db;
};

void cmd_sample(const SampleArgs &a, const Common &c, std::ostream &out)
{
    if (a.n < 0)
        throw UsageError("--n must be >= 0");
    PathLossModel model;
    if (a.model == "fi")
    {
        auto m = published::fi_model();
        m.ple = a.ple.value_or(m.ple);
        m.intercept_db = a.intercept_db.value_or(m.intercept_db);
        m.sigma_db = a.sigma_db.value_or(m.sigma_db);
        model = m;
    }
    else
    {
        if (a.intercept_db)
            throw UsageError("--intercept-db applies to --model fi only; the CI intercept follows from --freq-ghz");
        auto m = published::ci_model(c.freq());
        m.ple = a.ple.value_or(m.ple);
        m.sigma_db = a.sigma_db.value_or(m.sigma_db);
        model = m;
    }
    const auto samples = sample_pl(model, DistanceM{a.distance}, static_cast<std::size_t>(a.n), RngSeed{a.seed});

    switch (c.output())
    {
    case OutputFormat::kJson:
        out << nlohmann::json(samples).dump() << '\n';
        break;
    case OutputFormat::kMarkdown:
        for (double v : samples)
            out << fmt::format("{:.2f}", v) << '\n';
        break;
    case OutputFormat::kCsv:
        for (double v : samples)
            out << fmt::format("{}", v) << '\n';
        break;
    }
}

struct ReportArgs
{
    std::string which = "table1";
    std::string input;
    std::string sigma_stat = "mse";
};

constexpr const char *kNeedsBeamData = "requires beam-level data";

void report_table1(const std::vector<AggregatedPoint> &pts, const Common &c, ShadowingStatistic stat, Table &t)
{
    const auto fp = to_fit_points(pts, Selection{std::nullopt, 1});
    const auto ci = fit_ci(fp, c.freq(), stat);
    const auto fi = fit_fi(fp, stat);
    const auto add = [&](const std::string &item, const std::string &q, double v, double pub) {
        t.rows.push_back({item, q, v, pub, delta(v, pub), std::string()});
    };
    add("CI fit", "intercept_db", ci.ci().intercept_db(), published::kCiAllHeights.intercept_db);
    add("CI fit", "ple", ci.ci().ple, published::kCiAllHeights.ple);
    add("CI fit", "sigma_db", ci.ci().sigma_db, published::kCiAllHeights.sigma_db);
    add("FI fit", "intercept_db", fi.fi().intercept_db, published::kFiAllHeights.intercept_db);
    add("FI fit", "ple", fi.fi().ple, published::kFiAllHeights.ple);
    add("FI fit", "sigma_db", fi.fi().sigma_db, published::kFiAllHeights.sigma_db);
}

void report_table2(const std::vector<AggregatedPoint> &pts, const Common &c, ShadowingStatistic stat, Table &t)
{
    for (const auto &col : published::kCiByHeight)
    {
        const std::optional<double> h = col.height_m > 0.0 ? std::optional<double>(col.height_m) : std::nullopt;
        const std::string item = h ? fmt::format("h={} m", *h) : std::string("all heights");
        const auto r = fit_ci(to_fit_points(pts, Selection{h, 1}), c.freq(), stat);
        t.rows.push_back({item, std::string("ple"), r.ci().ple, col.ple, delta(r.ci().ple, col.ple), std::string()});
        t.rows.push_back({item, std::string("sigma_db"), r.ci().sigma_db, col.sigma_db,
                          delta(r.ci().sigma_db, col.sigma_db), std::string()});
    }
}

void report_table3(const ReportArgs &a, const Common &c, ShadowingStatistic stat, Table &t)
{
    const auto f = c.freq();
    MisalignmentTable table;

    std::optional<MeasurementSet> input;
    if (!a.input.empty())
        input = load_csv(a.input);

    if (input && std::holds_alternative<std::vector<RawTrialRecord>>(*input))
    {
        table = build_misalignment_table(rankings_from(std::get<std::vector<RawTrialRecord>>(*input)), f, stat);
    }
    else
    {
        std::vector<AggregatedPoint> pts;
        if (input)
            pts = std::get<std::vector<AggregatedPoint>>(std::move(*input));
        else
        {
            const auto dir = data_dir(c.data_dir);
            std::vector<std::string> missing;
            bool any_rank = false;
            const auto best = fixture(dir, "fig2_measurements.csv");
            if (std::filesystem::exists(best))
                pts = load_points(best);
            else
                missing.push_back("fig2_measurements.csv");
            for (int rank = 2; rank <= kMaxMisalignmentRank; ++rank)
            {
                const auto name = fmt::format("fig6_rank{}.csv", rank);
                const auto path = fixture(dir, name);
                if (!std::filesystem::exists(path))
                {
                    missing.push_back(name);
                    continue;
                }
                any_rank = true;
                auto more = load_points(path);
                pts.insert(pts.end(), more.begin(), more.end());
            }
            if (pts.empty() || !any_rank)
            {
                std::string msg = "table3: missing fixtures in " + dir + ":";
                for (const auto &m : missing)
                    msg += " " + m;
                throw std::runtime_error(msg);
            }
        }
        for (int rank = 1; rank <= kMaxMisalignmentRank; ++rank)
        {
            std::vector<FitPoint> fp;
            try
            {
                fp = to_fit_points(pts, Selection{std::nullopt, rank});
            }
            catch (const EmptySelectionError &)
            {
                continue;
            }
            table.set(static_cast<std::size_t>(rank),
                      {rank == 1 ? fit_ci(fp, f, stat).model : fit_fi(fp, stat).model,
                       rank == 1 ? std::optional<double>(0.0) : std::nullopt});
        }
    }

    for (std::size_t rank = 1; rank <= MisalignmentTable::kRanks; ++rank)
    {
        const auto &pub = published::kByRank[rank - 1];
        const std::string item = fmt::format("rank {}", rank);
        if (!table.has(rank))
        {
            const std::array<std::pair<const char *, double>, 4> qs{{
                {"ple", pub.ple}, {"intercept_db", pub.intercept_db}, {"sigma_db", pub.sigma_db}, {"delta_deg", pub.delta_deg},
            }};
            for (const auto &[q, v] : qs)
                t.rows.push_back({item, std::string(q), std::monostate{}, v, std::monostate{}, std::string(kNeedsBeamData)});
            continue;
        }
        const auto &e = table.at(rank);
        const std::array<std::pair<const char *, std::pair<double, double>>, 3> qs{{
            {"ple", {ple(e.model), pub.ple}},
            {"intercept_db", {intercept_db(e.model), pub.intercept_db}},
            {"sigma_db", {sigma_db(e.model), pub.sigma_db}},
        }};
        for (const auto &[q, v] : qs)
            t.rows.push_back({item, std::string(q), v.first, v.second, delta(v.first, v.second), std::string()});
        if (e.delta_deg)
            t.rows.push_back({item, std::string("delta_deg"), *e.delta_deg, pub.delta_deg,
                              delta(*e.delta_deg, pub.delta_deg), std::string()});
        else
            t.rows.push_back({item, std::string("delta_deg"), std::monostate{}, pub.delta_deg, std::monostate{},
                              std::string(kNeedsBeamData)});
    }
}

void report_conclusion(const std::vector<AggregatedPoint> &pts, const Common &c, ShadowingStatistic stat, Table &t)
{
    const auto r = fit_ci(to_fit_points(pts, Selection{std::nullopt, 1}), c.freq(), stat);
    const double intercept = r.ci().intercept_db();
    const double slope = 10.0 * r.ci().ple;
    t.rows.push_back({std::string("CI model"), std::string("intercept_db"), intercept,
                      published::kConclusionInterceptDb, delta(intercept, published::kConclusionInterceptDb),
                      std::string()});
    t.rows.push_back({std::string("CI model"), std::string("slope_db_per_decade"), slope,
                      published::kConclusionSlopeDb, delta(slope, published::kConclusionSlopeDb), std::string()});
    t.rows.push_back({std::string("CI model"), std::string("sigma_db"), r.ci().sigma_db,
                      published::kConclusionSigmaDb, delta(r.ci().sigma_db, published::kConclusionSigmaDb),
                      std::string()});
}

void cmd_report(const ReportArgs &a, const Common &c, std::ostream &out)
{
    const auto stat = parse_sigma_stat(a.sigma_stat);
    Table t{{"item", "quantity", "computed", "published", "abs_delta", "note"}, {}};
    if (a.which == "table3")
    {
        report_table3(a, c, stat, t);
    }
    else
    {
        const std::string path = a.input.empty() ? fixture(data_dir(c.data_dir), "fig2_measurements.csv") : a.input;
        const auto pts = load_points(path);
        if (a.which == "table1")
            report_table1(pts, c, stat, t);
        else if (a.which == "table2")
            report_table2(pts, c, stat, t);
        else
            report_conclusion(pts, c, stat, t);
    }
    render(t, c.output(), out);
}

void cmd_misalign(const std::string &distances, const Common &c, std::ostream &out)
{
    const auto ds = parse_range(distances);
    const auto table = published::misalignment_table(c.freq());
    Table t{{"distance_m"}, {}};
    for (std::size_t rank = 1; rank <= MisalignmentTable::kRanks; ++rank)
        t.columns.push_back(fmt::format("rank{}_db", rank));
    for (double d : ds)
    {
        std::vector<Cell> row{d};
        for (std::size_t rank = 1; rank <= MisalignmentTable::kRanks; ++rank)
            row.emplace_back(misalignment_loss(table, rank, DistanceM{d}));
        t.rows.push_back(std::move(row));
    }
    render(t, c.output(), out);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Air-to-air 60 GHz path loss toolkit: fit, compare, sample and report", "a2a"};
    app.require_subcommand(1);

    Common common;
    const std::vector<std::string> formats{"csv", "json", "markdown"};
    app.add_option("--data-dir", common.data_dir, "Fixture directory (default: $A2A_DATA_DIR or the bundled data/)");

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--freq-ghz", common.freq_ghz, "Carrier frequency [GHz]")->check(CLI::PositiveNumber);
    };

    FitArgs fit_args;
    auto *fit_cmd = app.add_subcommand("fit", "Fit a CI or FI model to measurements");
    fit_cmd->add_option("--model", fit_args.model, "ci or fi")->check(CLI::IsMember({"ci", "fi"}));
    fit_cmd->add_option("--input", fit_args.input, "Measurement CSV (default: fig2_measurements.csv)");
    fit_cmd->add_option("--height", fit_args.height, "all or a height in m");
    fit_cmd->add_option("--rank", fit_args.rank, "all or a beam-pair rank (default: all; 1 for raw trial files)");
    fit_cmd->add_option("--sigma-stat", fit_args.sigma_stat, "mse (published convention) or rmse")
        ->check(CLI::IsMember({"mse", "rmse"}));
    add_common(fit_cmd);

    std::string compare_range = "6:40:1";
    auto *compare_cmd = app.add_subcommand("compare", "CI fit vs 3GPP LOS models vs free space");
    compare_cmd->add_option("--distances", compare_range, "START:STOP:STEP in m");
    add_common(compare_cmd);

    SampleArgs sample_args;
    auto *sample_cmd = app.add_subcommand("sample", "Draw path-loss samples with log-normal shadowing");
    sample_cmd->add_option("--distance", sample_args.distance, "Distance [m]")->required();
    sample_cmd->add_option("--n", sample_args.n, "Number of samples")->required();
    sample_cmd->add_option("--seed", sample_args.seed, "RNG seed");
    sample_cmd->add_option("--model", sample_args.model, "ci or fi")->check(CLI::IsMember({"ci", "fi"}));
    sample_cmd->add_option("--ple", sample_args.ple, "Path-loss exponent (default: published all-heights fit)");
    sample_cmd->add_option("--intercept-db", sample_args.intercept_db, "FI intercept [dB]");
    sample_cmd->add_option("--sigma-db", sample_args.sigma_db, "Shadowing standard deviation [dB]")
        ->check(CLI::NonNegativeNumber);
    add_common(sample_cmd);

    ReportArgs report_args;
    auto *report_cmd = app.add_subcommand("report", "Regenerate a parameter table next to the published values");
    report_cmd->add_option("--which", report_args.which, "table1, table2, table3 or conclusion")
        ->check(CLI::IsMember({"table1", "table2", "table3", "conclusion"}));
    report_cmd->add_option("--input", report_args.input, "Measurement CSV (default: bundled fixtures)");
    report_cmd->add_option("--sigma-stat", report_args.sigma_stat, "mse (published convention) or rmse")
        ->check(CLI::IsMember({"mse", "rmse"}));
    add_common(report_cmd);

    std::string misalign_range = "6:40:1";
    auto *misalign_cmd = app.add_subcommand("misalign", "Path loss of the best through ninth-best beam pair");
    misalign_cmd->add_option("--distances", misalign_range, "START:STOP:STEP in m");
    add_common(misalign_cmd);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp &)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try
    {
        if (fit_cmd->parsed())
            cmd_fit(fit_args, common, out);
        else if (compare_cmd->parsed())
            cmd_compare(compare_range, common, out);
        else if (sample_cmd->parsed())
            cmd_sample(sample_args, common, out);
        else if (report_cmd->parsed())
            cmd_report(report_args, common, out);
        else if (misalign_cmd->parsed())
            cmd_misalign(misalign_range, common, out);
    }
    catch (const UsageError &e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace a2a::cli
