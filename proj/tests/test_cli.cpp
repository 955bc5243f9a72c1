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
#include <catch2/catch_amalgamated.hpp>

#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using Catch::Approx;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = a2a::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<std::string> row;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ','))
            row.push_back(field);
        if (!line.empty() && line.back() == ',')
            row.emplace_back();
        rows.push_back(row);
    }
    return rows;
}

std::filesystem::path scratch_dir(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / ("a2a_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

double sig10(double v)
{
    if (v == 0.0)
        return 0.0;
    const double scale = std::pow(10.0, 9 - std::floor(std::log10(std::abs(v))));
    return std::round(v * scale) / scale;
}

} // namespace

TEST_CASE("fit")
{
    auto r = run({"fit", "--model", "ci"});
    REQUIRE(r.code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"model", "intercept_db", "ple", "sigma_db", "sigma_statistic", "rmse_db", "points"});
    CHECK(std::stod(rows[1][1]) == Approx(68.0800188717464).margin(1e-9));
    CHECK(std::stod(rows[1][2]) == Approx(2.251443525077).margin(1e-9));
    CHECK(std::stod(rows[1][3]) == Approx(3.559220120378).margin(1e-9));
    CHECK(rows[1][4] == "mse");
    CHECK(rows[1][6] == "27");

    r = run({"fit", "--model", "ci", "--sigma-stat", "rmse"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(parse_csv(r.out)[1][3]) == Approx(1.886589547405).margin(1e-9));

    r = run({"fit", "--model", "fi"});
    REQUIRE(r.code == 0);
    rows = parse_csv(r.out);
    CHECK(std::stod(rows[1][1]) == Approx(67.026238500908).margin(1e-9));
    CHECK(std::stod(rows[1][2]) == Approx(2.329118878575).margin(1e-9));

    r = run({"fit", "--height", "12"});
    REQUIRE(r.code == 0);
    rows = parse_csv(r.out);
    CHECK(std::stod(rows[1][2]) == Approx(2.252716240138).margin(1e-9));
    CHECK(rows[1][6] == "12");

    r = run({"fit", "--input", std::string(A2A_TEST_DATA_DIR) + "/fig6_rank2.csv", "--model", "fi"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(parse_csv(r.out)[1][1]) == Approx(69.682001285511).margin(1e-9));
}

TEST_CASE("fit errors")
{
    auto r = run({"fit", "--height", "99"});
    CHECK(r.code == 1);
    CHECK(r.err.find("empty selection") != std::string::npos);
    CHECK(r.out.empty());

    r = run({"fit", "--model", "xx"});
    CHECK(r.code == 2);

    r = run({"fit", "--input", "/nonexistent/file.csv"});
    CHECK(r.code == 1);

    const auto dir = scratch_dir("bad_row");
    const auto bad = (dir / "bad.csv").string();
    std::ofstream(bad) << "distance_m,height_m,rank,path_loss_db\n6,12,,90\n-6,12,,91\n";
    r = run({"fit", "--input", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("row 2") != std::string::npos);
    CHECK(r.err.find("distance_m") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("compare")
{
    auto r = run({"compare"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 36);
    CHECK(rows[0] == std::vector<std::string>{"distance_m", "ci_db", "umi_db", "uma_db", "rma_db", "inoo_db", "free_space_db"});
    const std::vector<double> at6{85.60, 84.46, 80.84, 83.41, 81.58, 83.64};
    for (std::size_t k = 0; k < at6.size(); ++k)
        CHECK(std::stod(rows[1][k + 1]) == Approx(at6[k]).margin(0.02));

    r = run({"compare", "--distances", "42:42:1"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(parse_csv(r.out)[1][6]) == Approx(100.545).margin(0.01));

    CHECK(run({"compare", "--distances", "6:40:0"}).code == 2);
    CHECK(run({"compare", "--distances", "6:40:-1"}).code == 2);
    CHECK(run({"compare", "--distances", "0.5:40:1"}).code == 2);
    CHECK(run({"compare", "--distances", "40:6:1"}).code == 2);
    CHECK(run({"compare", "--distances", "6-40"}).code == 2);
}

TEST_CASE("sample")
{
    auto r = run({"sample", "--distance", "20", "--n", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    const auto a = run({"sample", "--distance", "20", "--n", "50", "--seed", "7"});
    const auto b = run({"sample", "--distance", "20", "--n", "50", "--seed", "7"});
    const auto c = run({"sample", "--distance", "20", "--n", "50", "--seed", "8"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);

    r = run({"sample", "--distance", "20", "--n", "100000", "--seed", "1"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    double v, sum = 0.0, sum2 = 0.0;
    std::size_t n = 0;
    while (in >> v)
    {
        sum += v;
        sum2 += v * v;
        ++n;
    }
    REQUIRE(n == 100000);
    const double mean = sum / n;
    const double sd = std::sqrt((sum2 - n * mean * mean) / (n - 1));
    CHECK(sd >= 3.49);
    CHECK(sd <= 3.63);
    CHECK(mean == Approx(68.08 + 22.5 * std::log10(20.0)).margin(0.05));

    CHECK(run({"sample", "--distance", "20", "--n", "-1"}).code == 2);
    CHECK(run({"sample", "--distance", "0.5", "--n", "3"}).code == 1);
    CHECK(run({"sample", "--distance", "20"}).code == 2);
    CHECK(run({"sample", "--distance", "20", "--n", "3", "--intercept-db", "60"}).code == 2);
    CHECK(run({"sample", "--distance", "20", "--n", "3", "--model", "fi", "--intercept-db", "60"}).code == 0);
}

TEST_CASE("report")
{
    auto r = run({"report", "--which", "conclusion"});
    REQUIRE(r.code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"item", "quantity", "computed", "published", "abs_delta", "note"});
    CHECK(std::stod(rows[1][2]) == Approx(68.08).margin(0.01));
    CHECK(std::stod(rows[2][2]) == Approx(22.5).margin(0.1));

    r = run({"report", "--which", "table1"});
    REQUIRE(r.code == 0);
    rows = parse_csv(r.out);
    REQUIRE(rows.size() == 7);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(std::stod(rows[i][4]) < 0.06);

    r = run({"report", "--which", "table2"});
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out).size() == 9);

    r = run({"report", "--which", "table3"});
    REQUIRE(r.code == 0);
    rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1 + 9 * 4);
    int needs_beam = 0;
    for (const auto &row : rows)
        if (row.size() == 6 && row[5] == "requires beam-level data")
            ++needs_beam;
    // ranks 4..8 entirely, plus displacement of ranks 2, 3, 9
    CHECK(needs_beam == 5 * 4 + 3);
    CHECK(rows[5][0] == "rank 2");
    CHECK(std::stod(rows[6][2]) == Approx(69.682001285511).margin(1e-9));

    CHECK(run({"report", "--which", "table4"}).code == 2);
}

TEST_CASE("report with missing fixtures")
{
    const auto empty = scratch_dir("empty");
    auto r = run({"--data-dir", empty.string(), "report", "--which", "table3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("fig2_measurements.csv") != std::string::npos);
    CHECK(r.err.find("fig6_rank2.csv") != std::string::npos);

    r = run({"--data-dir", empty.string(), "report", "--which", "table1"});
    CHECK(r.code == 1);

    const auto partial = scratch_dir("partial");
    std::filesystem::copy_file(std::string(A2A_TEST_DATA_DIR) + "/fig2_measurements.csv", partial / "fig2_measurements.csv");
    r = run({"--data-dir", partial.string(), "report", "--which", "table3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("fig6_rank9.csv") != std::string::npos);
}

TEST_CASE("data directory from the environment")
{
    const auto dir = scratch_dir("env");
    std::ofstream(dir / "fig2_measurements.csv") << "distance_m,height_m,rank,path_loss_db\n1,6,,70\n10,6,,90\n100,6,,110\n";
    ::setenv("A2A_DATA_DIR", dir.string().c_str(), 1);
    const auto r = run({"fit", "--model", "fi"});
    ::unsetenv("A2A_DATA_DIR");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(std::stod(rows[1][1]) == Approx(70.0).margin(1e-9));
    CHECK(std::stod(rows[1][2]) == Approx(2.0).margin(1e-9));
    CHECK(rows[1][6] == "3");

    // flag wins over the environment
    ::setenv("A2A_DATA_DIR", dir.string().c_str(), 1);
    const auto flagged = run({"--data-dir", A2A_TEST_DATA_DIR, "fit"});
    ::unsetenv("A2A_DATA_DIR");
    CHECK(parse_csv(flagged.out)[1][6] == "27");
}

TEST_CASE("json output matches csv")
{
    for (const std::vector<std::string> &cmd : {std::vector<std::string>{"report", "--which", "table3"},
                                                std::vector<std::string>{"compare", "--distances", "6:40:2"},
                                                std::vector<std::string>{"fit", "--model", "fi"},
                                                std::vector<std::string>{"misalign", "--distances", "10:30:10"}})
    {
        auto csv_args = cmd, json_args = cmd;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto c = run(csv_args);
        const auto j = run(json_args);
        REQUIRE(c.code == 0);
        REQUIRE(j.code == 0);
        const auto rows = parse_csv(c.out);
        const auto doc = nlohmann::json::parse(j.out);
        REQUIRE(doc.is_array());
        REQUIRE(doc.size() + 1 == rows.size());
        const auto &header = rows[0];
        for (std::size_t i = 0; i < doc.size(); ++i)
            for (std::size_t k = 0; k < header.size(); ++k)
            {
                const auto &cell = doc[i].at(header[k]);
                const auto &text = rows[i + 1][k];
                if (cell.is_null())
                    CHECK(text.empty());
                else if (cell.is_number())
                    CHECK(sig10(cell.get<double>()) == sig10(std::stod(text)));
                else
                    CHECK(cell.get<std::string>() == text);
            }
    }

    const auto md = run({"fit", "--format", "markdown"});
    REQUIRE(md.code == 0);
    CHECK(md.out.find("| model |") != std::string::npos);
    CHECK(md.out.find("2.25") != std::string::npos);
}

TEST_CASE("misalign")
{
    const auto r = run({"misalign", "--distances", "10:10:1"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].size() == 10);
    CHECK(std::stod(rows[1][1]) == Approx(68.0800188717464 + 22.5).margin(1e-9));
    for (std::size_t k = 2; k < rows[1].size(); ++k)
        CHECK(std::stod(rows[1][k]) > std::stod(rows[1][1]));
}

TEST_CASE("outputs are byte-identical across runs")
{
    for (const std::vector<std::string> &cmd :
         {std::vector<std::string>{"report", "--which", "table1"}, std::vector<std::string>{"compare"},
          std::vector<std::string>{"report", "--which", "table3", "--format", "json"}})
    {
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
