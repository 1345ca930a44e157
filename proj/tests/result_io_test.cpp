// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "dude/errors.hpp"
#include "dude/result_io.hpp"
#include "test_util.hpp"

namespace dude {
namespace {

namespace fs = std::filesystem;

ScenarioResult sample()
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    return {"sample",
            {{"campaign", "sample"}, {"seed", "1"}},
            {{"x", {0.1, 1.0 / 3.0, -2.5e-7}}, {"y", {nan, inf, -inf}}}};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(FormatNumber, Examples)
{
    EXPECT_EQ(format_number(0.1, 9), "0.1");
    EXPECT_EQ(format_number(1.0 / 3.0, 9), "0.333333333");
    EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN(), 9), "nan");
    EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity(), 9), "-inf");
}

TEST(Csv, LayoutAndRoundTrip)
{
    const auto r = sample();
    const std::string csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,y");
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    const auto cols = columns_from_csv(csv);
    ASSERT_EQ(cols.size(), 2u);
    for (std::size_t j = 0; j < 3; ++j)
        EXPECT_TRUE(test::rel_close(cols[0].values[j], r.columns[0].values[j], 1e-8));
    EXPECT_TRUE(std::isnan(cols[1].values[0]));
    EXPECT_EQ(cols[1].values[1], std::numeric_limits<double>::infinity());
    EXPECT_EQ(cols[1].values[2], -std::numeric_limits<double>::infinity());
}

TEST(Json, ExactRoundTrip)
{
    const auto r = sample();
    const auto back = result_from_json(to_json(r));
    EXPECT_EQ(back.name, r.name);
    EXPECT_EQ(back.metadata, r.metadata);
    ASSERT_EQ(back.columns.size(), 2u);
    EXPECT_EQ(back.columns[0].values, r.columns[0].values);
    EXPECT_TRUE(std::isnan(back.columns[1].values[0]));
    EXPECT_EQ(back.columns[1].values[1], std::numeric_limits<double>::infinity());
    EXPECT_NE(to_json(r).find("\"NaN\""), std::string::npos);
}

TEST(Json, RejectsMalformedInput)
{
    EXPECT_THROW(result_from_json("{not json"), Error);
    EXPECT_THROW(result_from_json("[1, 2]"), Error);
}

TEST(Emit, WritesFilesAtomically)
{
    const fs::path dir = fs::temp_directory_path() / "dude_result_io_test" / "nested";
    fs::remove_all(dir.parent_path());
    const auto r = sample();

    const auto csv_paths = emit(r, dir, OutputFormat::Csv);
    ASSERT_EQ(csv_paths.size(), 2u);
    EXPECT_EQ(csv_paths[0].filename(), "sample.csv");
    EXPECT_EQ(csv_paths[1].filename(), "sample.meta.json");
    EXPECT_EQ(slurp(csv_paths[0]), to_csv(r));

    const auto json_paths = emit(r, dir, OutputFormat::Json);
    ASSERT_EQ(json_paths.size(), 1u);
    EXPECT_EQ(slurp(json_paths[0]), to_json(r));

    for (const auto& e : fs::directory_iterator(dir))
        EXPECT_NE(e.path().extension(), ".tmp") << e.path();
    fs::remove_all(dir.parent_path());
}

TEST(Emit, UnwritableDirectoryIsIoError)
{
    const fs::path file = fs::temp_directory_path() / "dude_result_io_blocker";
    { std::ofstream(file) << "x"; }
    EXPECT_THROW(emit(sample(), file / "sub", OutputFormat::Csv), IoError);
    fs::remove(file);
}

TEST(OutputFormat, Parse)
{
    EXPECT_EQ(parse_output_format("csv"), OutputFormat::Csv);
    EXPECT_EQ(parse_output_format("json"), OutputFormat::Json);
    EXPECT_THROW(parse_output_format("xml"), ValidationError);
}

}  // namespace
}  // namespace dude
