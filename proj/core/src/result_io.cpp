// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/result_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <system_error>

#include "dude/errors.hpp"
#include "json.hpp"

namespace dude {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ValidationError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_number(double v, int significant)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

std::string to_csv(const ScenarioResult& result)
{
    result.validate();
    std::string out;
    for (std::size_t c = 0; c < result.columns.size(); ++c) {
        if (c) out += ',';
        out += result.columns[c].name;
    }
    out += '\n';
    for (std::size_t r = 0; r < result.rows(); ++r) {
        for (std::size_t c = 0; c < result.columns.size(); ++c) {
            if (c) out += ',';
            out += format_number(result.columns[c].values[r], 9);
        }
        out += '\n';
    }
    return out;
}

namespace {

ojson encode_value(double v)
{
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
    return v;
}

double decode_value(const ojson& j)
{
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
        if (s == "Infinity") return std::numeric_limits<double>::infinity();
        if (s == "-Infinity") return -std::numeric_limits<double>::infinity();
    }
    throw Error("unexpected JSON column value: " + j.dump());
}

double parse_cell(std::string_view cell)
{
    double v = 0.0;
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw Error("malformed CSV number '" + std::string(cell) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto p = line.find(sep, start);
        out.push_back(line.substr(start, p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

void write_atomically(const fs::path& path, const std::string& content)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path.string() + "'");
    }
}

ojson metadata_json(const ScenarioResult& result)
{
    ojson meta = ojson::object();
    for (const auto& [k, v] : result.metadata) meta[k] = v;
    return meta;
}

}  // namespace

std::string to_json(const ScenarioResult& result)
{
    result.validate();
    ojson j;
    j["name"] = result.name;
    j["metadata"] = metadata_json(result);
    ojson cols = ojson::object();
    for (const auto& c : result.columns) {
        ojson arr = ojson::array();
        for (double v : c.values) arr.push_back(encode_value(v));
        cols[c.name] = std::move(arr);
    }
    j["columns"] = std::move(cols);
    return j.dump(1) + "\n";
}

ScenarioResult result_from_json(std::string_view text)
{
    ScenarioResult r;
    try {
        const ojson j = ojson::parse(text);
        r.name = j.at("name").get<std::string>();
        for (const auto& [k, v] : j.at("metadata").items()) r.metadata.emplace_back(k, v.get<std::string>());
        for (const auto& [k, v] : j.at("columns").items()) {
            Column c{k, {}};
            for (const auto& x : v) c.values.push_back(decode_value(x));
            r.columns.push_back(std::move(c));
        }
    } catch (const ojson::exception& e) {
        throw Error(std::string("malformed result JSON: ") + e.what());
    }
    r.validate();
    return r;
}

std::vector<Column> columns_from_csv(std::string_view text)
{
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw Error("CSV has no header row");

    std::vector<Column> cols;
    if (!lines.front().empty())
        for (auto name : split(lines.front(), ',')) cols.push_back({std::string(name), {}});
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i], ',');
        if (cells.size() != cols.size())
            throw Error("CSV row " + std::to_string(i) + " has " + std::to_string(cells.size())
                        + " cells, expected " + std::to_string(cols.size()));
        for (std::size_t c = 0; c < cells.size(); ++c) cols[c].values.push_back(parse_cell(cells[c]));
    }
    return cols;
}

std::vector<fs::path> emit(const ScenarioResult& result, const fs::path& dir, OutputFormat format)
{
    result.validate();
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory '" + dir.string() + "'");

    std::vector<fs::path> written;
    if (format == OutputFormat::Csv) {
        const fs::path csv = dir / (result.name + ".csv");
        const fs::path meta = dir / (result.name + ".meta.json");
        ojson j;
        j["name"] = result.name;
        j["metadata"] = metadata_json(result);
        write_atomically(csv, to_csv(result));
        write_atomically(meta, j.dump(1) + "\n");
        written = {csv, meta};
    } else {
        const fs::path json = dir / (result.name + ".json");
        write_atomically(json, to_json(result));
        written = {json};
    }
    return written;
}

}  // namespace dude
