// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_RESULT_IO_HPP
#define DUDE_RESULT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dude/scenario.hpp"

namespace dude {

enum class OutputFormat
{
    Csv,
    Json,
};

/// "csv" / "json"; throws ValidationError otherwise.
OutputFormat parse_output_format(std::string_view text);

/// printf("%.*g") with `significant` digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v, int significant);

/// CSV: header row, one row per index, 9 significant digits, LF endings.
std::string to_csv(const ScenarioResult& result);

/// JSON object {name, metadata, columns}. Values keep full double precision;
/// non-finite values are written as the strings "NaN", "Infinity", "-Infinity".
std::string to_json(const ScenarioResult& result);

ScenarioResult result_from_json(std::string_view text);

/// Columns of a CSV produced by to_csv (metadata is not part of the CSV).
std::vector<Column> columns_from_csv(std::string_view text);

/// Writes `<dir>/<name>.csv` plus `<dir>/<name>.meta.json`, or `<dir>/<name>.json`.
/// Each file goes to a temporary name first and is renamed into place.
/// Throws IoError when the directory cannot be created or written.
std::vector<std::filesystem::path> emit(const ScenarioResult& result,
                                        const std::filesystem::path& dir, OutputFormat format);

}  // namespace dude

#endif  // DUDE_RESULT_IO_HPP
