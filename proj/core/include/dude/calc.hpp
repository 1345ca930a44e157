// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_CALC_HPP
#define DUDE_CALC_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dude/scenario.hpp"

namespace dude {

/// Result of a single-formula calculator.
struct CalcValue
{
    double value = 0.0;
    std::string unit; ///< empty for dimensionless values
    FormulaMode mode = FormulaMode::DbConsistent;
};

struct CalcInfo
{
    std::string_view name;
    std::string_view usage;
};

/// Names and argument lists of every calculator.
std::span<const CalcInfo> calculators();

/// Evaluates calculator `name` on numeric `args`. Values not given on the
/// command line (power-control parameters) come from `cfg`.
/// Throws ValidationError for an unknown name or wrong argument count.
CalcValue run_calc(std::string_view name, std::span<const std::string> args,
                   const ScenarioConfig& cfg);

/// "<value>[ <unit>]\tmode=<mode>", value with 10 significant digits.
std::string format_calc(const CalcValue& v);

}  // namespace dude

#endif  // DUDE_CALC_HPP
