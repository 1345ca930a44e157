// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "dude/calc.hpp"
#include "dude/errors.hpp"
#include "test_util.hpp"

namespace dude {
namespace {

CalcValue calc(std::string_view name, std::vector<std::string> args, const ScenarioConfig& cfg = {})
{
    return run_calc(name, args, cfg);
}

TEST(Calc, Values)
{
    EXPECT_NEAR(calc("path-loss", {"1000"}).value, 125.0, 1e-12);
    EXPECT_TRUE(test::rel_close(calc("k", {"40", "20"}).value, 4.641588833612778, 1e-12));
    EXPECT_TRUE(test::rel_close(calc("zone-radius", {"23", "-90"}).value, 398.1071705534973, 1e-12));
    EXPECT_TRUE(test::rel_close(calc("power-ratio", {"50", "200", "0.7"}).value, 0.05440941021, 1e-9));
    EXPECT_NEAR(calc("excess-area", {"100", "37.8929"}).value, 26904.99, 0.1);
    EXPECT_NEAR(calc("sinr", {"-70", "-100"}).value, 30.0, 1e-12);
    EXPECT_NEAR(calc("spectral-efficiency", {"0"}).value, 1.0, 1e-12);
}

TEST(Calc, UsesConfiguredPowerControl)
{
    ScenarioConfig cfg;
    cfg.pc.num_rbs = 1;
    EXPECT_NEAR(calc("power-saved", {"200", "50"}, cfg).value, 0.181078, 1e-6);
    EXPECT_NEAR(calc("uplink-tx", {"100"}, cfg).value, -10.0, 1e-12);
    cfg.pc.mode = FormulaMode::PaperLiteral;
    EXPECT_EQ(calc("uplink-tx", {"100"}, cfg).mode, FormulaMode::PaperLiteral);
}

TEST(Calc, Errors)
{
    EXPECT_THROW(calc("nope", {}), ValidationError);
    EXPECT_THROW(calc("k", {"40"}), ValidationError);
    EXPECT_THROW(calc("path-loss", {"ten"}), ValidationError);
    EXPECT_THROW(calc("path-loss", {"0"}), DomainError);
    EXPECT_THROW(calc("zone-radius", {"0", "-30"}), DegenerateZoneError);
}

TEST(Calc, Format)
{
    EXPECT_EQ(format_calc({398.1071705534973, "m", FormulaMode::DbConsistent}),
              "398.1071706 m\tmode=db-consistent");
    EXPECT_EQ(format_calc({4.641588833612778, "", FormulaMode::PaperLiteral}),
              "4.641588834\tmode=paper-literal");
}

TEST(Calc, EveryCalculatorIsListed)
{
    EXPECT_EQ(calculators().size(), 9u);
    for (const auto& c : calculators()) EXPECT_FALSE(c.usage.empty());
}

}  // namespace
}  // namespace dude
