// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dude/errors.hpp"
#include "dude/powersave.hpp"
#include "test_util.hpp"

namespace dude {
namespace {

PowerControlConfig single_rb()
{
    PowerControlConfig cfg;
    cfg.num_rbs = 1;
    return cfg;
}

// Uplink power in dBm rebuilt from scratch.
double oracle_tx_dbm(const PowerControlConfig& cfg, double d)
{
    return std::min(cfg.pmax_dbm, cfg.p0_dbm + 10.0 * std::log10(cfg.num_rbs)
                                      + cfg.alpha * test::oracle_path_loss(d));
}

double oracle_saved_mw(const PowerControlConfig& cfg, double d_m, double d_s)
{
    return test::oracle_mw(oracle_tx_dbm(cfg, d_m)) - test::oracle_mw(oracle_tx_dbm(cfg, d_s));
}

TEST(PowerRatio, Examples)
{
    const auto cfg = single_rb();
    EXPECT_TRUE(test::rel_close(power_ratio(50.0, 200.0, cfg), 0.0544094102, 1e-9));
    EXPECT_DOUBLE_EQ(power_ratio(100.0, 100.0, cfg), 1.0);
}

TEST(PowerRatio, LiteralExponentCarriesP0)
{
    auto cfg = single_rb();
    cfg.mode = FormulaMode::PaperLiteral;
    EXPECT_TRUE(test::rel_close(power_ratio(50.0, 200.0, cfg), std::pow(0.25, 3.0 * 0.7 * -80.0), 1e-12));
}

TEST(PowerSaved, HandExample)
{
    const auto cfg = single_rb();
    EXPECT_NEAR(oracle_tx_dbm(cfg, 200.0), -7.17837, 1e-5);
    EXPECT_NEAR(power_saved_mw(200.0, 50.0, cfg), 0.181078, 1e-6);
}

TEST(PowerSaved, ZeroAtRegionEdge)
{
    EXPECT_EQ(power_saved_mw(300.0, 300.0, PowerControlConfig{}), 0.0);
}

TEST(PowerSaved, BothCappedSavesNothing)
{
    auto cfg = single_rb();
    cfg.pmax_dbm = -20.0;
    EXPECT_EQ(power_saved_mw(800.0, 400.0, cfg), 0.0);
}

TEST(PowerSaved, RejectsDevicesCloserToMacro)
{
    EXPECT_THROW(power_saved_mw(100.0, 200.0, PowerControlConfig{}), PreconditionError);
    EXPECT_THROW(power_saved_mw(100.0, 0.0, PowerControlConfig{}), DomainError);
}

TEST(PowerSaved, MatchesLinearDifferenceOnRandomDevices)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dm(5.0, 2000.0);
    std::uniform_real_distribution<double> frac(1e-3, 1.0);
    std::uniform_real_distribution<double> alpha(0.3, 1.0);
    std::uniform_real_distribution<double> p0(-100.0, -60.0);
    for (int i = 0; i < 10000; ++i) {
        PowerControlConfig cfg;
        cfg.alpha = alpha(rng);
        cfg.p0_dbm = p0(rng);
        cfg.num_rbs = 1 + i % 25;
        const double d_m = dm(rng);
        const double d_s = d_m * frac(rng);
        const double saved = power_saved_mw(d_m, d_s, cfg);
        const double oracle = oracle_saved_mw(cfg, d_m, d_s);
        EXPECT_GE(saved, 0.0);
        EXPECT_LE(std::abs(saved - oracle), 1e-12 * std::max(1.0, std::abs(oracle)));
    }
}

TEST(PowerSaved, GrowsAsDeviceApproachesSmallCell)
{
    const auto cfg = single_rb();
    double prev = -1.0;
    for (double d_s = 400.0; d_s > 1.0; d_s -= 7.0) {
        const double saved = power_saved_mw(400.0, d_s, cfg);
        EXPECT_GE(saved, prev);
        prev = saved;
    }
}

TEST(MobileTotal, SingleTransmissionIsStaticSaving)
{
    const auto cfg = single_rb();
    const MobileTransitSpec spec{600.0, 300.0, 10.0, 5.0, 1};
    EXPECT_EQ(mobile_total_saved_mw(spec, cfg, 4.6416).total_mw, power_saved_mw(600.0, 300.0, cfg));
}

TEST(MobileTotal, StationaryDeviceRepeatsExactly)
{
    const auto cfg = single_rb();
    const MobileTransitSpec spec{600.0, 300.0, 0.0, 5.0, 8};
    EXPECT_EQ(mobile_total_saved_mw(spec, cfg, 4.6416).total_mw,
              8.0 * power_saved_mw(600.0, 300.0, cfg));
}

TEST(MobileTotal, FourStepOracle)
{
    const auto cfg = single_rb();
    const MobileTransitSpec spec{600.0, 300.0, 10.0, 5.0, 4};
    const double expected = oracle_saved_mw(cfg, 600.0, 300.0) + oracle_saved_mw(cfg, 650.0, 250.0)
                            + oracle_saved_mw(cfg, 700.0, 200.0) + oracle_saved_mw(cfg, 750.0, 150.0);
    const auto got = mobile_total_saved_mw(spec, cfg, 4.6416);
    EXPECT_TRUE(test::rel_close(got.total_mw, expected, 1e-12));
    // 750 m vs 4.6416 * 150 m = 696 m: the last transmission left the region.
    EXPECT_EQ(got.steps_outside_region, 1u);
}

TEST(MobileTotal, RejectsPassingTheSmallCell)
{
    const MobileTransitSpec spec{600.0, 100.0, 10.0, 5.0, 3};
    EXPECT_THROW(mobile_total_saved_mw(spec, single_rb(), 4.6416), DomainError);
}

TEST(MobileTotal, ValidatesSpec)
{
    EXPECT_THROW(mobile_total_saved_mw({600.0, 300.0, -1.0, 5.0, 2}, single_rb(), 4.6), ValidationError);
    EXPECT_THROW(mobile_total_saved_mw({600.0, 300.0, 1.0, 0.0, 2}, single_rb(), 4.6), ValidationError);
    EXPECT_THROW(mobile_total_saved_mw({600.0, 300.0, 1.0, 5.0, 0}, single_rb(), 4.6), ValidationError);
}

TEST(StaticTotal, SumsPerDeviceSavings)
{
    const auto cfg = single_rb();
    std::vector<StaticDevice> devs;
    double expected = 0.0;
    for (int i = 1; i <= 500; ++i) {
        const double d_m = 100.0 + i;
        const double d_s = d_m * 0.5;
        devs.push_back({d_m, d_s});
        expected += oracle_saved_mw(cfg, d_m, d_s);
    }
    EXPECT_TRUE(test::rel_close(static_total_saved_mw(devs, cfg), expected, 1e-12));
    EXPECT_EQ(static_total_saved_mw({}, cfg), 0.0);
}

TEST(StaticTotal, RequiresStrictRegionMembership)
{
    const std::vector<StaticDevice> devs{{200.0, 100.0}, {150.0, 150.0}};
    EXPECT_THROW(static_total_saved_mw(devs, single_rb()), PreconditionError);
}

TEST(Literal, ExponentForms)
{
    const double pl = test::oracle_path_loss(200.0);
    EXPECT_TRUE(test::rel_close(literal::tx_power_exponent_form(-80.0, 0.7, 200.0),
                                std::pow(10.0, -8.0 * 0.7 * pl), 1e-12));
    EXPECT_TRUE(test::rel_close(literal::rx_power_exponent_form(-80.0, 0.7, 200.0),
                                std::pow(10.0, -8.0 * -0.3 * pl), 1e-12));
}

TEST(Literal, SavedUsesLiteralClosedForm)
{
    auto cfg = single_rb();
    cfg.mode = FormulaMode::PaperLiteral;
    const double p_tm = literal::tx_power_exponent_form(cfg.p0_dbm, cfg.alpha, 200.0);
    const double expected = p_tm * (1.0 - power_ratio(50.0, 200.0, cfg));
    EXPECT_EQ(power_saved_mw(200.0, 50.0, cfg), expected);
}

}  // namespace
}  // namespace dude
