// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "dude/errors.hpp"
#include "dude/scenario.hpp"
#include "test_util.hpp"

namespace dude {
namespace {

double meta_number(const ScenarioResult& r, const std::string& key)
{
    const std::string* v = r.meta(key);
    if (v == nullptr) throw std::runtime_error("missing metadata " + key);
    return std::stod(*v);
}

void expect_same(const ScenarioResult& a, const ScenarioResult& b)
{
    EXPECT_EQ(a.metadata, b.metadata);
    ASSERT_EQ(a.columns.size(), b.columns.size());
    for (std::size_t i = 0; i < a.columns.size(); ++i) {
        EXPECT_EQ(a.columns[i].name, b.columns[i].name);
        ASSERT_EQ(a.columns[i].values.size(), b.columns[i].values.size());
        for (std::size_t j = 0; j < a.columns[i].values.size(); ++j) {
            const double x = a.columns[i].values[j];
            const double y = b.columns[i].values[j];
            EXPECT_TRUE(x == y || (std::isnan(x) && std::isnan(y)));
        }
    }
}

TEST(ScenarioResult, Validation)
{
    ScenarioResult r{"t", {}, {{"a", {1.0, 2.0}}, {"b", {3.0, 4.0}}}};
    EXPECT_NO_THROW(r.validate());
    EXPECT_EQ(r.rows(), 2u);
    EXPECT_THROW(r.column("c"), Error);
    r.columns.push_back({"a", {5.0, 6.0}});
    EXPECT_THROW(r.validate(), Error);
    r.columns.back() = {"c", {1.0}};
    EXPECT_THROW(r.validate(), Error);
}

TEST(DecouplingTimeCampaign, CdfsAndOrdering)
{
    const ScenarioConfig cfg;
    const auto r = run_decoupling_time_campaign(cfg);
    for (const std::string label : {"20kmh", "30kmh", "50kmh"}) {
        const auto& t = r.column("time_s_" + label).values;
        const auto& f = r.column("cdf_" + label).values;
        ASSERT_EQ(t.size(), 100u);
        EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
        EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
        EXPECT_EQ(f.back(), 1.0);
        EXPECT_GE(t.front(), 0.0);
        EXPECT_EQ(meta_number(r, "timeouts_" + label), 0.0);
    }
    EXPECT_GT(meta_number(r, "mean_s_20kmh"), meta_number(r, "mean_s_30kmh"));
    EXPECT_GT(meta_number(r, "mean_s_30kmh"), meta_number(r, "mean_s_50kmh"));
    const double pooled = meta_number(r, "pooled_median_s");
    EXPECT_GE(pooled, 5.0);
    EXPECT_LE(pooled, 200.0);
}

TEST(DecouplingTimeCampaign, CommonRandomNumbersAcrossSpeeds)
{
    // Every class replays the same walk and the same standardized speed draws,
    // so decoupling times scale exactly with the inverse speed mean.
    ScenarioConfig cfg;
    cfg.mobility.devices_per_class = 40;
    const auto r = run_decoupling_time_campaign(cfg);
    const auto& slow = r.column("time_s_20kmh").values;
    const auto& fast = r.column("time_s_50kmh").values;
    ASSERT_EQ(slow.size(), fast.size());
    for (std::size_t i = 0; i < slow.size(); ++i)
        EXPECT_NEAR(slow[i], 2.5 * fast[i], 1e-9 * std::max(1.0, slow[i]));
}

TEST(DecouplingTimeCampaign, Deterministic)
{
    ScenarioConfig cfg;
    cfg.mobility.devices_per_class = 30;
    expect_same(run_decoupling_time_campaign(cfg), run_decoupling_time_campaign(cfg));
    ScenarioConfig other = cfg;
    other.seed = 54321;
    EXPECT_NE(run_decoupling_time_campaign(cfg).column("time_s_20kmh").values,
              run_decoupling_time_campaign(other).column("time_s_20kmh").values);
}

TEST(Transit, LandmarksMatchClosedForm)
{
    const ScenarioConfig cfg;
    const auto lm = transit_landmarks(cfg);
    const double k = dl_constant_k(cfg.layout);
    EXPECT_EQ(lm.a_m, 50.0);
    EXPECT_EQ(lm.d_m, 490.0);
    EXPECT_NEAR(lm.b_m, 250.0, 1e-3);
    EXPECT_NEAR(lm.c_m, 500.0 * k / (1.0 + k), 1e-3);
}

TEST(Transit, DecoupledNeverWorseInsideRegion)
{
    const ScenarioConfig cfg;
    const auto r = run_transit_campaign(cfg);
    const auto lm = transit_landmarks(cfg);
    const auto& s = r.column("distance_m").values;
    const auto& cse = r.column("coupled_se").values;
    const auto& dse = r.column("decoupled_se").values;
    const auto& ctx = r.column("coupled_target_tx_dbm").values;
    const auto& dtx = r.column("decoupled_target_tx_dbm").values;
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_NE(std::find(s.begin(), s.end(), lm.b_m), s.end());
    EXPECT_NE(std::find(s.begin(), s.end(), lm.c_m), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] > lm.b_m && s[j] < lm.c_m) {
            EXPECT_GT(dse[j], cse[j]) << s[j];
            EXPECT_LT(dtx[j], ctx[j]) << s[j];
        } else if (s[j] < lm.b_m || s[j] >= lm.c_m) {
            EXPECT_EQ(dse[j], cse[j]);
            EXPECT_EQ(dtx[j], ctx[j]);
        }
    }
    const auto& t30 = r.column("time_s_30kmh").values;
    EXPECT_NEAR(t30.back(), 440.0 / (30.0 / 3.6), 1e-9);
    EXPECT_EQ(r.column("association").values.front(), 0.0);
    EXPECT_EQ(r.column("association").values.back(), 2.0);
}

TEST(Transit, InterfererKeepsCampaignRunning)
{
    ScenarioConfig cfg;
    cfg.transit.interferer = true;
    const auto r = run_transit_campaign(cfg);
    EXPECT_GT(r.rows(), 400u);
}

TEST(Transit, PathThatMissesTheRegionIsAnAssertion)
{
    ScenarioConfig cfg;
    cfg.transit.end_m = 200.0;
    EXPECT_THROW(transit_landmarks(cfg), AssertionFailure);
}

TEST(ZoneCampaign, DecoupledZonesAreSmaller)
{
    const ScenarioConfig cfg;
    const auto r = run_zone_campaign(cfg);
    ASSERT_EQ(r.rows(), 4u);
    const auto& a = r.column("radius_coupled_m").values;
    const auto& b = r.column("radius_decoupled_m").values;
    const auto& dist = r.column("device_distance_m").values;
    const auto& lam = r.column("lambda_dbm").values;
    for (std::size_t j = 0; j < r.rows(); ++j) {
        EXPECT_LT(b[j], a[j]);
        EXPECT_TRUE(test::rel_close(a[j], std::pow(10.0, (r.column("tx_coupled_dbm").values[j] - lam[j] - 35.0) / 30.0), 1e-12));
    }
    // Deeper into the region means a smaller decoupled zone at the same threshold.
    EXPECT_EQ(dist[0], 600.0);
    EXPECT_EQ(dist[2], 730.0);
    EXPECT_LT(b[2], b[0]);
    EXPECT_LT(b[3], b[1]);
    // -95 dBm gives larger zones than -90 dBm.
    EXPECT_GT(a[1], a[0]);
    EXPECT_GT(b[1], b[0]);
}

TEST(ZoneCampaign, DeviceOutsideRegionIsAnAssertion)
{
    ScenarioConfig cfg;
    cfg.zones.device_bearing_rad = 0.0;
    EXPECT_THROW(run_zone_campaign(cfg), AssertionFailure);
}

TEST(RegionCampaign, MonteCarloAgreesWithSemiAnalytic)
{
    ScenarioConfig cfg;
    cfg.region.samples = 200000;
    const auto r = run_region_campaign(cfg);
    const double mc = r.column("mc_area_m2").values[0];
    const double se = r.column("mc_std_error_m2").values[0];
    const double semi = r.column("semi_analytic_area_m2").values[0];
    ASSERT_TRUE(std::isfinite(semi));
    EXPECT_LE(std::abs(mc - semi), 3.0 * se);
    EXPECT_NEAR(r.column("apollonius_radius_m").values[0],
                dl_constant_k(cfg.layout) * 500.0 / (std::pow(dl_constant_k(cfg.layout), 2) - 1.0), 1e-9);
    expect_same(r, run_region_campaign(cfg));
}

TEST(FormulaComparison, GridAndModeAgreement)
{
    const ScenarioConfig cfg;
    const auto r = run_formula_comparison(cfg);
    EXPECT_EQ(r.rows(), 4u * 3u * 3u * 3u * 2u);
    const auto& rbs = r.column("num_rbs").values;
    const auto& db = r.column("ul_tx_m_db_dbm").values;
    const auto& lit = r.column("ul_tx_m_literal_dbm").values;
    for (std::size_t j = 0; j < r.rows(); ++j)
        if (rbs[j] == 1.0) EXPECT_EQ(db[j], lit[j]);
    EXPECT_EQ(r.columns.front().name, "num_rbs");
    EXPECT_EQ(r.columns.back().name, "zone_b_literal_m");
}

TEST(Metadata, RecordsSeedModeAndConfig)
{
    ScenarioConfig cfg;
    cfg.seed = 77;
    cfg.region.samples = 10000;
    const auto r = run_region_campaign(cfg);
    ASSERT_NE(r.meta("seed"), nullptr);
    EXPECT_EQ(*r.meta("seed"), "77");
    EXPECT_EQ(*r.meta("mode"), "db-consistent");
    EXPECT_EQ(*r.meta("campaign"), "region");
    ASSERT_NE(r.meta("config.power.alpha"), nullptr);
    EXPECT_NE(r.meta("config.power.alpha")->find("[default:link-parameter-table]"), std::string::npos);
}

}  // namespace
}  // namespace dude
