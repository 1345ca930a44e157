// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_SCENARIO_HPP
#define DUDE_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dude/d2d.hpp"
#include "dude/geometry.hpp"
#include "dude/linkbudget.hpp"
#include "dude/mobility.hpp"

namespace dude {

/// Straight walk from A to D along the Macro -> small cell line.
struct TransitConfig
{
    double start_m = 50.0; ///< A, distance from the Macro along the line
    double end_m = 490.0;  ///< D
    double spacing_m = 1.0;
    std::vector<double> speeds_mps{30.0 / 3.6, 35.0 / 3.6, 40.0 / 3.6, 45.0 / 3.6,
                                   50.0 / 3.6, 55.0 / 3.6, 60.0 / 3.6};
    double target_sinr_db = 0.0;
    /// Optional single co-channel interferer transmitting to its own uplink cell.
    bool interferer = false;
    Point interferer_pos{520.0, 30.0};
};

/// One decoupling device at several distances from a smaller Macro cell.
struct ZoneCampaignConfig
{
    double macro_radius_m = 800.0;
    double small_distance_m = 800.0; ///< small cell placed on the +x axis
    std::vector<double> device_distances_m{600.0, 730.0};
    double device_bearing_rad = 15.0 * std::numbers::pi / 180.0;
    std::vector<double> thresholds_dbm{-90.0, -95.0};
};

struct RegionConfig
{
    std::uint64_t samples = 1'000'000;
};

/// Parameter grid of the formula-mode comparison report.
struct CompareConfig
{
    std::vector<double> distances_m{100.0, 200.0, 400.0, 800.0};
    std::vector<double> ds_ratios{0.25, 0.5, 1.0};
    std::vector<double> alphas{0.5, 0.7, 1.0};
    std::vector<double> p0s_dbm{-90.0, -80.0, -70.0};
    std::vector<int> num_rbs{1, 10};
};

struct ScenarioConfig
{
    NetworkLayout layout;
    PowerControlConfig pc;
    D2DConfig d2d;
    MobilityParams mobility;
    std::uint64_t seed = 12345;
    TransitConfig transit;
    ZoneCampaignConfig zones;
    RegionConfig region;
    CompareConfig compare;
    /// Where each explicitly set key came from ("config:line 3", "cli-override").
    /// Keys absent here carry their built-in default provenance.
    std::map<std::string, std::string> sources;

    void validate() const;
};

struct Column
{
    std::string name;
    std::vector<double> values;
};

/// Labeled numeric series plus enough metadata to re-run the campaign.
struct ScenarioResult
{
    std::string name;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<Column> columns;

    /// Throws Error when columns differ in length or a name repeats.
    void validate() const;
    std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().values.size(); }
    /// Throws Error when absent.
    const Column& column(const std::string& name) const;
    const std::string* meta(const std::string& key) const noexcept;
};

/// Decoupling-time CDF per speed class.
ScenarioResult run_decoupling_time_campaign(const ScenarioConfig& cfg);

/// Landmarks on the transit line, as distances from the Macro.
struct TransitLandmarks
{
    double a_m = 0.0;
    double b_m = 0.0; ///< first Decoupled point
    double c_m = 0.0; ///< first CoupledSmall point
    double d_m = 0.0;
};

/// Finds B and C by scanning the line and bisecting to 1 mm.
/// Throws AssertionFailure when the path never enters both regions.
TransitLandmarks transit_landmarks(const ScenarioConfig& cfg);

/// Coupled vs decoupled uplink SINR, spectral efficiency and transmit power from A to D.
ScenarioResult run_transit_campaign(const ScenarioConfig& cfg);

/// Coupled/decoupled interference zones for each (device distance, threshold).
ScenarioResult run_zone_campaign(const ScenarioConfig& cfg);

/// Layout used by the zone campaign and the device position at `distance_m`.
NetworkLayout zone_campaign_layout(const ScenarioConfig& cfg);
Point zone_campaign_device(const ScenarioConfig& cfg, double distance_m);

/// Monte Carlo decoupling-region area next to its semi-analytic value.
ScenarioResult run_region_campaign(const ScenarioConfig& cfg);

/// Both formula modes side by side over the comparison grid. Report only.
ScenarioResult run_formula_comparison(const ScenarioConfig& cfg);

}  // namespace dude

#endif  // DUDE_SCENARIO_HPP
