// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/d2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "dude/detail/parallel.hpp"
#include "dude/errors.hpp"

namespace dude {

void D2DConfig::validate() const
{
    if (!std::isfinite(lambda_dbm)) throw ValidationError("D2D threshold must be finite");
    if (!(pair_density_per_m2 >= 0.0) || !std::isfinite(pair_density_per_m2))
        throw ValidationError("D2D pair density must be >= 0");
}

double zone_radius_m(double tx_dbm, double lambda_dbm)
{
    const double margin = tx_dbm - lambda_dbm;
    if (!(margin > 35.0))
        throw DegenerateZoneError("interference zone below the 1 m reference distance (tx - lambda = "
                                  + std::to_string(margin) + " dB)");
    return distance_for_path_loss_m(margin);
}

InterferenceZone zone_pair(const Point& device_pos, const NetworkLayout& layout,
                           const PowerControlConfig& cfg, const D2DConfig& d2d)
{
    const double k = dl_constant_k(layout);
    if (classify(device_pos, layout, k) != Association::Decoupled)
        throw PreconditionError("interference zones need a device in the decoupling region");

    // Zones are physical quantities; the literal closed form lives in literal::.
    PowerControlConfig db = cfg;
    db.mode = FormulaMode::DbConsistent;
    const double p_tm = uplink_tx_power_dbm(db, path_loss_db(distance(device_pos, layout.macro_pos)));
    const double p_ts = uplink_tx_power_dbm(db, path_loss_db(distance(device_pos, layout.small_pos)));
    return InterferenceZone{device_pos, zone_radius_m(p_tm, d2d.lambda_dbm),
                            zone_radius_m(p_ts, d2d.lambda_dbm)};
}

double excess_area_m2(const InterferenceZone& zone)
{
    const double a = zone.radius_coupled_m;
    const double b = zone.radius_decoupled_m;
    return std::numbers::pi * (a - b) * (a + b);
}

double total_excess_area_m2(std::span<const InterferenceZone> zones)
{
    for (std::size_t i = 0; i < zones.size(); ++i) {
        for (std::size_t j = i + 1; j < zones.size(); ++j) {
            const double gap = distance(zones[i].center, zones[j].center);
            if (gap < zones[i].radius_coupled_m + zones[j].radius_coupled_m)
                throw AssumptionViolation("interference zones " + std::to_string(i) + " and "
                                          + std::to_string(j) + " overlap");
        }
    }
    std::vector<double> areas(zones.size(), 0.0);
    detail::parallel_for(zones.size(), [&](std::size_t i) { areas[i] = excess_area_m2(zones[i]); });
    return detail::compensated_sum(areas);
}

double extra_pairs(double total_excess_m2, const D2DConfig& d2d)
{
    if (!(total_excess_m2 >= 0.0) || !(d2d.pair_density_per_m2 >= 0.0))
        throw DomainError("extra_pairs needs non-negative area and density");
    return d2d.pair_density_per_m2 * total_excess_m2;
}

bool pair_enabled(const Point& rx_pos, std::span<const Interferer> interferers, double lambda_dbm,
                  InterferenceTest test)
{
    if (interferers.empty()) return true;

    double strongest = -std::numeric_limits<double>::infinity();
    double sum_mw = 0.0;
    for (const auto& it : interferers) {
        const double d = distance(rx_pos, it.pos);
        if (d == 0.0) return false;
        const double rx = received_power_dbm(it.tx_dbm, path_loss_db(d));
        strongest = std::max(strongest, rx);
        sum_mw += dbm_to_mw(rx);
    }
    const double level = test == InterferenceTest::AggregateSum ? mw_to_dbm(sum_mw) : strongest;
    return level < lambda_dbm;
}

namespace literal {

double decoupled_radius_closed_form(double a_m, double d_m, double d_s, double alpha)
{
    const double bracket = std::pow(a_m, 30.0)
                           - std::pow(10.0, 35.0 * alpha - 1.0)
                                 * (std::pow(d_m, 30.0 * alpha) - std::pow(d_s, 30.0 * alpha));
    if (bracket < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::pow(bracket, 1.0 / 30.0);
}

}  // namespace literal

}  // namespace dude
