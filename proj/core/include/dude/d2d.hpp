// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_D2D_HPP
#define DUDE_D2D_HPP

#include <span>

#include "dude/geometry.hpp"
#include "dude/linkbudget.hpp"

namespace dude {

struct D2DConfig
{
    double lambda_dbm = -90.0;         ///< interference threshold of a D2D receiver
    double pair_density_per_m2 = 1e-4; ///< enable-able D2D pairs per unit area

    void validate() const;
};

/// Interference zones of one decoupling device: radius `a` while its uplink
/// goes to the Macro, radius `b` once it goes to the small cell.
struct InterferenceZone
{
    Point center;
    double radius_coupled_m = 0.0;
    double radius_decoupled_m = 0.0;
};

/// Distance at which a `tx_dbm` transmitter is received at exactly `lambda_dbm`:
/// 10^((tx - lambda - 35) / 30). Throws DegenerateZoneError when tx - lambda <= 35.
double zone_radius_m(double tx_dbm, double lambda_dbm);

/// Coupled and decoupled zones of a device in the decoupling region, always
/// from the dB relation lambda = P_T - PL(r) (cfg.mode is ignored here).
/// Throws PreconditionError when classify(device_pos) != Decoupled.
InterferenceZone zone_pair(const Point& device_pos, const NetworkLayout& layout,
                           const PowerControlConfig& cfg, const D2DConfig& d2d);

/// pi (a^2 - b^2).
double excess_area_m2(const InterferenceZone& zone);

/// Sum of excess areas. Throws AssumptionViolation if any two coupled zones overlap.
double total_excess_area_m2(std::span<const InterferenceZone> zones);

double extra_pairs(double total_excess_m2, const D2DConfig& d2d);

struct Interferer
{
    Point pos;
    double tx_dbm = 0.0;
};

enum class InterferenceTest
{
    StrongestInterferer, ///< max over interferers must stay below the threshold
    AggregateSum,        ///< mW sum of all interferers must stay below the threshold
};

/// True when received interference at `rx_pos` is strictly below `lambda_dbm`.
/// A receiver co-located with an interferer is always blocked.
bool pair_enabled(const Point& rx_pos, std::span<const Interferer> interferers, double lambda_dbm,
                  InterferenceTest test = InterferenceTest::StrongestInterferer);

namespace literal {

/// b = (a^30 - 10^(35 alpha - 1) (d_M^(30 alpha) - d_S^(30 alpha)))^(1/30) as originally
/// printed. Returns NaN when the bracket is negative.
double decoupled_radius_closed_form(double a_m, double d_m, double d_s, double alpha);

}  // namespace literal

}  // namespace dude

#endif  // DUDE_D2D_HPP
