// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_POWERSAVE_HPP
#define DUDE_POWERSAVE_HPP

#include <cstddef>
#include <span>

#include "dude/linkbudget.hpp"

namespace dude {

/// A device moving in a straight line from the Macro towards the small cell,
/// transmitting every `interval_s` seconds starting at the decoupling point.
struct MobileTransitSpec
{
    double d_m0 = 0.0;
    double d_s0 = 0.0;
    double velocity_mps = 0.0;
    double interval_s = 1.0;
    int n_tx = 1;

    void validate() const;
};

struct StaticDevice
{
    double d_m = 0.0;
    double d_s = 0.0;
};

/// P_TS / P_TM as a linear ratio.
/// DbConsistent: (d_s/d_m)^(3 alpha). PaperLiteral: (d_s/d_m)^(3 alpha P0).
double power_ratio(double d_s, double d_m, const PowerControlConfig& cfg);

/// Linear-domain uplink power saved by sending to the small cell instead of the Macro.
///
/// DbConsistent: mW(P_TM) - mW(P_TS) with both powers from uplink_tx_power_dbm
/// (so Pmax caps apply), evaluated as mW(P_TM) * (1 - ratio) without cancellation.
/// PaperLiteral: the closed form P_TM * (1 - ratio) with the literal exponent forms.
/// Throws PreconditionError when d_s > d_m, DomainError for non-positive distances.
double power_saved_mw(double d_m, double d_s, const PowerControlConfig& cfg);

struct MobileSavings
{
    double total_mw = 0.0;
    /// Transmissions whose (d_m, d_s) fall outside dS < dM < k dS.
    std::size_t steps_outside_region = 0;
};

/// Sum over i = 1..n of power_saved_mw(d_m0 + (i-1) v t, d_s0 - (i-1) v t).
/// `dl_k` only feeds the out-of-region counter.
MobileSavings mobile_total_saved_mw(const MobileTransitSpec& spec, const PowerControlConfig& cfg,
                                    double dl_k);

/// Sum of per-device savings, compensated and in input order.
double static_total_saved_mw(std::span<const StaticDevice> devices, const PowerControlConfig& cfg);

namespace literal {

/// Transmit power exponent form 10^((P0/10) alpha (35 + 30 log10 d)), no cap.
double tx_power_exponent_form(double p0_dbm, double alpha, double d_m);

/// Received power exponent form 10^((P0/10) (alpha - 1) (35 + 30 log10 d)).
double rx_power_exponent_form(double p0_dbm, double alpha, double d_m);

}  // namespace literal

}  // namespace dude

#endif  // DUDE_POWERSAVE_HPP
