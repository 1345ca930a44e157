// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/powersave.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dude/detail/parallel.hpp"
#include "dude/errors.hpp"

namespace dude {

void MobileTransitSpec::validate() const
{
    if (!(velocity_mps >= 0.0)) throw ValidationError("velocity must be >= 0");
    if (!(interval_s > 0.0)) throw ValidationError("transmission interval must be > 0");
    if (n_tx < 1) throw ValidationError("transmission count must be >= 1");
    if (!(d_m0 > 0.0) || !(d_s0 > 0.0))
        throw ValidationError("initial distances must be positive");
}

namespace {

void require_positive(double d_s, double d_m)
{
    if (!(d_s > 0.0) || !(d_m > 0.0))
        throw DomainError("distances must be positive (d_s=" + std::to_string(d_s)
                          + ", d_m=" + std::to_string(d_m) + ")");
}

}  // namespace

double power_ratio(double d_s, double d_m, const PowerControlConfig& cfg)
{
    require_positive(d_s, d_m);
    const double exponent = cfg.mode == FormulaMode::PaperLiteral ? 3.0 * cfg.alpha * cfg.p0_dbm
                                                                  : 3.0 * cfg.alpha;
    return std::pow(d_s / d_m, exponent);
}

double power_saved_mw(double d_m, double d_s, const PowerControlConfig& cfg)
{
    require_positive(d_s, d_m);
    if (d_s > d_m)
        throw PreconditionError("device is not in the decoupling region (d_s="
                                + std::to_string(d_s) + " > d_m=" + std::to_string(d_m) + ")");

    if (cfg.mode == FormulaMode::PaperLiteral) {
        const double p_tm = literal::tx_power_exponent_form(cfg.p0_dbm, cfg.alpha, d_m);
        return p_tm * (1.0 - power_ratio(d_s, d_m, cfg));
    }

    const double p_tm_dbm = uplink_tx_power_dbm(cfg, path_loss_db(d_m));
    const double p_ts_dbm = uplink_tx_power_dbm(cfg, path_loss_db(d_s));
    // 1 - 10^(dB/10) via expm1; exact zero when both powers coincide.
    const double one_minus_ratio = -std::expm1((p_ts_dbm - p_tm_dbm) * std::numbers::ln10 / 10.0);
    return dbm_to_mw(p_tm_dbm) * one_minus_ratio;
}

MobileSavings mobile_total_saved_mw(const MobileTransitSpec& spec, const PowerControlConfig& cfg,
                                    double dl_k)
{
    spec.validate();
    MobileSavings out;
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(spec.n_tx));
    const double step = spec.velocity_mps * spec.interval_s;
    for (int i = 0; i < spec.n_tx; ++i) {
        const double moved = static_cast<double>(i) * step;
        const double d_m = spec.d_m0 + moved;
        const double d_s = spec.d_s0 - moved;
        if (!(d_s > 0.0))
            throw DomainError("transmission " + std::to_string(i + 1)
                              + " is at or past the small cell (d_s=" + std::to_string(d_s) + ")");
        if (!(d_s < d_m && d_m < dl_k * d_s)) ++out.steps_outside_region;
        terms.push_back(power_saved_mw(d_m, d_s, cfg));
    }
    out.total_mw = detail::compensated_sum(terms);
    return out;
}

double static_total_saved_mw(std::span<const StaticDevice> devices, const PowerControlConfig& cfg)
{
    for (const auto& d : devices) {
        if (!(d.d_s < d.d_m))
            throw PreconditionError("static device must satisfy d_s < d_m (d_s="
                                    + std::to_string(d.d_s) + ", d_m=" + std::to_string(d.d_m)
                                    + ")");
    }
    std::vector<double> saved(devices.size(), 0.0);
    detail::parallel_for(devices.size(), [&](std::size_t j) {
        saved[j] = power_saved_mw(devices[j].d_m, devices[j].d_s, cfg);
    });
    return detail::compensated_sum(saved);
}

namespace literal {

double tx_power_exponent_form(double p0_dbm, double alpha, double d_m)
{
    return std::pow(10.0, p0_dbm / 10.0 * alpha * path_loss_db(d_m));
}

double rx_power_exponent_form(double p0_dbm, double alpha, double d_m)
{
    return std::pow(10.0, p0_dbm / 10.0 * (alpha - 1.0) * path_loss_db(d_m));
}

}  // namespace literal

}  // namespace dude
