// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dude/errors.hpp"

namespace dude {

std::string_view to_string(FormulaMode mode) noexcept
{
    switch (mode) {
        case FormulaMode::DbConsistent: return "db-consistent";
        case FormulaMode::PaperLiteral: return "paper-literal";
    }
    return "unknown";
}

FormulaMode parse_formula_mode(std::string_view text)
{
    if (text == "db-consistent") return FormulaMode::DbConsistent;
    if (text == "paper-literal") return FormulaMode::PaperLiteral;
    throw ValidationError("unknown formula mode '" + std::string(text)
                          + "' (expected db-consistent or paper-literal)");
}

void PowerControlConfig::validate() const
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ValidationError("power.alpha must satisfy 0 < alpha <= 1, got "
                              + std::to_string(alpha));
    if (num_rbs < 1)
        throw ValidationError("power.num_rbs must be >= 1, got " + std::to_string(num_rbs));
    if (!std::isfinite(pmax_dbm)) throw ValidationError("power.pmax_dbm must be finite");
    if (!std::isfinite(p0_dbm)) throw ValidationError("power.p0_dbm must be finite");
    if (std::isnan(noise_dbm) || noise_dbm == std::numeric_limits<double>::infinity())
        throw ValidationError("power.noise_dbm must be finite or -inf");
}

void CellRadioConfig::validate() const
{
    if (!std::isfinite(dl_tx_power_dbm))
        throw ValidationError("downlink transmit power must be finite");
    if (!(coverage_radius_m > 0.0) || !std::isfinite(coverage_radius_m))
        throw ValidationError("coverage radius must be positive");
}

double dbm_to_mw(double dbm) noexcept
{
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw) noexcept
{
    return 10.0 * std::log10(mw);
}

double path_loss_db(double distance_m)
{
    if (!(distance_m > 0.0))
        throw DomainError("path loss needs a positive distance, got " + std::to_string(distance_m));
    return 35.0 + 30.0 * std::log10(distance_m);
}

double distance_for_path_loss_m(double pl_db) noexcept
{
    return std::pow(10.0, (pl_db - 35.0) / 30.0);
}

double uplink_tx_power_dbm(const PowerControlConfig& cfg, double pl_db)
{
    const double log_k = std::log10(static_cast<double>(cfg.num_rbs));
    const double bandwidth_term =
        cfg.mode == FormulaMode::PaperLiteral ? cfg.p0_dbm * log_k : 10.0 * log_k;
    return std::min(cfg.pmax_dbm, bandwidth_term + cfg.p0_dbm + cfg.alpha * pl_db);
}

double sinr_db(double signal_dbm, std::span<const double> interferers_dbm, double noise_dbm)
{
    // Exact dB subtraction for the noise-only case.
    if (interferers_dbm.empty()) {
        if (noise_dbm == -std::numeric_limits<double>::infinity())
            throw DomainError("SINR undefined: no interferers and zero noise");
        return signal_dbm - noise_dbm;
    }
    double denom_mw = dbm_to_mw(noise_dbm);
    for (double i : interferers_dbm) denom_mw += dbm_to_mw(i);
    if (!(denom_mw > 0.0)) throw DomainError("SINR undefined: zero interference-plus-noise");
    return signal_dbm - mw_to_dbm(denom_mw);
}

double spectral_efficiency(double sinr_db) noexcept
{
    return std::log2(1.0 + std::pow(10.0, sinr_db / 10.0));
}

TargetPower tx_power_for_target_sinr_dbm(double target_sinr_db, double pl_db,
                                         double interference_plus_noise_dbm, double pmax_dbm)
{
    const double needed = target_sinr_db + interference_plus_noise_dbm + pl_db;
    if (needed > pmax_dbm) return {pmax_dbm, true};
    return {needed, false};
}

}  // namespace dude
