// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_LINKBUDGET_HPP
#define DUDE_LINKBUDGET_HPP

#include <span>
#include <string_view>

namespace dude {

/// Which algebra downstream formulas use.
///
/// DbConsistent evaluates every relation in the dB domain and mixes powers
/// only in linear mW. PaperLiteral evaluates the closed forms exactly as they
/// were originally printed (P0 inside exponents, P0*log10(K) bandwidth term);
/// it exists for side-by-side comparison reports and is not physically sound.
enum class FormulaMode
{
    DbConsistent,
    PaperLiteral,
};

std::string_view to_string(FormulaMode mode) noexcept;
/// Accepts "db-consistent" / "paper-literal". Throws ValidationError otherwise.
FormulaMode parse_formula_mode(std::string_view text);

/// Open-loop fractional uplink power control, shared by the Macro and the
/// small cell (the two cells use the same compensation factor).
struct PowerControlConfig
{
    double p0_dbm = -80.0;     ///< target received power
    double alpha = 0.7;        ///< fraction of path loss compensated, 0 < alpha <= 1
    double pmax_dbm = 23.0;    ///< UE transmit power cap
    int num_rbs = 10;          ///< resource blocks assigned to the UE
    double noise_dbm = -102.0; ///< noise floor over the assigned bandwidth
    FormulaMode mode = FormulaMode::DbConsistent;

    /// Throws ValidationError when an invariant is broken.
    void validate() const;
};

struct CellRadioConfig
{
    double dl_tx_power_dbm = 0.0;
    double coverage_radius_m = 0.0;

    void validate() const;
};

double dbm_to_mw(double dbm) noexcept;
double mw_to_dbm(double mw) noexcept;

/// PL(d) = 35 + 30 log10(d), d in meters. Throws DomainError for d <= 0.
double path_loss_db(double distance_m);

/// Inverse of path_loss_db.
double distance_for_path_loss_m(double pl_db) noexcept;

/// min(Pmax, P0 + bandwidth term + alpha * PL). The bandwidth term is
/// 10 log10(K) in DbConsistent mode and P0 * log10(K) in PaperLiteral mode.
double uplink_tx_power_dbm(const PowerControlConfig& cfg, double pl_db);

inline bool uplink_tx_capped(const PowerControlConfig& cfg, double pl_db)
{
    return uplink_tx_power_dbm(cfg, pl_db) >= cfg.pmax_dbm;
}

constexpr double received_power_dbm(double tx_dbm, double pl_db) noexcept
{
    return tx_dbm - pl_db;
}

/// Signal over (sum of interferers + noise), summed in mW.
/// Throws DomainError when the denominator is zero (noise = -inf, no interferers).
double sinr_db(double signal_dbm, std::span<const double> interferers_dbm, double noise_dbm);

/// Shannon mapping log2(1 + SINR).
double spectral_efficiency(double sinr_db) noexcept;

struct TargetPower
{
    double tx_dbm;
    bool capped; ///< target unreachable within Pmax
};

TargetPower tx_power_for_target_sinr_dbm(double target_sinr_db, double pl_db,
                                         double interference_plus_noise_dbm, double pmax_dbm);

}  // namespace dude

#endif  // DUDE_LINKBUDGET_HPP
