// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/calc.hpp"

#include <array>
#include <charconv>

#include "dude/d2d.hpp"
#include "dude/errors.hpp"
#include "dude/geometry.hpp"
#include "dude/powersave.hpp"
#include "dude/result_io.hpp"

namespace dude {

namespace {

constexpr std::array<CalcInfo, 9> kCalculators{{
    {"path-loss", "<distance_m>"},
    {"k", "<macro_dl_dbm> <small_dl_dbm>"},
    {"zone-radius", "<tx_dbm> <lambda_dbm>"},
    {"power-ratio", "<d_s_m> <d_m_m> [alpha]"},
    {"power-saved", "<d_m_m> <d_s_m>"},
    {"excess-area", "<a_m> <b_m>"},
    {"uplink-tx", "<path_loss_db>"},
    {"sinr", "<signal_dbm> <noise_dbm> [interferer_dbm...]"},
    {"spectral-efficiency", "<sinr_db>"},
}};

double arg(std::span<const std::string> args, std::size_t i)
{
    const std::string& s = args[i];
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError("argument " + std::to_string(i + 1) + " is not a number: '" + s + "'");
    return v;
}

void arity(std::string_view name, std::span<const std::string> args, std::size_t lo, std::size_t hi)
{
    if (args.size() < lo || args.size() > hi) {
        std::string usage;
        for (const auto& c : kCalculators)
            if (c.name == name) usage = std::string(c.usage);
        throw ValidationError("usage: calc " + std::string(name) + " " + usage);
    }
}

}  // namespace

std::span<const CalcInfo> calculators()
{
    return kCalculators;
}

CalcValue run_calc(std::string_view name, std::span<const std::string> args, const ScenarioConfig& cfg)
{
    const FormulaMode mode = cfg.pc.mode;
    if (name == "path-loss") {
        arity(name, args, 1, 1);
        return {path_loss_db(arg(args, 0)), "dB", mode};
    }
    if (name == "k") {
        arity(name, args, 2, 2);
        return {dl_constant_k(arg(args, 0), arg(args, 1)), "", mode};
    }
    if (name == "zone-radius") {
        arity(name, args, 2, 2);
        return {zone_radius_m(arg(args, 0), arg(args, 1)), "m", mode};
    }
    if (name == "power-ratio") {
        arity(name, args, 2, 3);
        PowerControlConfig pc = cfg.pc;
        if (args.size() == 3) pc.alpha = arg(args, 2);
        pc.validate();
        return {power_ratio(arg(args, 0), arg(args, 1), pc), "", mode};
    }
    if (name == "power-saved") {
        arity(name, args, 2, 2);
        return {power_saved_mw(arg(args, 0), arg(args, 1), cfg.pc), "mW", mode};
    }
    if (name == "excess-area") {
        arity(name, args, 2, 2);
        return {excess_area_m2(InterferenceZone{{}, arg(args, 0), arg(args, 1)}), "m^2", mode};
    }
    if (name == "uplink-tx") {
        arity(name, args, 1, 1);
        return {uplink_tx_power_dbm(cfg.pc, arg(args, 0)), "dBm", mode};
    }
    if (name == "sinr") {
        arity(name, args, 2, 64);
        std::vector<double> interferers;
        for (std::size_t i = 2; i < args.size(); ++i) interferers.push_back(arg(args, i));
        return {sinr_db(arg(args, 0), interferers, arg(args, 1)), "dB", mode};
    }
    if (name == "spectral-efficiency") {
        arity(name, args, 1, 1);
        return {spectral_efficiency(arg(args, 0)), "bps/Hz", mode};
    }
    throw ValidationError("unknown calculator '" + std::string(name) + "'");
}

std::string format_calc(const CalcValue& v)
{
    std::string out = format_number(v.value, 10);
    if (!v.unit.empty()) out += " " + v.unit;
    out += "\tmode=";
    out += to_string(v.mode);
    return out;
}

}  // namespace dude
