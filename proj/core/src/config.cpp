// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "dude/errors.hpp"
#include "dude/result_io.hpp"

namespace dude {

namespace {

constexpr std::string_view kLinkTable = "default:link-parameter-table";
constexpr std::string_view kMobilityTable = "default:mobility-table";
constexpr std::string_view kD2dTable = "default:d2d-table";
constexpr std::string_view kMobilityCampaign = "default:mobility-campaign";
constexpr std::string_view kTransitCampaign = "default:transit-campaign";
constexpr std::string_view kAssumed = "default:assumed";

constexpr double kKm = 1000.0;
constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kKmh = 1.0 / 3.6;

using Setter = std::function<void(ScenarioConfig&, std::string_view, std::size_t)>;
using Getter = std::function<std::string(const ScenarioConfig&)>;

struct KeyDef
{
    std::string name;
    std::string_view default_source;
    Setter set;
    Getter get;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const std::string& key, std::size_t line)
{
    text = trim(text);
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(line, key + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_uint(std::string_view text, const std::string& key, std::size_t line)
{
    text = trim(text);
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(line,
                          key + ": expected a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

std::vector<std::string_view> split_list(std::string_view text)
{
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        items.push_back(trim(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

// Shortest text that parses back to the same double.
std::string render(double v)
{
    if (!std::isfinite(v)) return format_number(v, 17);
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : format_number(v, 17);
}

using Check = std::function<bool(double)>;

const Check any = [](double) { return true; };
const Check finite = [](double v) { return std::isfinite(v); };
const Check positive = [](double v) { return v > 0.0 && std::isfinite(v); };
const Check non_negative = [](double v) { return v >= 0.0 && std::isfinite(v); };
const Check unit_interval = [](double v) { return v > 0.0 && v <= 1.0; };

void check_value(double v, const Check& check, std::string_view rule, const std::string& key,
                 std::size_t line)
{
    if (!check(v))
        throw ConfigError(line, key + ": value " + render(v) + " violates " + std::string(rule));
}

KeyDef real_key(std::string name, std::string_view src, std::function<double&(ScenarioConfig&)> ref,
                double scale = 1.0, Check check = finite, std::string_view rule = "finiteness")
{
    KeyDef d{std::move(name), src, {}, {}};
    d.set = [ref, scale, check, rule, key = d.name](ScenarioConfig& c, std::string_view v,
                                                    std::size_t line) {
        const double x = parse_double(v, key, line);
        check_value(x, check, rule, key, line);
        ref(c) = x * scale;
    };
    d.get = [ref, scale](const ScenarioConfig& c) {
        return render(ref(const_cast<ScenarioConfig&>(c)) / scale);
    };
    return d;
}

KeyDef list_key(std::string name, std::string_view src,
                std::function<std::vector<double>&(ScenarioConfig&)> ref, double scale = 1.0,
                Check check = finite, std::string_view rule = "finiteness")
{
    KeyDef d{std::move(name), src, {}, {}};
    d.set = [ref, scale, check, rule, key = d.name](ScenarioConfig& c, std::string_view v,
                                                    std::size_t line) {
        std::vector<double> out;
        for (auto item : split_list(v)) {
            const double x = parse_double(item, key, line);
            check_value(x, check, rule, key, line);
            out.push_back(x * scale);
        }
        ref(c) = std::move(out);
    };
    d.get = [ref, scale](const ScenarioConfig& c) {
        std::string s;
        for (double x : ref(const_cast<ScenarioConfig&>(c))) {
            if (!s.empty()) s += ", ";
            s += render(x / scale);
        }
        return s;
    };
    return d;
}

template <class Int>
KeyDef int_key(std::string name, std::string_view src, std::function<Int&(ScenarioConfig&)> ref,
               std::uint64_t min_value)
{
    KeyDef d{std::move(name), src, {}, {}};
    d.set = [ref, min_value, key = d.name](ScenarioConfig& c, std::string_view v, std::size_t line) {
        const std::uint64_t x = parse_uint(v, key, line);
        if (x < min_value)
            throw ConfigError(line, key + ": must be >= " + std::to_string(min_value));
        if (x > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
            throw ConfigError(line, key + ": value out of range");
        ref(c) = static_cast<Int>(x);
    };
    d.get = [ref](const ScenarioConfig& c) {
        return std::to_string(ref(const_cast<ScenarioConfig&>(c)));
    };
    return d;
}

KeyDef bool_key(std::string name, std::string_view src, std::function<bool&(ScenarioConfig&)> ref)
{
    KeyDef d{std::move(name), src, {}, {}};
    d.set = [ref, key = d.name](ScenarioConfig& c, std::string_view v, std::size_t line) {
        v = trim(v);
        if (v == "true")
            ref(c) = true;
        else if (v == "false")
            ref(c) = false;
        else
            throw ConfigError(line, key + ": expected true or false, got '" + std::string(v) + "'");
    };
    d.get = [ref](const ScenarioConfig& c) {
        return std::string(ref(const_cast<ScenarioConfig&>(c)) ? "true" : "false");
    };
    return d;
}

const std::vector<KeyDef>& registry()
{
    static const std::vector<KeyDef> keys = [] {
        std::vector<KeyDef> k;
        k.push_back(int_key<std::uint64_t>("seed", kAssumed,
                                           [](ScenarioConfig& c) -> std::uint64_t& { return c.seed; }, 0));
        {
            KeyDef mode{"mode", kAssumed, {}, {}};
            mode.set = [](ScenarioConfig& c, std::string_view v, std::size_t line) {
                try {
                    c.pc.mode = parse_formula_mode(trim(v));
                } catch (const ValidationError& e) {
                    throw ConfigError(line, std::string("mode: ") + e.what());
                }
            };
            mode.get = [](const ScenarioConfig& c) { return std::string(to_string(c.pc.mode)); };
            k.push_back(std::move(mode));
        }

        k.push_back(real_key("power.p0_dbm", kAssumed, [](ScenarioConfig& c) -> double& { return c.pc.p0_dbm; }));
        k.push_back(real_key("power.alpha", kLinkTable, [](ScenarioConfig& c) -> double& { return c.pc.alpha; },
                             1.0, unit_interval, "0 < alpha <= 1"));
        k.push_back(real_key("power.pmax_dbm", kLinkTable, [](ScenarioConfig& c) -> double& { return c.pc.pmax_dbm; }));
        k.push_back(int_key<int>("power.num_rbs", kLinkTable, [](ScenarioConfig& c) -> int& { return c.pc.num_rbs; }, 1));
        k.push_back(real_key("power.noise_dbm", kAssumed, [](ScenarioConfig& c) -> double& { return c.pc.noise_dbm; },
                             1.0, [](double v) { return !std::isnan(v) && v < INFINITY; }, "noise < +inf"));

        k.push_back(real_key("layout.macro_x_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.layout.macro_pos.x; }, kKm));
        k.push_back(real_key("layout.macro_y_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.layout.macro_pos.y; }, kKm));
        k.push_back(real_key("layout.macro_dl_dbm", kLinkTable,
                             [](ScenarioConfig& c) -> double& { return c.layout.macro_radio.dl_tx_power_dbm; }));
        k.push_back(real_key("layout.macro_radius_km", kLinkTable,
                             [](ScenarioConfig& c) -> double& { return c.layout.macro_radio.coverage_radius_m; },
                             kKm, positive, "radius > 0"));
        k.push_back(real_key("layout.small_x_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.layout.small_pos.x; }, kKm));
        k.push_back(real_key("layout.small_y_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.layout.small_pos.y; }, kKm));
        k.push_back(real_key("layout.small_dl_dbm", kLinkTable,
                             [](ScenarioConfig& c) -> double& { return c.layout.small_radio.dl_tx_power_dbm; }));
        k.push_back(real_key("layout.small_radius_km", kLinkTable,
                             [](ScenarioConfig& c) -> double& { return c.layout.small_radio.coverage_radius_m; },
                             kKm, positive, "radius > 0"));

        k.push_back(real_key("d2d.lambda_dbm", kD2dTable, [](ScenarioConfig& c) -> double& { return c.d2d.lambda_dbm; }));
        k.push_back(real_key("d2d.pair_density_per_km2", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.d2d.pair_density_per_m2; },
                             1.0 / (kKm * kKm), non_negative, "density >= 0"));

        k.push_back(real_key("mobility.step_mean_km", kMobilityTable,
                             [](ScenarioConfig& c) -> double& { return c.mobility.step_mean_m; }, kKm, positive, "mean > 0"));
        k.push_back(list_key("mobility.speeds_kmh", kMobilityTable,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.mobility.speed_classes_mps; },
                             kKmh, positive, "speed > 0"));
        k.push_back(real_key("mobility.heading_halfwidth_deg", kMobilityTable,
                             [](ScenarioConfig& c) -> double& { return c.mobility.heading_halfwidth_rad; }, kDeg,
                             [](double v) { return v > 0.0 && v <= 180.0; }, "0 < half-width <= 180"));
        k.push_back(int_key<int>("mobility.devices_per_class", kMobilityCampaign,
                                 [](ScenarioConfig& c) -> int& { return c.mobility.devices_per_class; }, 1));
        k.push_back(real_key("mobility.max_time_s", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.mobility.max_time_s; }, 1.0, positive, "time > 0"));
        k.push_back(int_key<std::size_t>("mobility.max_steps", kAssumed,
                                         [](ScenarioConfig& c) -> std::size_t& { return c.mobility.max_steps; }, 1));
        k.push_back(real_key("mobility.start_x_min_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.mobility.start_x_min_m; }, kKm));
        k.push_back(real_key("mobility.start_x_max_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.mobility.start_x_max_m; }, kKm));
        k.push_back(real_key("mobility.start_y_min_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.mobility.start_y_min_m; }, kKm));
        k.push_back(real_key("mobility.start_y_max_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.mobility.start_y_max_m; }, kKm));
        k.push_back(bool_key("mobility.refine_crossings", kAssumed,
                             [](ScenarioConfig& c) -> bool& { return c.mobility.refine_crossings; }));

        k.push_back(real_key("transit.start_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.transit.start_m; },
                             kKm, non_negative, "start >= 0"));
        k.push_back(real_key("transit.end_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.transit.end_m; },
                             kKm, positive, "end > 0"));
        k.push_back(real_key("transit.spacing_km", kAssumed, [](ScenarioConfig& c) -> double& { return c.transit.spacing_m; },
                             kKm, positive, "spacing > 0"));
        k.push_back(list_key("transit.speeds_kmh", kTransitCampaign,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.transit.speeds_mps; },
                             kKmh, positive, "speed > 0"));
        k.push_back(real_key("transit.target_sinr_db", kTransitCampaign,
                             [](ScenarioConfig& c) -> double& { return c.transit.target_sinr_db; }));
        k.push_back(bool_key("transit.interferer", kAssumed, [](ScenarioConfig& c) -> bool& { return c.transit.interferer; }));
        k.push_back(real_key("transit.interferer_x_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.transit.interferer_pos.x; }, kKm));
        k.push_back(real_key("transit.interferer_y_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.transit.interferer_pos.y; }, kKm));

        k.push_back(real_key("zones.macro_radius_km", kD2dTable,
                             [](ScenarioConfig& c) -> double& { return c.zones.macro_radius_m; }, kKm, positive, "radius > 0"));
        k.push_back(real_key("zones.small_distance_km", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.zones.small_distance_m; }, kKm, positive, "distance > 0"));
        k.push_back(list_key("zones.device_distances_km", kD2dTable,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.zones.device_distances_m; },
                             kKm, positive, "distance > 0"));
        k.push_back(real_key("zones.device_bearing_deg", kAssumed,
                             [](ScenarioConfig& c) -> double& { return c.zones.device_bearing_rad; }, kDeg));
        k.push_back(list_key("zones.thresholds_dbm", kD2dTable,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.zones.thresholds_dbm; }));

        k.push_back(int_key<std::uint64_t>("region.samples", kAssumed,
                                           [](ScenarioConfig& c) -> std::uint64_t& { return c.region.samples; }, 1000));

        k.push_back(list_key("compare.distances_km", kAssumed,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.compare.distances_m; },
                             kKm, positive, "distance > 0"));
        k.push_back(list_key("compare.ds_ratios", kAssumed,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.compare.ds_ratios; },
                             1.0, unit_interval, "0 < ratio <= 1"));
        k.push_back(list_key("compare.alphas", kAssumed,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.compare.alphas; },
                             1.0, unit_interval, "0 < alpha <= 1"));
        k.push_back(list_key("compare.p0s_dbm", kAssumed,
                             [](ScenarioConfig& c) -> std::vector<double>& { return c.compare.p0s_dbm; }));
        {
            KeyDef rbs{"compare.num_rbs", kAssumed, {}, {}};
            rbs.set = [](ScenarioConfig& c, std::string_view v, std::size_t line) {
                std::vector<int> out;
                for (auto item : split_list(v)) {
                    const auto x = parse_uint(item, "compare.num_rbs", line);
                    if (x < 1 || x > 1'000'000) throw ConfigError(line, "compare.num_rbs: must be in [1, 1e6]");
                    out.push_back(static_cast<int>(x));
                }
                c.compare.num_rbs = std::move(out);
            };
            rbs.get = [](const ScenarioConfig& c) {
                std::string s;
                for (int x : c.compare.num_rbs) s += (s.empty() ? "" : ", ") + std::to_string(x);
                return s;
            };
            k.push_back(std::move(rbs));
        }
        return k;
    }();
    return keys;
}

const KeyDef* find_key(std::string_view name)
{
    for (const auto& d : registry())
        if (d.name == name) return &d;
    return nullptr;
}

}  // namespace

std::vector<std::string> config_keys()
{
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
}

void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                      const std::string& source, std::size_t line)
{
    const KeyDef* def = find_key(key);
    if (def == nullptr) throw ConfigError(line, "unknown key '" + std::string(key) + "'");
    if (trim(value).empty()) throw ConfigError(line, std::string(key) + ": empty value");
    def->set(cfg, value, line);
    cfg.sources[def->name] = source;
}

ScenarioConfig parse_config_text(std::string_view text)
{
    ScenarioConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "missing key before '='");
        if (find_key(key) == nullptr) throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
        if (!seen.insert(std::string(key)).second)
            throw ConfigError(line_no, "duplicate key '" + std::string(key) + "'");
        set_config_value(cfg, key, value, "config:line " + std::to_string(line_no), line_no);
    }

    try {
        cfg.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(0, e.what());
    }
    return cfg;
}

ScenarioConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(e.line(), path.string() + ": " + e.detail());
    }
}

std::vector<ConfigEntry> config_echo(const ScenarioConfig& cfg)
{
    std::vector<ConfigEntry> out;
    for (const auto& d : registry()) {
        const auto it = cfg.sources.find(d.name);
        out.push_back({d.name, d.get(cfg),
                       it != cfg.sources.end() ? it->second : std::string(d.default_source)});
    }
    return out;
}

std::string render_config(const ScenarioConfig& cfg)
{
    std::string out;
    for (const auto& e : config_echo(cfg)) out += e.key + " = " + e.value + "\n";
    return out;
}

}  // namespace dude
