// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "dude/config.hpp"
#include "dude/detail/parallel.hpp"
#include "dude/errors.hpp"
#include "dude/powersave.hpp"
#include "dude/result_io.hpp"

namespace dude {

namespace {

std::string num(double v)
{
    return format_number(v, 17);
}

std::string speed_label(double mps)
{
    return format_number(mps * 3.6, 6) + "kmh";
}

void require(bool cond, const std::string& what)
{
    if (!cond) throw AssertionFailure(what);
}

std::vector<std::pair<std::string, std::string>> base_metadata(const ScenarioConfig& cfg,
                                                                const std::string& campaign)
{
    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("campaign", campaign);
    meta.emplace_back("seed", std::to_string(cfg.seed));
    meta.emplace_back("mode", std::string(to_string(cfg.pc.mode)));
    for (const auto& e : config_echo(cfg))
        meta.emplace_back("config." + e.key, e.value + " [" + e.source + "]");
    return meta;
}

double median_of_sorted(const std::vector<double>& v)
{
    const std::size_t n = v.size();
    if (n == 0) return std::numeric_limits<double>::quiet_NaN();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void ScenarioConfig::validate() const
{
    layout.validate();
    pc.validate();
    d2d.validate();
    mobility.validate();
    dl_constant_k(layout.macro_radio.dl_tx_power_dbm, layout.small_radio.dl_tx_power_dbm);

    for (double x : {mobility.start_x_min_m, mobility.start_x_max_m})
        for (double y : {mobility.start_y_min_m, mobility.start_y_max_m})
            if (!layout.in_macro_coverage({x, y}))
                throw ValidationError("mobility start box extends outside the Macro coverage disc");

    const double ms = distance(layout.macro_pos, layout.small_pos);
    if (!(transit.spacing_m > 0.0)) throw ValidationError("transit.spacing_km must be > 0");
    if (!(transit.start_m >= 0.0 && transit.start_m < transit.end_m))
        throw ValidationError("transit.start_km must be >= 0 and below transit.end_km");
    if (!(transit.end_m < ms))
        throw ValidationError("transit.end_km must stop short of the small cell");
    if (transit.speeds_mps.empty()) throw ValidationError("transit.speeds_kmh must not be empty");
    for (double v : transit.speeds_mps)
        if (!(v > 0.0)) throw ValidationError("transit speeds must be > 0");

    if (!(zones.macro_radius_m > 0.0)) throw ValidationError("zones.macro_radius_km must be > 0");
    if (!(zones.small_distance_m > 0.0 && zones.small_distance_m <= zones.macro_radius_m))
        throw ValidationError("zones.small_distance_km must lie in (0, zones.macro_radius_km]");
    if (zones.device_distances_m.empty() || zones.thresholds_dbm.empty())
        throw ValidationError("zone campaign needs device distances and thresholds");
    for (double d : zones.device_distances_m)
        if (!(d > 0.0 && d <= zones.macro_radius_m))
            throw ValidationError("zone device distances must lie in (0, zones.macro_radius_km]");

    if (region.samples < 1000) throw ValidationError("region.samples must be >= 1000");

    if (compare.distances_m.empty() || compare.ds_ratios.empty() || compare.alphas.empty()
        || compare.p0s_dbm.empty() || compare.num_rbs.empty())
        throw ValidationError("comparison grid axes must not be empty");
    for (double d : compare.distances_m)
        if (!(d > 0.0)) throw ValidationError("compare.distances_km must be > 0");
    for (double r : compare.ds_ratios)
        if (!(r > 0.0 && r <= 1.0)) throw ValidationError("compare.ds_ratios must lie in (0, 1]");
    for (double a : compare.alphas)
        if (!(a > 0.0 && a <= 1.0)) throw ValidationError("compare.alphas must lie in (0, 1]");
    for (int k : compare.num_rbs)
        if (k < 1) throw ValidationError("compare.num_rbs must be >= 1");
}

void ScenarioResult::validate() const
{
    std::set<std::string> names;
    for (const auto& c : columns) {
        if (!names.insert(c.name).second) throw Error("duplicate column '" + c.name + "'");
        if (c.values.size() != rows())
            throw Error("column '" + c.name + "' has " + std::to_string(c.values.size())
                        + " rows, expected " + std::to_string(rows()));
    }
}

const Column& ScenarioResult::column(const std::string& name) const
{
    for (const auto& c : columns)
        if (c.name == name) return c;
    throw Error("result '" + this->name + "' has no column '" + name + "'");
}

const std::string* ScenarioResult::meta(const std::string& key) const noexcept
{
    for (const auto& [k, v] : metadata)
        if (k == key) return &v;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Decoupling time
// ---------------------------------------------------------------------------

ScenarioResult run_decoupling_time_campaign(const ScenarioConfig& cfg)
{
    cfg.validate();
    const MobilityParams& mp = cfg.mobility;
    const double k = dl_constant_k(cfg.layout);
    const std::size_t n_dev = static_cast<std::size_t>(mp.devices_per_class);
    const std::size_t n_cls = mp.speed_classes_mps.size();

    struct Outcome
    {
        double time_s = 0.0;
        bool timed_out = false;
        std::size_t double_crossings = 0;
        std::size_t out_of_coverage = 0;
    };
    std::vector<Outcome> outcomes(n_dev * n_cls);
    detail::parallel_for(outcomes.size(), [&](std::size_t idx) {
        const std::size_t cls = idx / n_dev;
        const std::size_t dev = idx % n_dev;
        Rng rng = device_rng(cfg.seed, dev);
        const Point start = draw_start(mp, rng);
        const Trajectory traj = simulate_trajectory(start, cfg.layout, k, mp,
                                                    mp.speed_classes_mps[cls], mp.max_time_s, rng);
        outcomes[idx] = {mp.refine_crossings ? decoupling_time_refined_s(traj, cfg.layout, k)
                                             : decoupling_time_s(traj),
                         traj.timed_out, traj.double_crossings, traj.out_of_coverage};
    });

    ScenarioResult result{"decoupling_time", base_metadata(cfg, "decoupling_time"), {}};
    result.metadata.emplace_back("dl_ratio_k", num(k));

    std::vector<double> pooled;
    for (std::size_t cls = 0; cls < n_cls; ++cls) {
        std::vector<double> times;
        std::size_t timeouts = 0;
        std::size_t crossings = 0;
        std::size_t outside = 0;
        for (std::size_t dev = 0; dev < n_dev; ++dev) {
            const Outcome& o = outcomes[cls * n_dev + dev];
            times.push_back(o.time_s);
            timeouts += o.timed_out ? 1 : 0;
            crossings += o.double_crossings;
            outside += o.out_of_coverage;
        }
        pooled.insert(pooled.end(), times.begin(), times.end());

        const auto cdf = empirical_cdf(times);
        std::sort(times.begin(), times.end());
        std::vector<double> probs;
        probs.reserve(times.size());
        for (double t : times) probs.push_back(cdf_at(cdf, t));

        for (std::size_t i = 0; i < probs.size(); ++i) {
            require(probs[i] > 0.0 && probs[i] <= 1.0, "CDF value outside (0, 1]");
            require(i == 0 || probs[i] >= probs[i - 1], "CDF is not monotone");
        }
        require(probs.back() == 1.0, "CDF does not reach 1");

        const std::string label = speed_label(mp.speed_classes_mps[cls]);
        const double mean =
            detail::compensated_sum(times) / static_cast<double>(times.size());
        result.metadata.emplace_back("mean_s_" + label, num(mean));
        result.metadata.emplace_back("median_s_" + label, num(median_of_sorted(times)));
        result.metadata.emplace_back("timeouts_" + label, std::to_string(timeouts));
        result.metadata.emplace_back("double_crossings_" + label, std::to_string(crossings));
        result.metadata.emplace_back("out_of_coverage_vertices_" + label, std::to_string(outside));
        result.columns.push_back({"time_s_" + label, std::move(times)});
        result.columns.push_back({"cdf_" + label, std::move(probs)});
    }
    std::sort(pooled.begin(), pooled.end());
    result.metadata.emplace_back("pooled_median_s", num(median_of_sorted(pooled)));
    result.validate();
    return result;
}

// ---------------------------------------------------------------------------
// Transit
// ---------------------------------------------------------------------------

namespace {

struct Line
{
    Point origin;
    Point dir;

    Point at(double s) const { return {origin.x + s * dir.x, origin.y + s * dir.y}; }
};

Line transit_line(const NetworkLayout& layout)
{
    const double len = distance(layout.macro_pos, layout.small_pos);
    return {layout.macro_pos, {(layout.small_pos.x - layout.macro_pos.x) / len,
                               (layout.small_pos.y - layout.macro_pos.y) / len}};
}

// Smallest s in (lo, hi] with classify == target, given classify(lo) != target and
// classify(hi) == target, to 1 mm.
double bisect_entry(const Line& line, const NetworkLayout& layout, double k, Association target,
                    double lo, double hi)
{
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (classify_unbounded(line.at(mid), layout, k) == target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

struct LinkEval
{
    double sinr_db = 0.0;
    double se = 0.0;
    double tx_dbm = 0.0;
    TargetPower target{};
};

}  // namespace

TransitLandmarks transit_landmarks(const ScenarioConfig& cfg)
{
    const NetworkLayout& layout = cfg.layout;
    const double k = dl_constant_k(layout);
    const Line line = transit_line(layout);
    const TransitConfig& tc = cfg.transit;

    auto first_entry = [&](Association target) {
        double prev = tc.start_m;
        if (classify_unbounded(line.at(prev), layout, k) == target) return prev;
        for (double s = tc.start_m + tc.spacing_m;; s += tc.spacing_m) {
            const double here = std::min(s, tc.end_m);
            if (classify_unbounded(line.at(here), layout, k) == target)
                return bisect_entry(line, layout, k, target, prev, here);
            if (here >= tc.end_m) break;
            prev = here;
        }
        return std::numeric_limits<double>::quiet_NaN();
    };

    TransitLandmarks lm{tc.start_m, first_entry(Association::Decoupled),
                        first_entry(Association::CoupledSmall), tc.end_m};
    require(std::isfinite(lm.b_m), "transit path never enters the decoupling region");
    require(std::isfinite(lm.c_m), "transit path never reaches the small cell's downlink region");
    require(lm.a_m < lm.b_m && lm.b_m < lm.c_m,
            "transit must start coupled to the Macro and cross the decoupling region");
    return lm;
}

ScenarioResult run_transit_campaign(const ScenarioConfig& cfg)
{
    cfg.validate();
    const NetworkLayout& layout = cfg.layout;
    const PowerControlConfig& pc = cfg.pc;
    const TransitConfig& tc = cfg.transit;
    const double k = dl_constant_k(layout);
    const Line line = transit_line(layout);
    const TransitLandmarks lm = transit_landmarks(cfg);

    std::vector<double> positions;
    for (std::size_t j = 0;; ++j) {
        const double s = tc.start_m + static_cast<double>(j) * tc.spacing_m;
        if (s >= tc.end_m) break;
        positions.push_back(s);
    }
    positions.push_back(tc.end_m);
    positions.push_back(lm.b_m);
    positions.push_back(lm.c_m);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    // Interference seen by a receiving cell from the optional interferer, which is
    // scheduled orthogonally to the device when both share an uplink cell.
    std::vector<double> no_interference;
    double interferer_tx = 0.0;
    Point interferer_cell{};
    if (tc.interferer) {
        const Point& q = tc.interferer_pos;
        interferer_cell = ul_prefers_small(q, layout) ? layout.small_pos : layout.macro_pos;
        interferer_tx = uplink_tx_power_dbm(pc, path_loss_db(distance(q, interferer_cell)));
    }
    auto interference_at = [&](const Point& cell) {
        if (!tc.interferer || cell == interferer_cell) return no_interference;
        return std::vector<double>{
            received_power_dbm(interferer_tx, path_loss_db(distance(tc.interferer_pos, cell)))};
    };
    auto evaluate = [&](const Point& p, const Point& cell) {
        LinkEval e;
        const double pl = path_loss_db(distance(p, cell));
        const std::vector<double> interf = interference_at(cell);
        e.tx_dbm = uplink_tx_power_dbm(pc, pl);
        e.sinr_db = sinr_db(received_power_dbm(e.tx_dbm, pl), interf, pc.noise_dbm);
        e.se = spectral_efficiency(e.sinr_db);
        double in_mw = dbm_to_mw(pc.noise_dbm);
        for (double i : interf) in_mw += dbm_to_mw(i);
        e.target = tx_power_for_target_sinr_dbm(tc.target_sinr_db, pl, mw_to_dbm(in_mw), pc.pmax_dbm);
        return e;
    };

    const std::size_t n = positions.size();
    std::vector<Column> cols{
        {"distance_m", {}},           {"path_pos_m", {}},         {"x_m", {}},
        {"y_m", {}},                  {"d_macro_m", {}},          {"d_small_m", {}},
        {"association", {}},          {"coupled_sinr_db", {}},    {"decoupled_sinr_db", {}},
        {"coupled_se", {}},           {"decoupled_se", {}},       {"coupled_tx_dbm", {}},
        {"decoupled_tx_dbm", {}},     {"coupled_target_tx_dbm", {}}, {"decoupled_target_tx_dbm", {}},
        {"coupled_target_capped", {}}, {"decoupled_target_capped", {}},
    };
    for (auto& c : cols) c.values.assign(n, 0.0);

    detail::parallel_for(n, [&](std::size_t j) {
        const double s = positions[j];
        const Point p = line.at(s);
        const Association assoc = classify_unbounded(p, layout, k);
        const Point& coupled_cell =
            assoc == Association::CoupledSmall ? layout.small_pos : layout.macro_pos;
        const Point& decoupled_cell =
            assoc == Association::CoupledMacro ? layout.macro_pos : layout.small_pos;
        const LinkEval c = evaluate(p, coupled_cell);
        const LinkEval d = evaluate(p, decoupled_cell);
        const double row[] = {s,
                              s - tc.start_m,
                              p.x,
                              p.y,
                              distance(p, layout.macro_pos),
                              distance(p, layout.small_pos),
                              static_cast<double>(assoc),
                              c.sinr_db,
                              d.sinr_db,
                              c.se,
                              d.se,
                              c.tx_dbm,
                              d.tx_dbm,
                              c.target.tx_dbm,
                              d.target.tx_dbm,
                              c.target.capped ? 1.0 : 0.0,
                              d.target.capped ? 1.0 : 0.0};
        for (std::size_t ci = 0; ci < cols.size(); ++ci) cols[ci].values[j] = row[ci];
    });

    const auto& pos = cols[0].values;
    for (double v : tc.speeds_mps) {
        Column t{"time_s_" + speed_label(v), {}};
        for (double s : pos) t.values.push_back((s - tc.start_m) / v);
        cols.push_back(std::move(t));
    }

    // Embedded checks: identical policies outside [B, C); decoupled never worse inside.
    const auto& cse = cols[9].values;
    const auto& dse = cols[10].values;
    const auto& ctx = cols[13].values;
    const auto& dtx = cols[14].values;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = pos[j];
        if (s < lm.b_m || s >= lm.c_m) {
            require(cse[j] == dse[j] && ctx[j] == dtx[j],
                    "coupled and decoupled policies differ outside the decoupling region at "
                        + num(s) + " m");
        } else if (!tc.interferer) {
            require(dse[j] >= cse[j],
                    "decoupled spectral efficiency below coupled at " + num(s) + " m");
            require(dtx[j] <= ctx[j],
                    "decoupled target power above coupled at " + num(s) + " m");
        }
    }

    ScenarioResult result{"transit", base_metadata(cfg, "transit"), std::move(cols)};
    result.metadata.emplace_back("dl_ratio_k", num(k));
    result.metadata.emplace_back("landmark_a_m", num(lm.a_m));
    result.metadata.emplace_back("landmark_b_m", num(lm.b_m));
    result.metadata.emplace_back("landmark_c_m", num(lm.c_m));
    result.metadata.emplace_back("landmark_d_m", num(lm.d_m));
    result.metadata.emplace_back("association_codes", "0=coupled-macro 1=decoupled 2=coupled-small");
    result.validate();
    return result;
}

// ---------------------------------------------------------------------------
// Interference zones
// ---------------------------------------------------------------------------

NetworkLayout zone_campaign_layout(const ScenarioConfig& cfg)
{
    NetworkLayout layout = cfg.layout;
    layout.macro_pos = {0.0, 0.0};
    layout.macro_radio.coverage_radius_m = cfg.zones.macro_radius_m;
    layout.small_pos = {cfg.zones.small_distance_m, 0.0};
    layout.validate();
    return layout;
}

Point zone_campaign_device(const ScenarioConfig& cfg, double distance_m)
{
    return {distance_m * std::cos(cfg.zones.device_bearing_rad),
            distance_m * std::sin(cfg.zones.device_bearing_rad)};
}

ScenarioResult run_zone_campaign(const ScenarioConfig& cfg)
{
    cfg.validate();
    const NetworkLayout layout = zone_campaign_layout(cfg);
    const ZoneCampaignConfig& zc = cfg.zones;

    std::vector<Column> cols{{"device_distance_m", {}}, {"lambda_dbm", {}},
                             {"d_macro_m", {}},         {"d_small_m", {}},
                             {"tx_coupled_dbm", {}},    {"tx_decoupled_dbm", {}},
                             {"radius_coupled_m", {}},  {"radius_decoupled_m", {}},
                             {"excess_area_m2", {}},    {"extra_pairs", {}}};

    PowerControlConfig db = cfg.pc;
    db.mode = FormulaMode::DbConsistent;

    for (double dist : zc.device_distances_m) {
        const Point p = zone_campaign_device(cfg, dist);
        double prev_lambda = std::numeric_limits<double>::quiet_NaN();
        double prev_a = 0.0;
        double prev_b = 0.0;
        for (double lambda : zc.thresholds_dbm) {
            D2DConfig d2d = cfg.d2d;
            d2d.lambda_dbm = lambda;
            InterferenceZone z;
            try {
                z = zone_pair(p, layout, cfg.pc, d2d);
            } catch (const PreconditionError& e) {
                throw AssertionFailure("zone device at " + num(dist) + " m: " + e.what());
            }
            const double dm = distance(p, layout.macro_pos);
            const double ds = distance(p, layout.small_pos);
            require(z.radius_decoupled_m < z.radius_coupled_m,
                    "decoupled zone not smaller than coupled zone at " + num(dist) + " m");
            if (!std::isnan(prev_lambda)) {
                // A lower threshold must give strictly larger zones, and vice versa.
                const bool grows = lambda < prev_lambda;
                require(grows ? (z.radius_coupled_m > prev_a && z.radius_decoupled_m > prev_b)
                              : (z.radius_coupled_m < prev_a && z.radius_decoupled_m < prev_b),
                        "zone radii are not monotone in the threshold");
            }
            prev_lambda = lambda;
            prev_a = z.radius_coupled_m;
            prev_b = z.radius_decoupled_m;

            const double area = excess_area_m2(z);
            const double row[] = {dist,
                                  lambda,
                                  dm,
                                  ds,
                                  uplink_tx_power_dbm(db, path_loss_db(dm)),
                                  uplink_tx_power_dbm(db, path_loss_db(ds)),
                                  z.radius_coupled_m,
                                  z.radius_decoupled_m,
                                  area,
                                  extra_pairs(area, d2d)};
            for (std::size_t ci = 0; ci < cols.size(); ++ci) cols[ci].values.push_back(row[ci]);
        }
    }

    ScenarioResult result{"zones", base_metadata(cfg, "zones"), std::move(cols)};
    result.metadata.emplace_back("dl_ratio_k", num(dl_constant_k(layout)));
    result.validate();
    return result;
}

// ---------------------------------------------------------------------------
// Region area
// ---------------------------------------------------------------------------

ScenarioResult run_region_campaign(const ScenarioConfig& cfg)
{
    cfg.validate();
    const NetworkLayout& layout = cfg.layout;
    const double k = dl_constant_k(layout);
    const AreaEstimate est = region_area_mc(layout, k, cfg.region.samples, cfg.seed);
    const Circle disc = apollonius_circle(layout, k);
    const double halfplane = ul_halfplane_disc_area_m2(layout);

    // The closed form holds while the Apollonius disc sits inside both the
    // uplink half-plane and the Macro coverage disc.
    const double ms = distance(layout.macro_pos, layout.small_pos);
    const double to_bisector =
        ((disc.center.x - layout.macro_pos.x) * (layout.small_pos.x - layout.macro_pos.x)
         + (disc.center.y - layout.macro_pos.y) * (layout.small_pos.y - layout.macro_pos.y))
            / ms
        - 0.5 * ms;
    const bool closed_form_valid =
        to_bisector >= disc.radius_m
        && distance(disc.center, layout.macro_pos) + disc.radius_m
               <= layout.macro_radio.coverage_radius_m;
    const double semi = closed_form_valid
                            ? halfplane - std::numbers::pi * disc.radius_m * disc.radius_m
                            : std::numeric_limits<double>::quiet_NaN();

    ScenarioResult result{"region", base_metadata(cfg, "region"), {}};
    result.columns = {{"dl_ratio_k", {k}},
                      {"apollonius_center_x_m", {disc.center.x}},
                      {"apollonius_center_y_m", {disc.center.y}},
                      {"apollonius_radius_m", {disc.radius_m}},
                      {"mc_area_m2", {est.area_m2}},
                      {"mc_std_error_m2", {est.std_error_m2}},
                      {"mc_samples", {static_cast<double>(est.samples)}},
                      {"mc_hits", {static_cast<double>(est.hits)}},
                      {"ul_halfplane_area_m2", {halfplane}},
                      {"semi_analytic_area_m2", {semi}}};
    result.validate();
    return result;
}

// ---------------------------------------------------------------------------
// Formula-mode comparison
// ---------------------------------------------------------------------------

ScenarioResult run_formula_comparison(const ScenarioConfig& cfg)
{
    cfg.validate();
    const CompareConfig& cc = cfg.compare;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<Column> cols{{"num_rbs", {}},
                             {"p0_dbm", {}},
                             {"alpha", {}},
                             {"d_m", {}},
                             {"d_s", {}},
                             {"ul_tx_m_db_dbm", {}},
                             {"ul_tx_m_literal_dbm", {}},
                             {"rx_m_db_mw", {}},
                             {"rx_m_literal_mw", {}},
                             {"tx_m_db_mw", {}},
                             {"tx_m_literal_mw", {}},
                             {"ratio_db", {}},
                             {"ratio_literal", {}},
                             {"saved_db_mw", {}},
                             {"saved_literal_mw", {}},
                             {"zone_a_m", {}},
                             {"zone_b_db_m", {}},
                             {"zone_b_literal_m", {}}};

    for (int rbs : cc.num_rbs) {
        for (double p0 : cc.p0s_dbm) {
            for (double alpha : cc.alphas) {
                PowerControlConfig db = cfg.pc;
                db.num_rbs = rbs;
                db.p0_dbm = p0;
                db.alpha = alpha;
                db.mode = FormulaMode::DbConsistent;
                PowerControlConfig lit = db;
                lit.mode = FormulaMode::PaperLiteral;
                // Uncapped copy: the exponent-form closed expressions have no Pmax.
                PowerControlConfig uncapped = db;
                uncapped.pmax_dbm = std::numeric_limits<double>::infinity();

                for (double dm : cc.distances_m) {
                    for (double ratio : cc.ds_ratios) {
                        const double ds = ratio * dm;
                        const double pl_m = path_loss_db(dm);
                        const double pl_s = path_loss_db(ds);
                        const double tx_m = uplink_tx_power_dbm(db, pl_m);
                        const double tx_s = uplink_tx_power_dbm(db, pl_s);
                        double a = nan;
                        double b_db = nan;
                        double b_lit = nan;
                        try {
                            a = zone_radius_m(tx_m, cfg.d2d.lambda_dbm);
                            b_db = zone_radius_m(tx_s, cfg.d2d.lambda_dbm);
                            b_lit = literal::decoupled_radius_closed_form(a, dm, ds, alpha);
                        } catch (const DegenerateZoneError&) {
                        }
                        const double row[] = {
                            static_cast<double>(rbs),
                            p0,
                            alpha,
                            dm,
                            ds,
                            tx_m,
                            uplink_tx_power_dbm(lit, pl_m),
                            dbm_to_mw(received_power_dbm(uplink_tx_power_dbm(uncapped, pl_m), pl_m)),
                            literal::rx_power_exponent_form(p0, alpha, dm),
                            dbm_to_mw(uplink_tx_power_dbm(uncapped, pl_m)),
                            literal::tx_power_exponent_form(p0, alpha, dm),
                            power_ratio(ds, dm, db),
                            power_ratio(ds, dm, lit),
                            power_saved_mw(dm, ds, db),
                            power_saved_mw(dm, ds, lit),
                            a,
                            b_db,
                            b_lit};
                        for (std::size_t ci = 0; ci < cols.size(); ++ci)
                            cols[ci].values.push_back(row[ci]);
                    }
                }
            }
        }
    }

    ScenarioResult result{"compare", base_metadata(cfg, "compare"), std::move(cols)};
    result.metadata.emplace_back(
        "grid", std::to_string(cc.num_rbs.size()) + "x" + std::to_string(cc.p0s_dbm.size()) + "x"
                    + std::to_string(cc.alphas.size()) + "x" + std::to_string(cc.distances_m.size())
                    + "x" + std::to_string(cc.ds_ratios.size()));
    result.validate();
    return result;
}

}  // namespace dude
