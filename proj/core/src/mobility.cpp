// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dude/errors.hpp"

namespace dude {

Rng device_rng(std::uint64_t master_seed, std::uint64_t device_index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(device_index),
                      static_cast<std::uint32_t>(device_index >> 32), 0x6d6f6269u};
    return Rng(seq);
}

void MobilityParams::validate() const
{
    if (!(step_mean_m > 0.0)) throw ValidationError("mobility step mean must be > 0");
    if (speed_classes_mps.empty()) throw ValidationError("at least one speed class is required");
    for (double v : speed_classes_mps)
        if (!(v > 0.0)) throw ValidationError("mobility speed means must be > 0");
    if (!(heading_halfwidth_rad > 0.0 && heading_halfwidth_rad <= std::numbers::pi))
        throw ValidationError("heading half-width must lie in (0, pi]");
    if (devices_per_class < 1) throw ValidationError("devices per class must be >= 1");
    if (!(max_time_s > 0.0)) throw ValidationError("mobility max time must be > 0");
    if (max_steps < 1) throw ValidationError("mobility max steps must be >= 1");
    if (!(start_x_min_m <= start_x_max_m) || !(start_y_min_m <= start_y_max_m))
        throw ValidationError("mobility start box is empty");
}

double sample_half_normal(double mean, Rng& rng)
{
    if (!(mean > 0.0)) throw DomainError("half-normal mean must be > 0");
    const double sigma = mean * std::sqrt(std::numbers::pi / 2.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    double z = 0.0;
    do {
        z = std::abs(normal(rng));
    } while (z == 0.0);
    return z * sigma;
}

Point advance(const Point& pos, const Point& target, double heading_offset_rad, double length_m)
{
    const double bearing = std::atan2(target.y - pos.y, target.x - pos.x);
    const double heading = bearing + heading_offset_rad;
    return {pos.x + length_m * std::cos(heading), pos.y + length_m * std::sin(heading)};
}

Step step(const Point& pos, const NetworkLayout& layout, const MobilityParams& params, Rng& rng)
{
    if (pos == layout.small_pos)
        throw PreconditionError("random walk step from the small cell position has no bearing");
    std::uniform_real_distribution<double> offset(-params.heading_halfwidth_rad,
                                                  params.heading_halfwidth_rad);
    const double heading_offset = offset(rng);
    const double length = sample_half_normal(params.step_mean_m, rng);
    return {advance(pos, layout.small_pos, heading_offset, length), length};
}

Point draw_start(const MobilityParams& params, Rng& rng)
{
    std::uniform_real_distribution<double> ux(params.start_x_min_m, params.start_x_max_m);
    std::uniform_real_distribution<double> uy(params.start_y_min_m, params.start_y_max_m);
    const double x = ux(rng);
    const double y = uy(rng);
    return {x, y};
}

Trajectory simulate_trajectory(const Point& start, const NetworkLayout& layout, double k,
                               const MobilityParams& params, double speed_mean_mps,
                               double max_time_s, Rng& rng)
{
    if (!layout.in_macro_coverage(start))
        throw OutOfCoverageError("trajectory start lies outside the Macro coverage disc");
    if (!(max_time_s > 0.0)) throw PreconditionError("max_time_s must be > 0");

    Trajectory traj;
    double t = 0.0;
    Point pos = start;
    Association assoc = classify_unbounded(pos, layout, k);
    traj.samples.push_back({t, pos, assoc});

    while (assoc != Association::CoupledSmall) {
        if (t >= max_time_s || traj.samples.size() > params.max_steps) {
            traj.timed_out = true;
            break;
        }
        const Step s = step(pos, layout, params, rng);
        const double speed = sample_half_normal(speed_mean_mps, rng);
        t += s.length_m / speed;
        pos = s.pos;

        const Association next = classify_unbounded(pos, layout, k);
        if ((assoc == Association::CoupledMacro && next == Association::CoupledSmall)
            || (assoc == Association::CoupledSmall && next == Association::CoupledMacro))
            ++traj.double_crossings;
        if (!layout.in_macro_coverage(pos)) ++traj.out_of_coverage;
        assoc = next;
        traj.samples.push_back({t, pos, assoc});
    }
    traj.reached_small = assoc == Association::CoupledSmall;
    return traj;
}

double decoupling_time_s(const Trajectory& traj)
{
    double total = 0.0;
    const auto& s = traj.samples;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i].assoc == Association::Decoupled) total += s[i + 1].time_s - s[i].time_s;
    return total;
}

namespace {

Point lerp(const Point& a, const Point& b, double f)
{
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

// Largest fraction f in [0, 1] (to ~1e-12) such that the prefix [0, f] keeps `assoc`,
// assuming the association along the segment changes monotonically.
double boundary_fraction(const Point& a, const Point& b, Association assoc_at_a,
                         const NetworkLayout& layout, double k)
{
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (classify_unbounded(lerp(a, b, mid), layout, k) == assoc_at_a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

double decoupling_time_refined_s(const Trajectory& traj, const NetworkLayout& layout, double k)
{
    double total = 0.0;
    const auto& s = traj.samples;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double dt = s[i + 1].time_s - s[i].time_s;
        const Association a0 = s[i].assoc;
        const Association a1 = s[i + 1].assoc;
        if (a0 == a1) {
            if (a0 == Association::Decoupled) total += dt;
            continue;
        }
        const double f_leave = boundary_fraction(s[i].pos, s[i + 1].pos, a0, layout, k);
        // Walking the segment backwards from the end locates the entry into a1.
        const double f_enter = 1.0 - boundary_fraction(s[i + 1].pos, s[i].pos, a1, layout, k);
        if (a0 == Association::Decoupled) total += f_leave * dt;
        if (a1 == Association::Decoupled) total += (1.0 - f_enter) * dt;
        if (f_enter > f_leave) {
            const Point mid = lerp(s[i].pos, s[i + 1].pos, 0.5 * (f_leave + f_enter));
            if (classify_unbounded(mid, layout, k) == Association::Decoupled)
                total += (f_enter - f_leave) * dt;
        }
    }
    return total;
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> values)
{
    if (values.empty()) throw DomainError("empirical CDF of an empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    if (std::any_of(sorted.begin(), sorted.end(), [](double v) { return std::isnan(v); }))
        throw DomainError("empirical CDF input contains NaN");
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    std::vector<CdfPoint> cdf;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        cdf.push_back({sorted[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

double cdf_at(std::span<const CdfPoint> cdf, double x) noexcept
{
    auto it = std::upper_bound(cdf.begin(), cdf.end(), x,
                               [](double v, const CdfPoint& p) { return v < p.value; });
    if (it == cdf.begin()) return 0.0;
    return std::prev(it)->probability;
}

}  // namespace dude
