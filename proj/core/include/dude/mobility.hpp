// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_MOBILITY_HPP
#define DUDE_MOBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "dude/geometry.hpp"

namespace dude {

using Rng = std::mt19937_64;

/// Independent generator for one device, derived from (master seed, device index).
/// Speed classes share it, so the spatial walk of device i is the same in every class.
Rng device_rng(std::uint64_t master_seed, std::uint64_t device_index);

/// Random walk drifting towards the small cell. Step lengths and speeds are
/// half-normal, parameterized by their mean.
struct MobilityParams
{
    double step_mean_m = 10.0;
    std::vector<double> speed_classes_mps{20.0 / 3.6, 30.0 / 3.6, 50.0 / 3.6};
    double heading_halfwidth_rad = std::numbers::pi / 4.0;
    int devices_per_class = 100;
    double max_time_s = 1e6;
    std::size_t max_steps = 100000;
    /// Start positions are uniform in this box (meters).
    double start_x_min_m = -200.0;
    double start_x_max_m = 0.0;
    double start_y_min_m = -200.0;
    double start_y_max_m = 200.0;
    /// Split sample intervals at region boundaries by bisection when measuring decoupling time.
    bool refine_crossings = false;

    void validate() const;
};

struct TrajectorySample
{
    double time_s = 0.0;
    Point pos;
    Association assoc = Association::CoupledMacro;
};

struct Trajectory
{
    std::vector<TrajectorySample> samples;
    bool reached_small = false;
    bool timed_out = false;
    /// Steps that jumped straight between CoupledMacro and CoupledSmall.
    std::size_t double_crossings = 0;
    /// Vertices that fell outside the Macro coverage disc.
    std::size_t out_of_coverage = 0;
};

/// |Z| * mean * sqrt(pi/2), Z standard normal; never returns 0.
double sample_half_normal(double mean, Rng& rng);

/// `pos` moved by `length` along the bearing to `target` rotated by `heading_offset_rad`.
Point advance(const Point& pos, const Point& target, double heading_offset_rad, double length_m);

struct Step
{
    Point pos;
    double length_m = 0.0;
};

/// One walk step: heading = bearing to the small cell + U(-hw, hw), half-normal length.
/// Throws PreconditionError when pos is the small cell position.
Step step(const Point& pos, const NetworkLayout& layout, const MobilityParams& params, Rng& rng);

Point draw_start(const MobilityParams& params, Rng& rng);

/// Walks until the device is CoupledSmall or `max_time_s` / `params.max_steps` is reached.
/// Each step lasts step_length / speed with speed ~ half-normal(speed_mean_mps).
Trajectory simulate_trajectory(const Point& start, const NetworkLayout& layout, double k,
                               const MobilityParams& params, double speed_mean_mps,
                               double max_time_s, Rng& rng);

/// Time spent Decoupled, with the association held constant from one sample to the next.
double decoupling_time_s(const Trajectory& traj);

/// Like decoupling_time_s, but intervals whose end points differ in association are split
/// at the boundary crossings found by bisection on the straight segment.
double decoupling_time_refined_s(const Trajectory& traj, const NetworkLayout& layout, double k);

struct CdfPoint
{
    double value = 0.0;
    double probability = 0.0;
};

/// Right-continuous step function: one point per distinct value, F = #(x_i <= value) / n.
/// Throws DomainError on empty input or NaN.
std::vector<CdfPoint> empirical_cdf(std::span<const double> values);

/// Evaluates a step CDF produced by empirical_cdf.
double cdf_at(std::span<const CdfPoint> cdf, double x) noexcept;

}  // namespace dude

#endif  // DUDE_MOBILITY_HPP
