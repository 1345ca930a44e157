// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_GEOMETRY_HPP
#define DUDE_GEOMETRY_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

#include "dude/linkbudget.hpp"

namespace dude {

/// Planar position in meters.
struct Point
{
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// One Macro and one small cell.
struct NetworkLayout
{
    Point macro_pos{0.0, 0.0};
    CellRadioConfig macro_radio{40.0, 1000.0};
    Point small_pos{500.0, 0.0};
    CellRadioConfig small_radio{20.0, 35.0};

    /// Throws ValidationError: co-located cells, small cell outside Macro coverage.
    void validate() const;

    bool in_macro_coverage(const Point& p) const noexcept
    {
        return distance(p, macro_pos) <= macro_radio.coverage_radius_m;
    }
};

enum class Association : std::uint8_t
{
    CoupledMacro, ///< UL and DL with the Macro
    Decoupled,    ///< DL from the Macro, UL to the small cell
    CoupledSmall, ///< UL and DL with the small cell
};

std::string_view to_string(Association a) noexcept;

struct Circle
{
    Point center;
    double radius_m = 0.0;
};

/// Ratio K with dM < K dS <=> Macro downlink power dominates, derived by
/// equating downlink received powers under the 35 + 30 log10(d) model with
/// zero noise: K = 10^((P_macro - P_small) / 30).
/// Throws DomainError when macro_dl_dbm <= small_dl_dbm.
double dl_constant_k(double macro_dl_dbm, double small_dl_dbm);

inline double dl_constant_k(const NetworkLayout& layout)
{
    return dl_constant_k(layout.macro_radio.dl_tx_power_dbm, layout.small_radio.dl_tx_power_dbm);
}

/// Uplink favours the small cell: dist(p, macro) > dist(p, small).
bool ul_prefers_small(const Point& p, const NetworkLayout& layout) noexcept;

/// Downlink favours the Macro: dist(p, macro) < k * dist(p, small).
bool dl_prefers_macro(const Point& p, const NetworkLayout& layout, double k) noexcept;

/// Association of an in-coverage point. Throws OutOfCoverageError outside the Macro disc.
Association classify(const Point& p, const NetworkLayout& layout, double k);

/// Same rule without the coverage check.
Association classify_unbounded(const Point& p, const NetworkLayout& layout, double k) noexcept;

/// The locus dist(q, macro) = k * dist(q, small); requires k > 1.
Circle apollonius_circle(const NetworkLayout& layout, double k);

struct AreaEstimate
{
    double area_m2 = 0.0;
    double std_error_m2 = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Monte Carlo area of the decoupling region inside the Macro coverage disc.
///
/// Points are drawn uniformly in the disc (square rejection). Work is split
/// into fixed-size batches whose generators are seeded from (seed, batch
/// index), so the estimate does not depend on how batches are scheduled.
/// Requires n_samples >= 1000.
AreaEstimate region_area_mc(const NetworkLayout& layout, double k, std::uint64_t n_samples,
                            std::uint64_t seed);

/// Area of {p in Macro disc : dist(p, macro) > dist(p, small)} (a circular segment).
double ul_halfplane_disc_area_m2(const NetworkLayout& layout);

}  // namespace dude

#endif  // DUDE_GEOMETRY_HPP
