// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include "dude/geometry.hpp"

#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dude/detail/parallel.hpp"
#include "dude/errors.hpp"

namespace dude {

void NetworkLayout::validate() const
{
    macro_radio.validate();
    small_radio.validate();
    if (!std::isfinite(macro_pos.x) || !std::isfinite(macro_pos.y) || !std::isfinite(small_pos.x)
        || !std::isfinite(small_pos.y))
        throw ValidationError("cell positions must be finite");
    if (macro_pos == small_pos) throw ValidationError("Macro and small cell are co-located");
    if (!in_macro_coverage(small_pos))
        throw ValidationError("small cell lies outside the Macro coverage disc");
}

std::string_view to_string(Association a) noexcept
{
    switch (a) {
        case Association::CoupledMacro: return "coupled-macro";
        case Association::Decoupled: return "decoupled";
        case Association::CoupledSmall: return "coupled-small";
    }
    return "unknown";
}

double dl_constant_k(double macro_dl_dbm, double small_dl_dbm)
{
    if (!(macro_dl_dbm > small_dl_dbm))
        throw DomainError("Macro downlink power must exceed the small cell's ("
                          + std::to_string(macro_dl_dbm) + " <= " + std::to_string(small_dl_dbm)
                          + " dBm): no Macro-dominant downlink region exists");
    return std::pow(10.0, (macro_dl_dbm - small_dl_dbm) / 30.0);
}

bool ul_prefers_small(const Point& p, const NetworkLayout& layout) noexcept
{
    return distance(p, layout.macro_pos) > distance(p, layout.small_pos);
}

bool dl_prefers_macro(const Point& p, const NetworkLayout& layout, double k) noexcept
{
    return distance(p, layout.macro_pos) < k * distance(p, layout.small_pos);
}

Association classify_unbounded(const Point& p, const NetworkLayout& layout, double k) noexcept
{
    if (!ul_prefers_small(p, layout)) return Association::CoupledMacro;
    return dl_prefers_macro(p, layout, k) ? Association::Decoupled : Association::CoupledSmall;
}

Association classify(const Point& p, const NetworkLayout& layout, double k)
{
    if (!layout.in_macro_coverage(p))
        throw OutOfCoverageError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y)
                                 + ") is outside the Macro coverage disc");
    return classify_unbounded(p, layout, k);
}

Circle apollonius_circle(const NetworkLayout& layout, double k)
{
    if (!(k > 1.0)) throw DomainError("Apollonius circle needs k > 1");
    const double k2 = k * k;
    const double denom = k2 - 1.0;
    const Point& m = layout.macro_pos;
    const Point& s = layout.small_pos;
    return Circle{{(k2 * s.x - m.x) / denom, (k2 * s.y - m.y) / denom},
                  k * distance(m, s) / denom};
}

double ul_halfplane_disc_area_m2(const NetworkLayout& layout)
{
    const double r = layout.macro_radio.coverage_radius_m;
    const double h = 0.5 * distance(layout.macro_pos, layout.small_pos);
    if (h >= r) return 0.0;
    return r * r * std::acos(h / r) - h * std::sqrt(r * r - h * h);
}

namespace {

constexpr std::uint64_t kBatchSize = 1u << 16;

std::uint64_t count_region_hits(const NetworkLayout& layout, double k, std::uint64_t n,
                                std::uint64_t seed, std::uint64_t batch)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    std::mt19937_64 rng(seq);
    const double r = layout.macro_radio.coverage_radius_m;
    std::uniform_real_distribution<double> coord(-r, r);

    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        double dx = 0.0;
        double dy = 0.0;
        do {
            dx = coord(rng);
            dy = coord(rng);
        } while (dx * dx + dy * dy > r * r);
        const Point p{layout.macro_pos.x + dx, layout.macro_pos.y + dy};
        if (classify_unbounded(p, layout, k) == Association::Decoupled) ++hits;
    }
    return hits;
}

}  // namespace

AreaEstimate region_area_mc(const NetworkLayout& layout, double k, std::uint64_t n_samples,
                            std::uint64_t seed)
{
    if (n_samples < 1000) throw PreconditionError("region_area_mc needs at least 1000 samples");
    layout.validate();
    if (!(k > 1.0)) throw DomainError("region_area_mc needs k > 1");

    const std::uint64_t batches = (n_samples + kBatchSize - 1) / kBatchSize;
    std::vector<std::uint64_t> hits(batches, 0);
    detail::parallel_for(batches, [&](std::size_t b) {
        const std::uint64_t begin = b * kBatchSize;
        const std::uint64_t n = std::min(kBatchSize, n_samples - begin);
        hits[b] = count_region_hits(layout, k, n, seed, b);
    });

    std::uint64_t total = 0;
    for (auto h : hits) total += h;

    const double r = layout.macro_radio.coverage_radius_m;
    const double disc = std::numbers::pi * r * r;
    const double p = static_cast<double>(total) / static_cast<double>(n_samples);
    return AreaEstimate{disc * p, disc * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples)),
                        total, n_samples};
}

}  // namespace dude
