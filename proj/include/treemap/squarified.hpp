#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "hierarchy.hpp"

namespace treemap {

/// One placed node. `path` is the slash-joined name path from the root.
struct Placement {
    std::string path;
    int depth = 0;
    bool leaf = false;
    double weight = 0; // leaf weight, or the sum of descendant leaf weights
    Region region;

    bool operator==(const Placement&) const = default;
};

/// Placements in pre-order of the hierarchy (parents before children,
/// siblings in input order).
struct LayoutResult {
    Region canvas;
    std::vector<Placement> placements;

    const Placement* find(const std::string& path) const
    {
        auto it = std::find_if(placements.begin(), placements.end(),
                               [&](const Placement& p) { return p.path == path; });
        return it == placements.end() ? nullptr : &*it;
    }

    std::vector<const Placement*> leaves() const
    {
        std::vector<const Placement*> out;
        for (const auto& p : placements)
            if (p.leaf)
                out.push_back(&p);
        return out;
    }

    bool operator==(const LayoutResult&) const = default;
};

/// Scales weights so they sum to the region's area.
inline std::vector<double> normalize_areas(std::span<const double> weights, const Region& region)
{
    if (weights.empty())
        return {};
    if (region.degenerate())
        throw geometry_error("cannot normalize areas into a degenerate region");
    double total = 0;
    for (double w : weights) {
        if (!(w > 0))
            throw validation_error("non-positive weight " + std::to_string(w));
        total += w;
    }
    const double scale = region.area() / total;
    std::vector<double> out;
    out.reserve(weights.size());
    for (double w : weights)
        out.push_back(w * scale);
    return out;
}

/// Running sum/min/max of a row, enough to evaluate `worst` in O(1).
struct RowStats {
    double sum = 0;
    double max = 0;
    double min = std::numeric_limits<double>::infinity();
    std::size_t count = 0;

    RowStats with(double area) const
    {
        return {sum + area, std::max(max, area), std::min(min, area), count + 1};
    }

    /// Highest aspect ratio among the row's rectangles when laid along a side
    /// of length w. An empty row is infinitely bad so any first item improves it.
    double worst(double w) const
    {
        if (count == 0 || !(w > 0))
            return std::numeric_limits<double>::infinity();
        const double w2 = w * w;
        const double s2 = sum * sum;
        return std::max(w2 * max / s2, s2 / (w2 * min));
    }
};

inline double worst(std::span<const double> row, double w)
{
    RowStats stats;
    for (double a : row)
        stats = stats.with(a);
    return stats.worst(w);
}

/// Fixes a row as a strip along the edge selected by `d`: items are placed one
/// after another along the row axis, rects[i] receiving row[i]. Returns the
/// free region left after removing the strip.
///
/// With `fill_rest` set the row is known to hold every remaining item, so the
/// strip takes the whole free region and items split the row axis by their
/// share of the row sum. This is the same geometry up to rounding, without the
/// drift accumulated over earlier rows.
inline Region layoutrow(std::span<const double> row, const Region& region, Direction d,
                        std::span<Region> rects, bool fill_rest = false)
{
    if (region.degenerate())
        throw geometry_error("cannot lay out a row in a degenerate region");
    const double length = row_axis_length(region, d);
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    const double thickness = fill_rest ? strip_axis_length(region, d) : sum / length;
    const double start = d == Direction::TopToBottom ? region.y : region.x;
    double offset = start;
    double cumulative = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        double extent;
        if (fill_rest) {
            cumulative += row[i];
            const double end = start + length * (cumulative / sum);
            extent = end - offset;
        } else {
            extent = row[i] / thickness;
        }
        rects[i] = d == Direction::TopToBottom ? Region{region.x, offset, thickness, extent}
                                               : Region{offset, region.y, extent, thickness};
        offset += extent;
    }
    return shrink(region, d, thickness);
}

struct RowLayout {
    std::vector<Region> rects;
    Region rest;
};

inline RowLayout layoutrow(std::span<const double> row, const Region& region, Direction d,
                           bool fill_rest = false)
{
    RowLayout out{std::vector<Region>(row.size()), {}};
    out.rest = layoutrow(row, region, d, out.rects, fill_rest);
    return out;
}

/// Greedy row construction over areas sorted in non-increasing order. Items are
/// appended to the current row while the row's worst aspect ratio (along the
/// smaller side of the free region) does not get worse; ties accept the item.
/// Each finished row is handed to `fix(row, offset, free)`, where `offset` is
/// the index of the row's first item, and must return the remaining free region.
template <class RowFixer>
void squarify(std::span<const double> areas, Region free, RowFixer&& fix)
{
    std::size_t begin = 0;
    while (begin < areas.size()) {
        const double w = smaller_side(free);
        RowStats row;
        double current = row.worst(w);
        std::size_t end = begin;
        while (end < areas.size()) {
            const RowStats next = row.with(areas[end]);
            const double candidate = next.worst(w);
            if (!(candidate <= current))
                break;
            row = next;
            current = candidate;
            ++end;
        }
        free = fix(areas.subspan(begin, end - begin), begin, free);
        begin = end;
    }
}

namespace detail {

/// Shared recursive driver. `make_fixer(region)` returns a callable
/// `Region(std::span<const double> row, const Region& free, std::span<Region> out, bool last)`
/// used for every row at one hierarchy level; `last` marks the row holding the
/// final items.
template <class FixerFactory>
void layout_children(const HierarchyNode& node, const std::string& path, int depth,
                     const Region& region, FixerFactory& make_fixer, std::vector<Placement>& out)
{
    const std::size_t n = node.children.size();
    if (n == 0)
        return;

    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i)
        weights[i] = total_weight(node.children[i]);
    const std::vector<double> areas = normalize_areas(weights, region);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return areas[a] > areas[b]; });

    std::vector<double> sorted(n);
    for (std::size_t i = 0; i < n; ++i)
        sorted[i] = areas[order[i]];

    std::vector<Region> sorted_rects(n);
    auto fixer = make_fixer(region);
    squarify(std::span<const double>(sorted), region,
             [&](std::span<const double> row, std::size_t offset, const Region& free) {
                 return fixer(row, free, std::span<Region>(sorted_rects).subspan(offset, row.size()),
                              offset + row.size() == n);
             });

    std::vector<Region> rects(n);
    for (std::size_t i = 0; i < n; ++i)
        rects[order[i]] = sorted_rects[i];

    for (std::size_t i = 0; i < n; ++i) {
        const auto& child = node.children[i];
        const auto cpath = child_path(path, child.name);
        out.push_back({cpath, depth + 1, child.is_leaf(), weights[i], rects[i]});
        layout_children(child, cpath, depth + 1, rects[i], make_fixer, out);
    }
}

template <class FixerFactory>
LayoutResult layout_tree(const HierarchyNode& tree, const Region& canvas, FixerFactory make_fixer)
{
    if (!valid(canvas) || canvas.degenerate())
        throw geometry_error("canvas must have positive finite extents");
    validate(tree);
    LayoutResult result;
    result.canvas = canvas;
    result.placements.reserve(leaf_count(tree) + 1);
    result.placements.push_back({tree.name, 0, tree.is_leaf(), total_weight(tree), canvas});
    layout_children(tree, tree.name, 0, canvas, make_fixer, result.placements);
    return result;
}

} // namespace detail

/// Classic squarified treemap: every row is laid along the smaller side of the
/// free region.
inline LayoutResult layout_squarified(const HierarchyNode& tree, const Region& canvas)
{
    return detail::layout_tree(tree, canvas, [](const Region&) {
        return [](std::span<const double> row, const Region& free, std::span<Region> out, bool last) {
            return layoutrow(row, free, natural_direction(free), out, last);
        };
    });
}

} // namespace treemap
