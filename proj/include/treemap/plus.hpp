#pragma once

// Squarified+ : squarified layout where each finished row is also evaluated
// along the bigger side of the free region, and the drawing direction is
// inverted for that row when the alternative is closer to square.

#include <cassert>
#include <cmath>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

#include "geometry.hpp"
#include "squarified.hpp"

namespace treemap {

/// True when `alternative` is strictly closer to 1 than `actual`, i.e.
/// |actual - 1| / |alternative - 1| > 1. A perfectly square alternative wins
/// against any non-square actual row. Ratios within kRelEps of 1 count as ties
/// (a row filling the whole free region evaluates to the same value both ways).
inline bool improve(double actual_ar, double alternative_ar)
{
    const double actual_dev = std::abs(actual_ar - 1.0);
    const double alternative_dev = std::abs(alternative_ar - 1.0);
    if (alternative_dev == 0.0)
        return actual_dev > 0.0;
    return actual_dev / alternative_dev > 1.0 + kRelEps;
}

struct DirectionState {
    Direction current;

    explicit DirectionState(const Region& canvas) : current(natural_direction(canvas)) {}
    explicit DirectionState(Direction d) : current(d) {}
};

inline void invert_direction(DirectionState& s) { s.current = invert(s.current); }

/// Record of one row decision, exposed for tracing.
struct RowDecision {
    std::vector<double> areas;
    Region free;           // free region before the row is fixed
    double actual_ar;      // worst along the smaller side
    double alternative_ar; // worst along the bigger side
    Direction natural;
    Direction chosen;
    bool inverted;
};

using RowTrace = std::function<void(const RowDecision&)>;

struct DefaultImprove {
    bool operator()(double actual, double alternative) const { return improve(actual, alternative); }
};

/// Fixes a locally optimal row, inverting the direction first if the row laid
/// along the bigger side has a better worst aspect ratio. The direction is
/// re-derived from the free region's shape before each row.
template <class Improve = DefaultImprove>
Region validate_into(std::span<const double> row, const Region& free, DirectionState& state,
                     std::span<Region> rects, Improve&& improves = {}, const RowTrace* trace = nullptr,
                     bool fill_rest = false)
{
    state.current = natural_direction(free);
    const double actual_ar = worst(row, smaller_side(free));
    const double alternative_ar = worst(row, bigger_side(free));
    const Direction natural = state.current;
    const bool inverted = improves(actual_ar, alternative_ar);
    if (inverted)
        invert_direction(state);

    if constexpr (std::is_same_v<std::decay_t<Improve>, DefaultImprove>)
        assert((inverted ? alternative_ar : actual_ar) <=
               (inverted ? actual_ar : alternative_ar) * (1 + kRelEps));

    if (trace && *trace)
        (*trace)(RowDecision{{row.begin(), row.end()}, free, actual_ar, alternative_ar, natural,
                             state.current, inverted});
    return layoutrow(row, free, state.current, rects, fill_rest);
}

template <class Improve = DefaultImprove>
RowLayout validate(std::span<const double> row, const Region& free, DirectionState& state,
                   Improve&& improves = {})
{
    RowLayout out{std::vector<Region>(row.size()), {}};
    out.rest = validate_into(row, free, state, std::span<Region>(out.rects), improves);
    return out;
}

/// Squarified+ layout. `improves` decides inversion per row and can be
/// replaced (e.g. by a predicate that never fires); `trace`, if set, receives
/// every row decision in layout order.
template <class Improve = DefaultImprove>
LayoutResult layout_plus(const HierarchyNode& tree, const Region& canvas, Improve improves = {},
                         const RowTrace& trace = {})
{
    return detail::layout_tree(tree, canvas, [&](const Region& region) {
        return [&, state = DirectionState(region)](std::span<const double> row, const Region& free,
                                                   std::span<Region> out, bool last) mutable {
            return validate_into(row, free, state, out, improves, &trace, last);
        };
    });
}

} // namespace treemap
