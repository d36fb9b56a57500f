#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace treemap {

/// Raised for geometric misuse: degenerate rectangles, over-long strips.
class geometry_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Relative tolerance used for all floating-point comparisons.
inline constexpr double kRelEps = 1e-9;

inline bool approx_equal(double a, double b, double rel = kRelEps)
{
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Axis-aligned rectangle. (x, y) is the top-left corner; y grows downward.
struct Region {
    double x = 0;
    double y = 0;
    double width = 0;
    double height = 0;

    double area() const { return width * height; }
    double right() const { return x + width; }
    double bottom() const { return y + height; }
    bool degenerate() const { return !(width > 0) || !(height > 0); }

    bool operator==(const Region&) const = default;
};

inline bool valid(const Region& r)
{
    return std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.width) &&
           std::isfinite(r.height) && r.width >= 0 && r.height >= 0;
}

inline Region transpose(const Region& r) { return {r.y, r.x, r.height, r.width}; }

/// Axis along which a row's items follow one another.
///   TopToBottom: items stacked vertically in a strip flush with the left edge.
///   LeftToRight: items side by side in a strip flush with the top edge.
enum class Direction { LeftToRight, TopToBottom };

inline Direction invert(Direction d)
{
    return d == Direction::LeftToRight ? Direction::TopToBottom : Direction::LeftToRight;
}

inline const char* to_string(Direction d)
{
    return d == Direction::LeftToRight ? "left-to-right" : "top-to-bottom";
}

inline double smaller_side(const Region& r) { return std::min(r.width, r.height); }
inline double bigger_side(const Region& r) { return std::max(r.width, r.height); }

/// Longer side over shorter side; throws for a rectangle with a zero side.
inline double aspect_ratio(const Region& r)
{
    if (r.degenerate())
        throw geometry_error("aspect ratio undefined for degenerate rectangle " +
                             std::to_string(r.width) + "x" + std::to_string(r.height));
    return bigger_side(r) / smaller_side(r);
}

/// Rows go along the smaller side. Square regions resolve to TopToBottom.
inline Direction natural_direction(const Region& r)
{
    return r.height <= r.width ? Direction::TopToBottom : Direction::LeftToRight;
}

/// Length of the side a row laid in direction d runs along.
inline double row_axis_length(const Region& r, Direction d)
{
    return d == Direction::TopToBottom ? r.height : r.width;
}

/// Extent perpendicular to the row axis, i.e. the room available for the strip.
inline double strip_axis_length(const Region& r, Direction d)
{
    return d == Direction::TopToBottom ? r.width : r.height;
}

/// Removes a strip of the given thickness from the edge a row in direction d
/// is anchored to. Overshoot within rounding noise (relative to the region's
/// size) is clamped.
inline Region shrink(const Region& r, Direction d, double thickness)
{
    const double extent = strip_axis_length(r, d);
    if (!(thickness >= 0))
        throw geometry_error("negative strip thickness " + std::to_string(thickness));
    if (thickness > extent) {
        if (thickness - extent > kRelEps * std::max({1.0, r.width, r.height}))
            throw geometry_error("strip thickness " + std::to_string(thickness) +
                                 " exceeds available extent " + std::to_string(extent));
        thickness = extent;
    }
    Region out = r;
    if (d == Direction::TopToBottom) {
        out.x += thickness;
        out.width = extent - thickness;
    } else {
        out.y += thickness;
        out.height = extent - thickness;
    }
    return out;
}

/// Area of the intersection of two rectangles (0 when they only touch).
inline double overlap_area(const Region& a, const Region& b)
{
    const double w = std::min(a.right(), b.right()) - std::max(a.x, b.x);
    const double h = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
    return (w > 0 && h > 0) ? w * h : 0.0;
}

/// True if inner lies within outer, allowing `tol` slack per coordinate.
inline bool contains(const Region& outer, const Region& inner, double tol = kRelEps)
{
    const double slack = tol * std::max({1.0, bigger_side(outer), std::abs(outer.x), std::abs(outer.y)});
    return inner.x >= outer.x - slack && inner.y >= outer.y - slack &&
           inner.right() <= outer.right() + slack && inner.bottom() <= outer.bottom() + slack;
}

} // namespace treemap
