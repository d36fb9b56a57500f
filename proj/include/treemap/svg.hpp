#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "squarified.hpp"

namespace treemap {

enum class ColorBy { Depth, WeightBucket, None };

struct RenderOptions {
    double scale = 1.0;
    double stroke_width = 1.0;
    bool label = false;
    ColorBy color_by = ColorBy::WeightBucket;
    double nest_inset = 0.0; // px removed from each side per nesting level

    void check() const
    {
        if (!(scale > 0) || !std::isfinite(scale))
            throw std::invalid_argument("render scale must be positive");
        if (!(stroke_width >= 0))
            throw std::invalid_argument("stroke width must be >= 0");
        if (!(nest_inset >= 0))
            throw std::invalid_argument("nest inset must be >= 0");
    }
};

namespace detail {

/// Shortest representation that round-trips.
inline std::string num(double v)
{
    if (v == 0)
        v = 0; // no "-0"
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string xml_escape(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string gray(int level)
{
    level = std::clamp(level, 0, 255);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
    return buf;
}

inline std::string fill_for(const Placement& p, const RenderOptions& opts, double max_leaf_weight)
{
    switch (opts.color_by) {
    case ColorBy::None:
        return p.leaf ? "#ffffff" : "none";
    case ColorBy::Depth:
        return gray(240 - 40 * p.depth);
    case ColorBy::WeightBucket: {
        if (!p.leaf)
            return "none";
        // one bucket per decade below the heaviest leaf; heavier is darker
        const double decades = std::log10(max_leaf_weight / p.weight);
        const int bucket = std::clamp(static_cast<int>(std::floor(decades)), 0, 5);
        return gray(112 + 24 * bucket);
    }
    }
    return "none";
}

} // namespace detail

/// SVG 1.1 document with one rect per placement, in pre-order.
inline std::string to_svg(const LayoutResult& layout, const RenderOptions& opts = {})
{
    using detail::num;
    opts.check();
    double max_w = 0;
    for (const auto& p : layout.placements)
        if (p.leaf)
            max_w = std::max(max_w, p.weight);

    const Region& c = layout.canvas;
    const double s = opts.scale;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(c.width * s)
       << "\" height=\"" << num(c.height * s) << "\" viewBox=\"" << num(c.x * s) << ' '
       << num(c.y * s) << ' ' << num(c.width * s) << ' ' << num(c.height * s) << "\">\n";

    for (const auto& p : layout.placements) {
        const double inset = opts.nest_inset * p.depth;
        const double w = std::max(0.0, p.region.width * s - 2 * inset);
        const double h = std::max(0.0, p.region.height * s - 2 * inset);
        const double x = p.region.x * s + std::min(inset, p.region.width * s / 2);
        const double y = p.region.y * s + std::min(inset, p.region.height * s / 2);
        os << "  <rect id=\"" << detail::xml_escape(p.path) << "\" x=\"" << num(x) << "\" y=\""
           << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" fill=\""
           << detail::fill_for(p, opts, max_w) << "\" stroke=\"#000000\" stroke-width=\""
           << num(opts.stroke_width) << "\"/>\n";
        if (opts.label && p.leaf) {
            const double font = std::max(1.0, std::min(w, h) / 4);
            const auto slash = p.path.rfind('/');
            const std::string name = slash == std::string::npos ? p.path : p.path.substr(slash + 1);
            os << "  <text x=\"" << num(x + w / 2) << "\" y=\"" << num(y + h / 2)
               << "\" font-size=\"" << num(font)
               << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
               << detail::xml_escape(name) << " (" << num(p.weight) << ")</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace treemap
