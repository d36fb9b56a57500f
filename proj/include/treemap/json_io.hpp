#pragma once

// JSON documents: hierarchy input and layout output.

#include <string>

#include <json.hpp>

#include "hierarchy.hpp"
#include "metrics.hpp"
#include "squarified.hpp"

namespace treemap {

namespace detail {

inline HierarchyNode parse_node(const nlohmann::json& j, const std::string& parent, bool is_root)
{
    const std::string where = parent.empty() ? "<root>" : parent;
    if (!j.is_object())
        throw validation_error("node under '" + where + "' is not an object");
    if (!j.contains("name") || !j["name"].is_string())
        throw validation_error("node under '" + where + "' lacks a string \"name\"");
    HierarchyNode node;
    node.name = j["name"].get<std::string>();
    const std::string path = child_path(parent, node.name);

    const bool has_weight = j.contains("weight");
    const bool has_children = j.contains("children");
    if (has_weight && has_children)
        throw validation_error("node '" + path + "' has both \"weight\" and \"children\"");
    if (!has_weight && !has_children)
        throw validation_error("node '" + path + "' needs either \"weight\" or \"children\"");

    if (has_weight) {
        const auto& w = j["weight"];
        if (!w.is_number())
            throw validation_error("node '" + path + "' has a non-numeric weight");
        node.weight = w.get<double>();
        if (!(*node.weight > 0))
            throw validation_error("leaf '" + path + "' has non-positive weight " +
                                   std::to_string(*node.weight));
    } else {
        const auto& cs = j["children"];
        if (!cs.is_array())
            throw validation_error("node '" + path + "' has non-array \"children\"");
        if (cs.empty() && !is_root)
            throw validation_error("internal node '" + path + "' has no children");
        for (const auto& c : cs)
            node.children.push_back(parse_node(c, path, false));
    }
    return node;
}

} // namespace detail

/// Parses and validates a hierarchy document; errors name the node path.
inline HierarchyNode parse_hierarchy(const nlohmann::json& doc)
{
    HierarchyNode root = detail::parse_node(doc, "", true);
    validate(root);
    return root;
}

inline HierarchyNode parse_hierarchy(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
    return parse_hierarchy(doc);
}

inline nlohmann::ordered_json metrics_to_json(const LayoutMetrics& m)
{
    return {{"mean_ar", m.mean_ar},
            {"weighted_mean_ar", m.weighted_mean_ar},
            {"std_dev_ar", m.std_dev_ar},
            {"n", m.n}};
}

/// Placements keyed by node path, in pre-order. Leaf metrics are included
/// when the layout has leaves.
inline nlohmann::ordered_json layout_to_json(const LayoutResult& layout, const std::string& algo)
{
    nlohmann::ordered_json j;
    j["algo"] = algo;
    j["canvas"] = {{"x", layout.canvas.x},
                   {"y", layout.canvas.y},
                   {"w", layout.canvas.width},
                   {"h", layout.canvas.height}};
    nlohmann::ordered_json placements = nlohmann::ordered_json::object();
    for (const auto& p : layout.placements)
        placements[p.path] = {{"x", p.region.x},   {"y", p.region.y},
                              {"w", p.region.width}, {"h", p.region.height},
                              {"depth", p.depth},    {"leaf", p.leaf},
                              {"weight", p.weight}};
    j["placements"] = std::move(placements);
    if (!layout.leaves().empty())
        j["metrics"] = metrics_to_json(compute_metrics(layout));
    return j;
}

inline LayoutResult layout_from_json(const nlohmann::ordered_json& j)
{
    LayoutResult out;
    try {
        const auto& c = j.at("canvas");
        out.canvas = {c.at("x").get<double>(), c.at("y").get<double>(), c.at("w").get<double>(),
                      c.at("h").get<double>()};
        for (const auto& [path, p] : j.at("placements").items())
            out.placements.push_back({path, p.at("depth").get<int>(), p.at("leaf").get<bool>(),
                                      p.at("weight").get<double>(),
                                      {p.at("x").get<double>(), p.at("y").get<double>(),
                                       p.at("w").get<double>(), p.at("h").get<double>()}});
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("malformed layout document: ") + e.what());
    }
    return out;
}

} // namespace treemap
