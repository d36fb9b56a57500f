#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace treemap {

/// Input rejected before layout; the message names the offending node path.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weighted tree node. Leaves carry a weight; internal nodes carry children and
/// their weight is always derived from the leaves below them.
struct HierarchyNode {
    std::string name;
    std::optional<double> weight;
    std::vector<HierarchyNode> children;

    static HierarchyNode leaf(std::string name, double weight)
    {
        return HierarchyNode{std::move(name), weight, {}};
    }

    static HierarchyNode internal(std::string name, std::vector<HierarchyNode> children)
    {
        return HierarchyNode{std::move(name), std::nullopt, std::move(children)};
    }

    bool is_leaf() const { return children.empty() && weight.has_value(); }
};

inline std::string child_path(const std::string& parent, const std::string& name)
{
    return parent.empty() ? name : parent + "/" + name;
}

inline double total_weight(const HierarchyNode& node)
{
    if (node.children.empty())
        return node.weight.value_or(0.0);
    double sum = 0;
    for (const auto& c : node.children)
        sum += total_weight(c);
    return sum;
}

inline std::size_t leaf_count(const HierarchyNode& node)
{
    if (node.children.empty())
        return node.weight ? 1 : 0;
    std::size_t n = 0;
    for (const auto& c : node.children)
        n += leaf_count(c);
    return n;
}

namespace detail {

inline void validate_node(const HierarchyNode& node, const std::string& path, bool is_root)
{
    if (node.children.empty()) {
        if (!node.weight) {
            if (is_root)
                return; // empty tree
            throw validation_error("leaf '" + path + "' has no weight");
        }
        const double w = *node.weight;
        if (!std::isfinite(w) || !(w > 0))
            throw validation_error("leaf '" + path + "' has non-positive weight " + std::to_string(w));
        return;
    }
    if (node.weight)
        throw validation_error("internal node '" + path + "' must not carry a weight");
    std::unordered_set<std::string> seen;
    for (const auto& c : node.children) {
        const auto cpath = child_path(path, c.name);
        if (c.name.empty())
            throw validation_error("node under '" + path + "' has an empty name");
        if (!seen.insert(c.name).second)
            throw validation_error("duplicate sibling name '" + cpath + "'");
        validate_node(c, cpath, false);
    }
}

} // namespace detail

/// Checks the structural rules; throws validation_error naming the node path.
inline void validate(const HierarchyNode& root)
{
    if (root.name.empty())
        throw validation_error("root node has an empty name");
    detail::validate_node(root, root.name, true);
}

} // namespace treemap
