#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <treemap/geometry.hpp>

namespace treemap::cli {

enum class Algo { Squarified, Plus };
enum class OutputFormat { Json, Svg };

struct LayoutOptions {
    std::filesystem::path input;
    Algo algo = Algo::Plus;
    Region canvas{0, 0, 1920, 1080};
    std::filesystem::path out;
    OutputFormat format = OutputFormat::Json;
};

struct BenchOptions {
    std::vector<std::size_t> sizes; // empty: profile default
    std::size_t reps = 0;           // 0: profile default
    std::uint64_t seed = 42;
    Region canvas{0, 0, 1920, 1080};
    std::filesystem::path out_dir = ".";
    bool full = false;
    unsigned threads = 1;
};

struct DemoOptions {
    std::filesystem::path out_dir = ".";
};

/// Parses "WxH" with positive reals; throws std::invalid_argument.
Region parse_canvas(const std::string& text);

int cmd_layout(const LayoutOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_demo(const DemoOptions& opts, std::ostream& out, std::ostream& err);

} // namespace treemap::cli
