#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <treemap/treemap.hpp>

namespace treemap::cli {

namespace {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    os << content;
    os.flush();
    if (!os)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

void print_metrics(std::ostream& out, const std::string& label, const LayoutMetrics& m)
{
    out << label << ": leaves=" << m.n << " mean_ar=" << fmt6(m.mean_ar)
        << " weighted_mean_ar=" << fmt6(m.weighted_mean_ar) << " std_dev_ar=" << fmt6(m.std_dev_ar)
        << '\n';
}

std::string join(std::span<const double> xs)
{
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ", ";
        s += fmt6(xs[i]);
    }
    return s + "]";
}

const char* algo_name(Algo a) { return a == Algo::Plus ? "plus" : "squarified"; }

} // namespace

Region parse_canvas(const std::string& text)
{
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos)
        throw std::invalid_argument("canvas must be WxH, got '" + text + "'");
    auto parse = [&](std::string_view part) {
        double v = 0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, v);
        if (ec != std::errc{} || ptr != end || !(v > 0) || !std::isfinite(v))
            throw std::invalid_argument("canvas extents must be positive reals, got '" + text + "'");
        return v;
    };
    const std::string_view sv(text);
    return {0, 0, parse(sv.substr(0, x)), parse(sv.substr(x + 1))};
}

int cmd_layout(const LayoutOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const HierarchyNode tree = parse_hierarchy(read_file(opts.input));
        const LayoutResult layout = opts.algo == Algo::Plus ? layout_plus(tree, opts.canvas)
                                                            : layout_squarified(tree, opts.canvas);
        std::string doc;
        if (opts.format == OutputFormat::Svg) {
            RenderOptions ro;
            ro.label = true;
            doc = to_svg(layout, ro);
        } else {
            doc = layout_to_json(layout, algo_name(opts.algo)).dump(2) + "\n";
        }
        if (opts.out.empty() || opts.out == "-")
            out << doc;
        else
            write_file(opts.out, doc);

        if (!layout.leaves().empty())
            print_metrics(opts.out.empty() || opts.out == "-" ? err : out, algo_name(opts.algo),
                          compute_metrics(layout));
        return 0;
    } catch (const std::exception& e) {
        err << "layout: " << e.what() << '\n';
        return 1;
    }
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        BenchConfig cfg = opts.full ? BenchConfig::full() : BenchConfig::desk();
        if (!opts.sizes.empty())
            cfg.sizes = opts.sizes;
        if (opts.reps)
            cfg.reps = opts.reps;
        cfg.master_seed = opts.seed;
        cfg.canvas = opts.canvas;
        cfg.threads = opts.threads;
        cfg.check();

        std::filesystem::create_directories(opts.out_dir);
        const auto records = run_bench(cfg);
        const auto stats = aggregate_by_size(records);
        export_csv(std::span<const RunRecord>(records), opts.out_dir / "records.csv");
        export_csv(std::span<const AggregateStats>(stats), opts.out_dir / "stats.csv");
        export_json(stats, opts.out_dir / "stats.json");

        out << std::left << std::setw(7) << "size" << std::setw(18) << "metric" << std::right
            << std::setw(9) << "success" << std::setw(11) << "mean_impr" << std::setw(11)
            << "impr_succ" << std::setw(11) << "med_sq" << std::setw(11) << "med_plus"
            << std::setw(11) << "max_impr" << '\n';
        out << std::fixed;
        for (const auto& s : stats)
            for (const auto& m : s.metrics)
                out << std::left << std::setw(7) << s.size << std::setw(18) << to_string(m.metric)
                    << std::right << std::setprecision(1) << std::setw(8) << m.success_rate * 100
                    << '%' << std::setprecision(2) << std::setw(10) << m.mean_improvement_pct << '%'
                    << std::setw(10) << m.mean_improvement_success_only_pct << '%'
                    << std::setprecision(4) << std::setw(11) << m.median_sq << std::setw(11)
                    << m.median_plus << std::setprecision(2) << std::setw(10)
                    << m.max_improvement_pct << "%\n";
        out.unsetf(std::ios::floatfield);
        out << "wrote " << (opts.out_dir / "records.csv").string() << ", "
            << (opts.out_dir / "stats.csv").string() << ", " << (opts.out_dir / "stats.json").string()
            << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "bench: " << e.what() << '\n';
        return 1;
    }
}

int cmd_demo(const DemoOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const Region canvas{0, 0, 6, 4};
        std::vector<HierarchyNode> items;
        const double weights[] = {6, 6, 4, 3, 2, 2, 1};
        for (std::size_t i = 0; i < std::size(weights); ++i)
            items.push_back(HierarchyNode::leaf("e" + std::to_string(i + 1), weights[i]));
        const HierarchyNode tree = HierarchyNode::internal("R", std::move(items));

        out << "R = 6x4, E = [6, 6, 4, 3, 2, 2, 1]\n\nSquarified+ row decisions:\n";
        int row_no = 0;
        const RowTrace trace = [&](const RowDecision& d) {
            out << "  row " << ++row_no << ": " << join(d.areas) << " free=" << fmt6(d.free.width)
                << "x" << fmt6(d.free.height) << "@(" << fmt6(d.free.x) << "," << fmt6(d.free.y)
                << ") natural=" << to_string(d.natural) << " actualAR=" << fmt6(d.actual_ar)
                << " alternativeAR=" << fmt6(d.alternative_ar)
                << " inversion=" << (d.inverted ? "yes" : "no") << " fixed=" << to_string(d.chosen)
                << '\n';
        };
        const LayoutResult sq = layout_squarified(tree, canvas);
        const LayoutResult plus = layout_plus(tree, canvas, DefaultImprove{}, trace);

        out << "\nPlacements (squarified | plus):\n";
        for (std::size_t i = 1; i < sq.placements.size(); ++i) {
            const auto& a = sq.placements[i];
            const auto& b = plus.placements[i];
            auto rect = [](const Region& r) {
                return "(" + fmt6(r.x) + "," + fmt6(r.y) + "," + fmt6(r.width) + "," +
                       fmt6(r.height) + ")";
            };
            out << "  " << a.path << " w=" << fmt6(a.weight) << "  " << rect(a.region)
                << " AR=" << fmt6(aspect_ratio(a.region)) << "  |  " << rect(b.region)
                << " AR=" << fmt6(aspect_ratio(b.region)) << '\n';
        }
        out << '\n';
        print_metrics(out, "squarified", compute_metrics(sq));
        print_metrics(out, "plus      ", compute_metrics(plus));

        RenderOptions ro;
        ro.scale = 100;
        ro.stroke_width = 2;
        ro.label = true;
        std::filesystem::create_directories(opts.out_dir);
        write_file(opts.out_dir / "demo_squarified.svg", to_svg(sq, ro));
        write_file(opts.out_dir / "demo_plus.svg", to_svg(plus, ro));
        out << "wrote " << (opts.out_dir / "demo_squarified.svg").string() << ", "
            << (opts.out_dir / "demo_plus.svg").string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "demo: " << e.what() << '\n';
        return 1;
    }
}

} // namespace treemap::cli
