#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv)
{
    using namespace treemap::cli;

    CLI::App app{"Squarified and Squarified+ treemap layouts"};
    app.require_subcommand(1);

    LayoutOptions lay;
    std::string lay_canvas = "1920x1080";
    auto* layout = app.add_subcommand("layout", "Lay out a hierarchy JSON document");
    layout->add_option("input", lay.input, "Hierarchy JSON file")->required()->check(CLI::ExistingFile);
    layout->add_option("--algo", lay.algo, "Layout algorithm")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Algo>{{"squarified", Algo::Squarified}, {"plus", Algo::Plus}}));
    layout->add_option("--canvas", lay_canvas, "Canvas size WxH");
    layout->add_option("--out", lay.out, "Output file (default: standard output)");
    layout->add_option("--format", lay.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::Json}, {"svg", OutputFormat::Svg}}));

    BenchOptions bench;
    std::string bench_canvas = "1920x1080";
    auto* bench_cmd = app.add_subcommand("bench", "Paired comparison benchmark");
    bench_cmd->add_option("--sizes", bench.sizes, "Tree sizes (leaf counts)")->delimiter(',');
    bench_cmd->add_option("--reps", bench.reps, "Repetitions per size");
    bench_cmd->add_option("--seed", bench.seed, "Master seed");
    bench_cmd->add_option("--canvas", bench_canvas, "Canvas size WxH");
    bench_cmd->add_option("--out", bench.out_dir, "Output directory");
    bench_cmd->add_flag("--full", bench.full, "Full matrix: 8 sizes x 500 reps");
    bench_cmd->add_option("--threads", bench.threads, "Worker threads")->check(CLI::PositiveNumber);

    DemoOptions demo;
    auto* demo_cmd = app.add_subcommand("demo", "Worked 6x4 example with row trace and SVGs");
    demo_cmd->add_option("--out", demo.out_dir, "Output directory for SVGs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*layout) {
            lay.canvas = parse_canvas(lay_canvas);
            return cmd_layout(lay, std::cout, std::cerr);
        }
        if (*bench_cmd) {
            bench.canvas = parse_canvas(bench_canvas);
            return cmd_bench(bench, std::cout, std::cerr);
        }
        return cmd_demo(demo, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
