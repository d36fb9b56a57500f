// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <treemap/treemap.hpp>

#include "invariants.hpp"
#include "oracles.hpp"

using namespace treemap;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("[%s] AC%d %s -- %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct NeverImprove {
    bool operator()(double, double) const { return false; }
};

HierarchyNode example_tree()
{
    std::vector<HierarchyNode> kids;
    const double e[] = {6, 6, 4, 3, 2, 2, 1};
    for (int i = 0; i < 7; ++i)
        kids.push_back(HierarchyNode::leaf("e" + std::to_string(i + 1), e[i]));
    return HierarchyNode::internal("R", std::move(kids));
}

void worked_example()
{
    std::vector<RowDecision> rows;
    layout_plus(example_tree(), {0, 0, 6, 4}, DefaultImprove{},
                [&](const RowDecision& d) { rows.push_back(d); });
    bool ok = rows.size() >= 2;
    std::string detail = fmt("%zu rows", rows.size());
    if (ok) {
        const auto& r1 = rows[0];
        const auto& r2 = rows[1];
        ok = r1.areas == std::vector<double>{6, 6} && std::abs(r1.actual_ar - 1.5) <= 1e-9 &&
             std::abs(r1.alternative_ar - 1.5) <= 1e-9 && !r1.inverted &&
             r2.areas == std::vector<double>{4, 3} && r2.inverted &&
             std::abs(r2.actual_ar - 49.0 / 27) <= 1e-9 && std::abs(r2.alternative_ar - 64.0 / 49) <= 1e-9;
        detail = fmt("row1 [6,6] actual=%.12g alt=%.12g inverted=%d; row2 [4,3] actual=%.6g alt=%.6g inverted=%d",
                     r1.actual_ar, r1.alternative_ar, int(r1.inverted), r2.actual_ar, r2.alternative_ar,
                     int(r2.inverted));
    }
    report(1, ok, "worked example 6x4 [6,6,4,3,2,2,1]", detail);
}

void equivalence_fallback()
{
    std::mt19937_64 rng(2021);
    const Region canvas{0, 0, 1920, 1080};
    int mismatches = 0, natural_no_inversion = 0, natural_mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto tree = oracle::random_tree(rng, 200, 3);
        const auto sq = layout_squarified(tree, canvas);
        mismatches += !(layout_plus(tree, canvas, NeverImprove{}) == sq);
        bool inverted = false;
        const auto plus = layout_plus(tree, canvas, DefaultImprove{},
                                      [&](const RowDecision& d) { inverted |= d.inverted; });
        if (!inverted) {
            ++natural_no_inversion;
            natural_mismatches += !(plus == sq);
        }
    }
    report(2, mismatches == 0 && natural_mismatches == 0, "improve forced false is bit-identical to squarified",
           fmt("1000 trees, %d mismatches; %d trees without any inversion, %d mismatches", mismatches,
               natural_no_inversion, natural_mismatches));
}

void tiling_suite()
{
    std::mt19937_64 rng(7);
    const Region canvas{0, 0, 1920, 1080};
    int bad = 0, max_depth = 0;
    std::string first;
    for (int i = 0; i < 1000; ++i) {
        const auto tree = oracle::random_tree(rng, 200, 3);
        max_depth = std::max(max_depth, oracle::depth_of(tree));
        for (const auto& layout : {layout_squarified(tree, canvas), layout_plus(tree, canvas)}) {
            const auto problem = invariants::check_tiling(layout);
            if (!problem.empty()) {
                ++bad;
                if (first.empty())
                    first = problem;
            }
        }
    }
    report(3, bad == 0, "tiling: disjoint, area-conserving, contained",
           fmt("1000 trees x 2 algorithms, max depth %d, %d violations%s%s", max_depth, bad,
               first.empty() ? "" : ": ", first.c_str()));
}

std::vector<RunRecord> desk_records;
std::vector<AggregateStats> desk_stats;

void trend_reproduction()
{
    const auto cfg = BenchConfig::desk();
    const auto t0 = std::chrono::steady_clock::now();
    desk_records = run_bench(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    desk_stats = aggregate_by_size(desk_records);

    std::string rates;
    for (const auto& s : desk_stats)
        rates += fmt(" n=%zu: mean %.1f%% weighted %.1f%% sd %.1f%% impr %.2f%%;", s.size,
                     100 * s[Metric::MeanAR].success_rate, 100 * s[Metric::WeightedMeanAR].success_rate,
                     100 * s[Metric::StdDevAR].success_rate, s[Metric::MeanAR].mean_improvement_pct);
    std::printf("       desk bench (seed %llu, %zu reps, %.2f s):%s\n",
                static_cast<unsigned long long>(cfg.master_seed), cfg.reps, secs, rates.c_str());

    bool a = true, b = true, c = true, d = true;
    std::string da, db, dc, dd;
    double prev = INFINITY;
    for (const auto& s : desk_stats) {
        const double w = s[Metric::WeightedMeanAR].success_rate;
        const double m = s[Metric::MeanAR].success_rate;
        const double sd = s[Metric::StdDevAR].success_rate;
        const double impr = s[Metric::MeanAR].mean_improvement_pct;
        a &= w >= 0.99;
        da += fmt(" %zu:%.1f%%", s.size, 100 * w);
        if (s.size == 10)
            b &= m >= 0.90;
        if (s.size >= 500)
            b &= m >= 0.97;
        db += fmt(" %zu:%.1f%%", s.size, 100 * m);
        c &= impr < prev;
        if (s.size == 10)
            c &= impr >= 2.0 && impr <= 9.0;
        prev = impr;
        dc += fmt(" %zu:%.3f%%", s.size, impr);
        d &= sd >= 0.85;
        dd += fmt(" %zu:%.1f%%", s.size, 100 * sd);
    }
    report(4, a, "(a) weighted mean AR success >= 99% at every size", "got" + da);
    report(4, b, "(b) mean AR success >= 90% at 10 and >= 97% at sizes >= 500", "got" + db);
    report(4, c, "(c) mean AR improvement strictly decreasing, size 10 in [2%, 9%]", "got" + dc);
    report(4, d, "(d) std-dev success >= 85% at every size", "got" + dd);
    report(4, secs < 60, "runtime < 60 s", fmt("%.2f s", secs));
}

void median_direction()
{
    bool ok = true;
    std::string detail;
    for (const auto& s : desk_stats) {
        const auto& m = s[Metric::MeanAR];
        const auto& sd = s[Metric::StdDevAR];
        ok &= m.median_plus < m.median_sq && sd.median_plus < sd.median_sq;
        detail += fmt(" n=%zu: mean %.4f -> %.4f, sd %.4f -> %.4f;", s.size, m.median_sq, m.median_plus,
                      sd.median_sq, sd.median_plus);
    }
    report(5, ok, "median mean AR and median std-dev lower with plus (squarified -> plus)", detail);
}

void cost()
{
    using clock = std::chrono::steady_clock;
    const Region canvas{0, 0, 1920, 1080};
    double total_sq = 0, total_plus = 0, max_single = 0;
    const int runs = 50;
    for (int i = 0; i < runs; ++i) {
        const auto tree = gen_tree(4000, derive_seed(99, 4000, i));
        auto t0 = clock::now();
        const auto sq = layout_squarified(tree, canvas);
        auto t1 = clock::now();
        const auto plus = layout_plus(tree, canvas);
        auto t2 = clock::now();
        const double a = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double b = std::chrono::duration<double, std::milli>(t2 - t1).count();
        total_sq += a;
        total_plus += b;
        max_single = std::max({max_single, a, b});
        if (sq.placements.size() != plus.placements.size())
            std::abort();
    }
    const double ms_sq = total_sq / runs, ms_plus = total_plus / runs;
    report(6, ms_plus <= 2 * ms_sq && max_single < 50, "n=4000 cost: plus <= 2x squarified, single layout < 50 ms",
           fmt("mean squarified %.3f ms, plus %.3f ms (ratio %.2f), slowest single %.3f ms", ms_sq, ms_plus,
               ms_plus / ms_sq, max_single));
}

void metric_oracles()
{
    std::mt19937_64 rng(555);
    const Region canvas{0, 0, 1920, 1080};
    double worst_err = 0;
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const auto tree = oracle::random_tree(rng, 300, 3);
        const auto layout = i % 2 ? layout_plus(tree, canvas) : layout_squarified(tree, canvas);
        if (layout.leaves().empty())
            continue;
        // Re-read coordinates from the serialized text, not from the in-memory layout.
        const auto doc = nlohmann::json::parse(layout_to_json(layout, "x").dump());
        std::vector<double> ars, ws;
        for (const auto& [path, p] : doc["placements"].items()) {
            if (!p["leaf"].get<bool>())
                continue;
            ars.push_back(oracle::ar({p["x"], p["y"], p["w"], p["h"]}));
            ws.push_back(p["weight"]);
        }
        const double want[] = {oracle::mean(ars), oracle::weighted_mean(ars, ws), oracle::stddev(ars)};
        const double got[] = {mean_ar(layout), weighted_mean_ar(layout), std_dev_ar(layout)};
        for (int k = 0; k < 3; ++k)
            worst_err = std::max(worst_err, std::abs(got[k] - want[k]));
        ++checked;
    }
    report(7, worst_err <= 1e-9 && checked > 0, "metrics match brute force over serialized coordinates",
           fmt("%d layouts, max abs error %.3g", checked, worst_err));
}

void determinism()
{
    const auto dir = std::filesystem::temp_directory_path() / "treemap_acceptance";
    std::filesystem::create_directories(dir);
    auto cfg = BenchConfig::desk();
    export_csv(std::span<const RunRecord>(run_bench(cfg)), dir / "a.csv");
    cfg.threads = 4;
    export_csv(std::span<const RunRecord>(run_bench(cfg)), dir / "b.csv");
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    const auto a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
    std::filesystem::remove_all(dir);
    report(8, !a.empty() && a == b, "two bench runs give byte-identical records.csv",
           fmt("%zu bytes vs %zu bytes (second run on 4 threads)", a.size(), b.size()));
}

} // namespace

int main()
{
    try {
        worked_example();
        equivalence_fallback();
        tiling_suite();
        trend_reproduction();
        median_direction();
        cost();
        metric_oracles();
        determinism();
    } catch (const std::exception& e) {
        std::printf("[FAIL] aborted: %s\n", e.what());
        return 2;
    }
    std::printf("%d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
