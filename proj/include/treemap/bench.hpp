#pragma once

// Paired comparison harness: random depth-1 trees, both layouts on the same
// tree, per-run metric records and per-size aggregates.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "hierarchy.hpp"
#include "metrics.hpp"
#include "plus.hpp"
#include "squarified.hpp"

namespace treemap {

class bench_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchConfig {
    std::vector<std::size_t> sizes{10, 50, 100, 500, 1000, 2000, 3000, 4000};
    std::size_t reps = 500;
    Region canvas{0, 0, 1920, 1080};
    std::uint64_t weight_min = 1;
    std::uint64_t weight_max = 1'000'000;
    std::uint64_t master_seed = 42;
    unsigned threads = 1; // output is identical for any thread count

    /// Full comparison matrix: 8 sizes x 500 repetitions.
    static BenchConfig full() { return {}; }

    /// Reduced matrix that runs in seconds.
    static BenchConfig desk()
    {
        BenchConfig cfg;
        cfg.sizes = {10, 100, 1000};
        cfg.reps = 200;
        return cfg;
    }

    void check() const
    {
        if (sizes.empty())
            throw bench_error("bench config needs at least one size");
        for (auto s : sizes)
            if (s == 0)
                throw bench_error("tree sizes must be >= 1");
        if (reps == 0)
            throw bench_error("reps must be >= 1");
        if (!valid(canvas) || canvas.degenerate())
            throw bench_error("canvas must have positive finite extents");
        if (weight_min == 0 || weight_min > weight_max)
            throw bench_error("weight range must satisfy 1 <= min <= max");
    }
};

// Randomness: std::mt19937_64 (its output sequence is fixed by the C++
// standard) seeded through SplitMix64, with our own unbiased bounded draw,
// because std::uniform_int_distribution differs between standard libraries.

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for repetition `rep` of tree size `size`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t size, std::uint64_t rep)
{
    return splitmix64(splitmix64(splitmix64(master) ^ size) ^ rep);
}

/// Uniform integer in [lo, hi] by rejection sampling.
inline std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max())
        return rng();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + x % range;
}

/// Depth-1 tree "root" with leaves "n0".."n<size-1>" and integer weights.
inline HierarchyNode gen_tree(std::size_t size, std::uint64_t seed,
                              std::uint64_t weight_min = 1, std::uint64_t weight_max = 1'000'000)
{
    if (size == 0)
        throw bench_error("tree size must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<HierarchyNode> leaves;
    leaves.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        leaves.push_back(HierarchyNode::leaf(
            "n" + std::to_string(i), static_cast<double>(uniform_int(rng, weight_min, weight_max))));
    return HierarchyNode::internal("root", std::move(leaves));
}

/// FNV-1a over the leaf weights in pre-order.
inline std::uint64_t weight_hash(std::span<const double> weights)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double w : weights) {
        auto bits = std::bit_cast<std::uint64_t>(w);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

inline std::uint64_t tree_hash(const HierarchyNode& tree)
{
    std::vector<double> ws;
    auto walk = [&](auto&& self, const HierarchyNode& n) -> void {
        if (n.is_leaf())
            ws.push_back(*n.weight);
        for (const auto& c : n.children)
            self(self, c);
    };
    walk(walk, tree);
    return weight_hash(ws);
}

inline RunRecord run_once(std::size_t size, std::size_t rep, const BenchConfig& cfg)
{
    const std::uint64_t seed = derive_seed(cfg.master_seed, size, rep);
    const HierarchyNode tree = gen_tree(size, seed, cfg.weight_min, cfg.weight_max);
    const std::uint64_t hash = tree_hash(tree);
    try {
        const LayoutResult sq = layout_squarified(tree, cfg.canvas);
        const LayoutResult plus = layout_plus(tree, cfg.canvas);
        if (weight_hash(leaf_weights(sq)) != hash || weight_hash(leaf_weights(plus)) != hash)
            throw bench_error("layouts were not computed on the generated tree");
        return {size, rep, seed, hash, compute_metrics(sq), compute_metrics(plus)};
    } catch (const std::exception& e) {
        throw bench_error("run failed for size " + std::to_string(size) + " rep " +
                          std::to_string(rep) + " seed " + std::to_string(seed) + ": " + e.what());
    }
}

/// `reps` paired runs for one tree size, in repetition order.
inline std::vector<RunRecord> run_case(std::size_t size, std::size_t reps, const BenchConfig& cfg)
{
    cfg.check();
    if (size == 0)
        throw bench_error("tree size must be >= 1");
    std::vector<RunRecord> out(reps);
    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(reps)));
    if (threads == 1) {
        for (std::size_t i = 0; i < reps; ++i)
            out[i] = run_once(size, i, cfg);
        return out;
    }

    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < reps; i += threads)
                        out[i] = run_once(size, i, cfg);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

inline std::vector<RunRecord> run_bench(const BenchConfig& cfg)
{
    cfg.check();
    std::vector<RunRecord> all;
    for (auto size : cfg.sizes) {
        auto recs = run_case(size, cfg.reps, cfg);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    return all;
}

struct MetricStats {
    Metric metric;
    double success_rate = 0;
    double mean_improvement_pct = 0;              // over all runs
    double mean_improvement_success_only_pct = 0; // over successful runs; 0 if none
    double median_sq = 0;
    double median_plus = 0;
    double max_improvement_pct = 0;
};

struct AggregateStats {
    std::size_t size = 0;
    std::size_t reps = 0;
    std::array<MetricStats, 3> metrics{};

    const MetricStats& operator[](Metric m) const { return metrics[static_cast<std::size_t>(m)]; }
};

/// Lower median for even counts.
inline double lower_median(std::vector<double> v)
{
    if (v.empty())
        throw metrics_error("median of empty sample");
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

inline AggregateStats aggregate(std::span<const RunRecord> records)
{
    if (records.empty())
        throw bench_error("cannot aggregate an empty record set");
    AggregateStats out;
    out.size = records.front().size;
    out.reps = records.size();
    for (const auto& r : records)
        if (r.size != out.size)
            throw bench_error("aggregate expects records of a single tree size");

    for (Metric m : kAllMetrics) {
        MetricStats s{m};
        std::vector<double> sq, plus;
        double sum = 0, sum_success = 0;
        std::size_t successes = 0;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& r : records) {
            const auto c = compare(r, m);
            sum += c.improvement_pct;
            if (c.success) {
                ++successes;
                sum_success += c.improvement_pct;
            }
            best = std::max(best, c.improvement_pct);
            sq.push_back(select(r.squarified, m));
            plus.push_back(select(r.plus, m));
        }
        const auto n = static_cast<double>(records.size());
        s.success_rate = static_cast<double>(successes) / n;
        s.mean_improvement_pct = sum / n;
        s.mean_improvement_success_only_pct =
            successes ? sum_success / static_cast<double>(successes) : 0.0;
        s.max_improvement_pct = best;
        s.median_sq = lower_median(std::move(sq));
        s.median_plus = lower_median(std::move(plus));
        out.metrics[static_cast<std::size_t>(m)] = s;
    }
    return out;
}

/// Groups by size (ascending) and aggregates each group.
inline std::vector<AggregateStats> aggregate_by_size(std::span<const RunRecord> records)
{
    std::vector<RunRecord> sorted(records.begin(), records.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const RunRecord& a, const RunRecord& b) { return a.size < b.size; });
    std::vector<AggregateStats> out;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].size == sorted[i].size)
            ++j;
        out.push_back(aggregate(std::span<const RunRecord>(sorted).subspan(i, j - i)));
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV / JSON export

inline constexpr const char* kRecordsHeader = "size,rep,seed,algo,mean_ar,weighted_mean_ar,std_dev_ar";
inline constexpr const char* kStatsHeader =
    "size,metric,success_rate,mean_improvement_pct,median_sq,median_plus,max_improvement_pct";

inline std::string fmt6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline void write_records_csv(std::ostream& os, std::span<const RunRecord> records)
{
    std::vector<const RunRecord*> rows;
    for (const auto& r : records)
        rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [](const RunRecord* a, const RunRecord* b) {
        return a->size != b->size ? a->size < b->size : a->rep < b->rep;
    });
    os << kRecordsHeader << '\n';
    auto line = [&](const RunRecord& r, const char* algo, const LayoutMetrics& m) {
        os << r.size << ',' << r.rep << ',' << r.seed << ',' << algo << ',' << fmt6(m.mean_ar) << ','
           << fmt6(m.weighted_mean_ar) << ',' << fmt6(m.std_dev_ar) << '\n';
    };
    for (const auto* r : rows) {
        line(*r, "plus", r->plus);
        line(*r, "squarified", r->squarified);
    }
}

inline void write_stats_csv(std::ostream& os, std::span<const AggregateStats> stats)
{
    os << kStatsHeader << '\n';
    for (const auto& s : stats)
        for (const auto& m : s.metrics)
            os << s.size << ',' << to_string(m.metric) << ',' << fmt6(m.success_rate) << ','
               << fmt6(m.mean_improvement_pct) << ',' << fmt6(m.median_sq) << ','
               << fmt6(m.median_plus) << ',' << fmt6(m.max_improvement_pct) << '\n';
}

inline nlohmann::json stats_to_json(std::span<const AggregateStats> stats)
{
    auto arr = nlohmann::json::array();
    for (const auto& s : stats) {
        nlohmann::json metrics = nlohmann::json::object();
        for (const auto& m : s.metrics)
            metrics[std::string(to_string(m.metric))] = {
                {"success_rate", m.success_rate},
                {"mean_improvement_pct", m.mean_improvement_pct},
                {"mean_improvement_success_only_pct", m.mean_improvement_success_only_pct},
                {"median_sq", m.median_sq},
                {"median_plus", m.median_plus},
                {"max_improvement_pct", m.max_improvement_pct},
            };
        arr.push_back({{"size", s.size}, {"reps", s.reps}, {"metrics", metrics}});
    }
    return arr;
}

namespace detail {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& write)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw bench_error("cannot open '" + path.string() + "' for writing");
    write(os);
    os.flush();
    if (!os)
        throw bench_error("write failed for '" + path.string() + "'");
}

} // namespace detail

inline void export_csv(std::span<const RunRecord> records, const std::filesystem::path& path)
{
    detail::write_file(path, [&](std::ostream& os) { write_records_csv(os, records); });
}

inline void export_csv(std::span<const AggregateStats> stats, const std::filesystem::path& path)
{
    detail::write_file(path, [&](std::ostream& os) { write_stats_csv(os, stats); });
}

inline void export_json(std::span<const AggregateStats> stats, const std::filesystem::path& path)
{
    detail::write_file(path, [&](std::ostream& os) { os << stats_to_json(stats).dump(2) << '\n'; });
}

/// Parses a records CSV back into paired records (tree hashes are not stored).
inline std::vector<RunRecord> parse_records_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != kRecordsHeader)
        throw bench_error("records CSV: unexpected header");
    std::vector<RunRecord> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        if (f.size() != 7)
            throw bench_error("records CSV line " + std::to_string(lineno) + ": expected 7 fields");
        try {
            const std::size_t size = std::stoull(f[0]);
            const std::size_t rep = std::stoull(f[1]);
            const std::uint64_t seed = std::stoull(f[2]);
            const LayoutMetrics m{std::stod(f[4]), std::stod(f[5]), std::stod(f[6]), size};
            if (out.empty() || out.back().size != size || out.back().rep != rep)
                out.push_back({size, rep, seed, 0, {}, {}});
            if (f[3] == "plus")
                out.back().plus = m;
            else if (f[3] == "squarified")
                out.back().squarified = m;
            else
                throw bench_error("unknown algo '" + f[3] + "'");
        } catch (const std::logic_error& e) {
            throw bench_error("records CSV line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

} // namespace treemap
