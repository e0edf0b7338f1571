#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sinesum/errors.hpp"

namespace sinesum {

// One axis of a parameter grid; the sweep runs the kernel at every point of
// the cartesian product of the axes, in lexicographic order (first axis
// slowest).
struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

enum class SweepFormat { JsonLines, Csv };

struct SweepConfig {
    std::string kernel;           // registered kernel id
    std::vector<SweepAxis> axes;
    int threads = 0;              // 0 = SINESUM_THREADS / hardware
    std::string out_path;         // optional: write rendered output here
    std::string baseline_path;    // optional: compare against this file
    bool freeze = false;          // write baseline_path from this run
    std::uint64_t seed = 0;       // base seed; each row derives its own
    SweepFormat format = SweepFormat::JsonLines;
};

struct SweepRow {
    std::size_t index = 0;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::pair<std::string, double>> metrics;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::string rendered;      // full output, formatted per cfg.format
    std::size_t compared = 0;  // rows checked against the baseline
    bool baseline_written = false;
};

// Rows are computed in parallel but rendered strictly in grid order with a
// fixed numeric format, so output bytes do not depend on the thread count.
// Each row's random state is seeded from (cfg.seed, row index) only.
// Throws BaselineMismatch when a baseline is given and any metric differs
// beyond the kernel's per-metric tolerance.
SweepResult run_sweep(const SweepConfig& cfg);

// Registered kernel ids (e.g. "tail_sup", "classify_random", "master_random",
// "hitset_random", "sine_floor_random").
std::vector<std::string> sweep_kernel_ids();

// Per-metric relative comparison tolerance for a kernel (used for baseline
// comparison); metrics not listed use the default 1e-9.
double sweep_metric_tolerance(const std::string& kernel, const std::string& metric);

} // namespace sinesum
