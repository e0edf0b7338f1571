#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sinesum/errors.hpp"
#include "sinesum/sweep.hpp"

using namespace sinesum;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

SweepConfig base_cfg(const std::string& kernel) {
    SweepConfig cfg;
    cfg.kernel = kernel;
    cfg.seed = 42;
    return cfg;
}

} // namespace

TEST_SUITE("sweep") {

TEST_CASE("registered kernels") {
    auto ids = sweep_kernel_ids();
    REQUIRE(ids.size() == 5);
    CHECK(ids[0] == "tail_sup");
    CHECK(ids[1] == "classify_random");
    CHECK(ids[2] == "master_random");
    CHECK(ids[3] == "hitset_random");
    CHECK(ids[4] == "sine_floor_random");
}

TEST_CASE("grid order is lexicographic with the first axis slowest") {
    auto cfg = base_cfg("classify_random");
    cfg.axes = {{"m", {4096.0, 16384.0}}, {"rep", {0.0, 1.0, 2.0}}};
    auto res = run_sweep(cfg);
    REQUIRE(res.rows.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(res.rows[i].index == i);
        CHECK(res.rows[i].params[0].first == "m");
        CHECK(res.rows[i].params[0].second == (i < 3 ? 4096.0 : 16384.0));
        CHECK(res.rows[i].params[1].second == (double)(i % 3));
    }
}

TEST_CASE("rendered output is byte-identical across thread counts") {
    for (const char* kernel : {"hitset_random", "sine_floor_random"}) {
        auto cfg = base_cfg(kernel);
        cfg.axes = {{"rep", {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0}}};
        cfg.threads = 1;
        auto one = run_sweep(cfg);
        cfg.threads = 4;
        auto four = run_sweep(cfg);
        REQUIRE(one.rendered == four.rendered);
        CHECK(one.rendered.size() > 0);
    }
}

TEST_CASE("row seeds depend on the row index, not on execution order") {
    auto cfg = base_cfg("sine_floor_random");
    cfg.axes = {{"count", {8.0}}, {"rep", {0.0, 1.0}}};
    auto res = run_sweep(cfg);
    REQUIRE(res.rows.size() == 2);
    // different rows draw different instances
    CHECK(res.rows[0].metrics[0].second != res.rows[1].metrics[0].second);
    // a different base seed changes the drawn instances
    cfg.seed = 43;
    auto other = run_sweep(cfg);
    CHECK(other.rows[0].metrics[0].second != res.rows[0].metrics[0].second);
}

TEST_CASE("json lines format") {
    auto cfg = base_cfg("hitset_random");
    cfg.axes = {{"P", {128.0}}, {"rep", {0.0, 1.0}}};
    auto res = run_sweep(cfg);
    std::istringstream in(res.rendered);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        CHECK(line.rfind("{\"schema\":\"sinesum/1\",\"kernel\":\"hitset_random\"", 0) == 0);
        CHECK(line.back() == '}');
        ++lines;
    }
    CHECK(lines == 2);
}

TEST_CASE("csv format carries a header and one row per grid point") {
    auto cfg = base_cfg("sine_floor_random");
    cfg.axes = {{"count", {8.0, 12.0}}, {"rep", {0.0}}};
    cfg.format = SweepFormat::Csv;
    auto res = run_sweep(cfg);
    std::istringstream in(res.rendered);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "index,count,rep,sum,floor,q,wsum,wfloor,holds");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("baseline freeze and compare round-trip in both formats") {
    for (auto format : {SweepFormat::JsonLines, SweepFormat::Csv}) {
        std::string path = "sweep_baseline_roundtrip.tmp";
        auto cfg = base_cfg("hitset_random");
        cfg.axes = {{"P", {128.0, 256.0}}, {"rep", {0.0, 1.0}}};
        cfg.format = format;
        cfg.baseline_path = path;
        cfg.freeze = true;
        auto frozen = run_sweep(cfg);
        CHECK(frozen.baseline_written);
        CHECK(slurp(path) == frozen.rendered);

        cfg.freeze = false;
        auto replay = run_sweep(cfg);
        CHECK(replay.compared == 4);
        std::remove(path.c_str());
    }
}

TEST_CASE("baseline mismatch is detected") {
    std::string path = "sweep_baseline_mismatch.tmp";
    auto cfg = base_cfg("sine_floor_random");
    cfg.axes = {{"count", {8.0}}, {"rep", {0.0, 1.0}}};
    cfg.baseline_path = path;
    cfg.freeze = true;
    auto frozen = run_sweep(cfg);
    cfg.freeze = false;

    SUBCASE("exact-metric perturbation") {
        // q is integer-valued and compared with zero tolerance
        std::string text = frozen.rendered;
        auto pos = text.find("\"q\":");
        REQUIRE(pos != std::string::npos);
        text[pos + 4] = text[pos + 4] == '1' ? '2' : '1';
        spit(path, text);
        CHECK_THROWS_AS(run_sweep(cfg), BaselineMismatch);
    }
    SUBCASE("row count change") {
        std::string text = frozen.rendered;
        text += text.substr(0, text.find('\n') + 1);
        spit(path, text);
        CHECK_THROWS_AS(run_sweep(cfg), BaselineMismatch);
    }
    SUBCASE("missing baseline file is a precondition error") {
        std::remove(path.c_str());
        CHECK_THROWS_AS(run_sweep(cfg), PreconditionViolation);
    }
    std::remove(path.c_str());
}

TEST_CASE("per-metric tolerances") {
    CHECK(sweep_metric_tolerance("classify_random", "verdict") == 0.0);
    CHECK(sweep_metric_tolerance("hitset_random", "hits") == 0.0);
    CHECK(sweep_metric_tolerance("hitset_random", "K_formula") == 0.0);
    CHECK(sweep_metric_tolerance("sine_floor_random", "q") == 0.0);
    CHECK(sweep_metric_tolerance("tail_sup", "sup_abs") == 1e-9);
    CHECK(sweep_metric_tolerance("master_random", "lhs") == 1e-9);
}

TEST_CASE("random kernels produce valid instances") {
    auto cfg = base_cfg("hitset_random");
    cfg.axes = {{"P", {128.0, 256.0}}, {"rep", {0.0, 1.0, 2.0}}};
    auto res = run_sweep(cfg);
    for (const auto& row : res.rows)
        for (const auto& [name, v] : row.metrics)
            if (name == "holds") CHECK(v == 1.0);

    cfg = base_cfg("sine_floor_random");
    cfg.axes = {{"count", {2.0, 8.0, 24.0}}, {"rep", {0.0, 1.0, 2.0, 3.0}}};
    res = run_sweep(cfg);
    for (const auto& row : res.rows)
        for (const auto& [name, v] : row.metrics)
            if (name == "holds") CHECK(v == 1.0);
}

TEST_CASE("invalid configurations are rejected") {
    auto cfg = base_cfg("no_such_kernel");
    cfg.axes = {{"rep", {0.0}}};
    CHECK_THROWS_AS(run_sweep(cfg), PreconditionViolation);

    cfg = base_cfg("tail_sup");
    cfg.axes = {{"L", {}}};
    CHECK_THROWS_AS(run_sweep(cfg), PreconditionViolation);

    cfg = base_cfg("tail_sup");
    cfg.axes = {};
    cfg.freeze = true; // freeze without a baseline path
    CHECK_THROWS_AS(run_sweep(cfg), PreconditionViolation);
}

} // TEST_SUITE
