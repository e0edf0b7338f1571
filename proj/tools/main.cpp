// Command-line workbench over the sinesum library: exponential sums,
// index classification, hit counting, series sup statistics, block
// decompositions, worked-example verification, and deterministic sweeps.
//
// Exit codes: 0 = all checked assertions hold, 1 = an assertion failed
// (the failing record is emitted), 2 = usage or precondition error.
//
// Output is JSON lines on stdout; each record carries the schema version
// and a "check" tag naming the assertion it reports on.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sinesum/blocks.hpp"
#include "sinesum/counting.hpp"
#include "sinesum/diophantine.hpp"
#include "sinesum/errors.hpp"
#include "sinesum/polynomial.hpp"
#include "sinesum/precision.hpp"
#include "sinesum/sequences.hpp"
#include "sinesum/series.hpp"
#include "sinesum/sweep.hpp"
#include "sinesum/weyl.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sinesum;

constexpr const char* kSchema = "sinesum/1";

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json record(const char* check) {
    json j;
    j["schema"] = kSchema;
    j["check"] = check;
    return j;
}

// ---- value mini-language ---------------------------------------------------
// decimal        parsed at the default working precision
// a/b            exact rational
// 2pi:a/b        exact rational multiple of 2*pi (enables exact reduction)
// phi, sqrt2     classic irrationals at the default working precision
PrecisionReal parse_real_spec(const std::string& spec) {
    long bits = default_precision_bits();
    double tiny = std::ldexp(1.0, -(int)std::min<long>(bits - 4, 900));
    if (spec == "phi") {
        BigFloat r = BigFloat::sqrt(BigFloat((long long)5, bits), bits);
        BigFloat v = BigFloat::div(BigFloat::add(BigFloat((long long)1, bits), r, bits),
                                   BigFloat((long long)2, bits), bits);
        return PrecisionReal(std::move(v), tiny);
    }
    if (spec == "sqrt2") {
        BigFloat v = BigFloat::sqrt(BigFloat((long long)2, bits), bits);
        return PrecisionReal(std::move(v), tiny);
    }
    if (spec.rfind("2pi:", 0) == 0) {
        std::string body = spec.substr(4);
        long long a = 0, b = 1;
        auto slash = body.find('/');
        a = std::stoll(slash == std::string::npos ? body : body.substr(0, slash));
        if (slash != std::string::npos) b = std::stoll(body.substr(slash + 1));
        if (b <= 0) throw PreconditionViolation("denominator must be positive: " + spec);
        return PrecisionReal::two_pi_times(Rat(a, b));
    }
    auto slash = spec.find('/');
    if (slash != std::string::npos) {
        long long a = std::stoll(spec.substr(0, slash));
        long long b = std::stoll(spec.substr(slash + 1));
        if (b <= 0) throw PreconditionViolation("denominator must be positive: " + spec);
        return PrecisionReal::from_rational(Rat(a, b));
    }
    return PrecisionReal::parse_decimal(spec, bits);
}

// ---- polynomial mini-language ----------------------------------------------
// term ((+|-) term)*, term = [int[/int]]['*'][letter['^'int]]
// examples: "k^3", "y^3+y", "1/6*k^3-2*k", "3"
PolynomialQ parse_poly(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw PreconditionViolation("empty polynomial");
    PolynomialQ f(std::vector<Rat>{Rat(0)});
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw PreconditionViolation("expected + or - in polynomial near: " + s.substr(i));
        }
        first = false;
        long long num = 1, den = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            num = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                num = num * 10 + (s[i++] - '0');
            have_coef = true;
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i]))
                    den = den * 10 + (s[i++] - '0');
                if (den == 0) throw PreconditionViolation("zero denominator in coefficient");
            }
        }
        if (i < s.size() && s[i] == '*') ++i;
        int exp = 0;
        if (i < s.size() && std::isalpha((unsigned char)s[i])) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw PreconditionViolation("exponent digits expected in polynomial");
                exp = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i]))
                    exp = exp * 10 + (s[i++] - '0');
            }
        } else if (!have_coef) {
            throw PreconditionViolation("expected coefficient or variable near: " + s.substr(i));
        }
        if (exp > 20) throw PreconditionViolation("polynomial degree too large");
        f = f + PolynomialQ::monomial(Rat(sign * num, den), exp);
    }
    return f;
}

// ---- x-set mini-language ---------------------------------------------------
// grid:N            uniform interior grid 2*pi*j/(N+1)
// grid:N+special    the same grid plus pi/2 and 2*pi/3
// point:<value>     a single abscissa (value mini-language above)
// neighbourhood:gamma,N,count   x_j = pi/(gamma^(alpha+1)(N+j)^alpha)
std::vector<double> parse_set_grid(const std::string& spec, double alpha) {
    if (spec.rfind("grid:", 0) == 0) {
        std::string body = spec.substr(5);
        bool special = false;
        auto plus = body.find("+special");
        if (plus != std::string::npos) {
            special = true;
            body = body.substr(0, plus);
        }
        int n = std::stoi(body);
        std::vector<double> extra;
        if (special) extra = {M_PI / 2.0, 2.0 * M_PI / 3.0};
        return uniform_grid(n, extra);
    }
    if (spec.rfind("point:", 0) == 0)
        return {parse_real_spec(spec.substr(6)).to_double()};
    if (spec.rfind("neighbourhood:", 0) == 0) {
        std::string body = spec.substr(14);
        std::stringstream ss(body);
        std::string cell;
        std::vector<double> parts;
        while (std::getline(ss, cell, ',')) parts.push_back(std::stod(cell));
        if (parts.size() != 3)
            throw PreconditionViolation("neighbourhood spec needs gamma,N,count");
        NeighbourhoodSpec nb;
        nb.alpha = alpha;
        nb.gamma = parts[0];
        nb.N = (long long)parts[1];
        std::vector<double> grid;
        for (long long j = 0; j < (long long)parts[2]; ++j) grid.push_back(nb.x_at(j));
        return grid;
    }
    throw PreconditionViolation("unrecognized set spec: " + spec);
}

std::vector<double> iota_values(int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back((double)i);
    return v;
}

std::vector<double> parse_axis_values(const std::string& s) {
    auto dots = s.find("..");
    if (dots != std::string::npos && s.find(',') == std::string::npos) {
        long long a = std::stoll(s.substr(0, dots));
        long long b = std::stoll(s.substr(dots + 2));
        if (b < a || b - a > 1000000) throw PreconditionViolation("bad axis range: " + s);
        std::vector<double> v;
        for (long long t = a; t <= b; ++t) v.push_back((double)t);
        return v;
    }
    std::vector<double> v;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ','))
        if (!cell.empty()) v.push_back(std::stod(cell));
    if (v.empty()) throw PreconditionViolation("empty axis: " + s);
    return v;
}

std::vector<SweepAxis> default_axes(const std::string& kernel) {
    if (kernel == "tail_sup")
        return {{"alpha", {1.0, 2.0}}, {"l", {1.0}}, {"L", {1000.0, 10000.0}}, {"grid", {100.0}}};
    if (kernel == "classify_random")
        return {{"m", {4096.0, 16384.0}}, {"rep", iota_values(10)}};
    if (kernel == "master_random")
        return {{"n", {3.0}}, {"m", {30.0}}, {"rep", iota_values(10)}};
    if (kernel == "hitset_random")
        return {{"P", {128.0, 256.0}}, {"rep", iota_values(10)}};
    if (kernel == "sine_floor_random")
        return {{"count", {8.0, 16.0}}, {"rep", iota_values(25)}};
    return {{"rep", {0.0}}};
}

void write_or_print(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        emit(j);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw PreconditionViolation("cannot write " + out_path);
    out << j.dump(2) << "\n";
    emit(json{{"schema", kSchema}, {"out", out_path}});
}

// ---- subcommand bodies -----------------------------------------------------

int cmd_weyl_sum(const std::string& f_str, const std::string& x_str,
                 unsigned long long P, const std::string& mode) {
    auto f = parse_poly(f_str);
    auto x = parse_real_spec(x_str);
    auto ws = weyl_sum(f, x, P, mode == "direct" ? WeylMode::Direct : WeylMode::Fast);
    json j = record("exponential-sum-value");
    j["f"] = f_str;
    j["x"] = x_str;
    j["P"] = ws.P;
    j["mode"] = ws.mode;
    j["re"] = ws.re;
    j["im"] = ws.im;
    j["abs"] = ws.abs();
    j["err"] = ws.err;
    emit(j);
    return 0;
}

int cmd_weyl_gauss(long long p, int n, long long a, bool brief) {
    auto g = gauss_sum(p, n, a);
    long long value = std::llround(g.re);
    bool ok = g.exact && value == g.expected && std::fabs(g.im) < 1e-6;
    json j = record("complete-power-sum-identity");
    j["p"] = p;
    j["n"] = n;
    j["a"] = a;
    j["value"] = value;
    j["expected"] = g.expected;
    if (!brief) {
        j["re"] = g.re;
        j["im"] = g.im;
        j["exact"] = g.exact;
    }
    emit(j);
    return ok ? 0 : 1;
}

int cmd_weyl_master(int n, unsigned long long m, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xd(0.1, 3.0);
    std::uniform_int_distribution<int> cd(-3, 3);
    int fails = 0;
    for (int t = 0; t < trials; ++t) {
        PolynomialQ f = PolynomialQ::monomial(Rat(1), n);
        for (int jj = 1; jj < n; ++jj) f = f + PolynomialQ::monomial(Rat(cd(rng)), jj);
        double x = xd(rng);
        auto rep = master_inequality_check(f, PrecisionReal::from_double(x), m);
        json j = record("squaring-inequality");
        j["trial"] = t;
        j["x"] = x;
        j["lhs"] = rep.lhs;
        j["rhs"] = rep.rhs;
        j["margin"] = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
        j["holds"] = rep.holds;
        emit(j);
        if (!rep.holds) ++fails;
    }
    return fails ? 1 : 0;
}

int cmd_classify(const std::string& y_str, double eps, int n, const std::string& range_str) {
    auto y = parse_real_spec(y_str);
    long long lo = 0, hi = 0;
    auto dots = range_str.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoll(range_str);
    } else {
        lo = std::stoll(range_str.substr(0, dots));
        hi = std::stoll(range_str.substr(dots + 2));
    }
    if (hi < lo || hi - lo > 1000000)
        throw PreconditionViolation("bad index range: " + range_str);
    for (long long m = lo; m <= hi; ++m) {
        auto ic = classify_index(m, y, eps, n);
        json j = record("index-trichotomy");
        j["m"] = ic.m;
        j["verdict"] = index_verdict_name(ic.verdict);
        if (ic.witness) {
            j["C"] = ic.witness->C;
            j["M"] = ic.witness->M;
            j["beta"] = ic.witness->beta;
        } else {
            j["C"] = nullptr;
            j["M"] = nullptr;
            j["beta"] = nullptr;
        }
        emit(j);
    }
    return 0;
}

int cmd_count_hits(const std::string& y_str, unsigned long long P, int n, double eps,
                   bool structure) {
    auto y = parse_real_spec(y_str);
    auto set = hit_set(y, P, n, eps);
    json j = record(structure ? "hit-progression-structure" : "near-integer-hit-set");
    j["y"] = y_str;
    j["P"] = set.P;
    j["n"] = set.n;
    j["eps"] = set.eps;
    j["threshold"] = set.threshold;
    j["count"] = set.hits.size();
    j["weighted"] = set.weighted;
    if (set.hits.size() <= 10000) j["hits"] = set.hits;
    int rc = 0;
    if (structure) {
        auto rep = hit_structure_check(y, P, n, eps);
        j["M"] = rep.approx.M;
        j["C"] = rep.approx.C;
        j["beta"] = rep.approx.beta;
        j["K_formula"] = rep.K_formula;
        j["multiples_only"] = rep.multiples_only;
        j["progression_exact"] = rep.progression_exact;
        j["gaps_ok"] = rep.gaps_ok;
        j["holds"] = rep.holds;
        rc = rep.holds ? 0 : 1;
    }
    emit(j);
    return rc;
}

int cmd_count_lemma1(long long P, int k, double A, bool brief) {
    auto rep = count_product_le(P, k, A);
    json j = record("product-count-bound");
    j["P"] = P;
    j["k"] = k;
    j["A"] = A;
    j["count"] = rep.count;
    j["bound"] = rep.bound;
    if (!brief) {
        j["threshold"] = rep.threshold;
        j["holds"] = rep.holds;
    }
    emit(j);
    return rep.holds ? 0 : 1;
}

int cmd_series_tailsup(const std::string& seq_id, double param, double alpha,
                       const std::string& set_str, long long l, unsigned long long L,
                       const std::string& out_path) {
    auto seq = CoeffSequence::from_id(seq_id, param);
    json j = record("tail-sup-statistic");
    j["seq"] = seq.label();
    j["alpha"] = alpha;
    j["set"] = set_str;
    if (set_str.rfind("point:", 0) == 0) {
        auto x = parse_real_spec(set_str.substr(6));
        auto rep = partial_sum(seq, alpha, x, l, L);
        j["l"] = rep.l;
        j["L"] = rep.L;
        j["x"] = rep.x;
        j["final_sum"] = rep.final_sum;
        j["sup_abs"] = rep.sup_abs;
        j["arg_sup"] = rep.arg_sup;
        j["comparator"] = rep.comparator;
        j["ratio"] = rep.ratio;
    } else {
        auto grid = parse_set_grid(set_str, alpha);
        auto sw = tail_sup_sweep(seq, alpha, grid, l, {L});
        auto ts = tail_sup(seq, l, L);
        j["l"] = l;
        j["L"] = L;
        j["grid_points"] = grid.size();
        j["sup_abs"] = sw.checkpoints[0].sup_abs;
        j["x_at_sup"] = sw.checkpoints[0].x_at_sup;
        j["comparator"] = ts.value;
        j["ratio"] = ts.value > 0.0 ? sw.checkpoints[0].sup_abs / ts.value : 0.0;
    }
    write_or_print(j, out_path);
    return 0;
}

int cmd_series_criterion(const std::string& seq_id, double param, double alpha,
                         const std::string& set_str) {
    auto seq = CoeffSequence::from_id(seq_id, param);
    PointContext ctx = set_str.rfind("neighbourhood", 0) == 0
                           ? PointContext::NeighbourhoodOfZero
                           : PointContext::PointSetWithSpecialAngles;
    auto rep = criterion_verdict(alpha, seq, ctx);
    json j = record("uniform-convergence-criterion");
    j["seq"] = seq.label();
    j["alpha"] = alpha;
    j["set"] = set_str;
    j["verdict"] = convergence_verdict_name(rep.verdict);
    j["clause"] = verdict_clause_name(rep.clause);
    j["decided_by_sum_finite"] = rep.decided_by_sum_finite;
    j["decided_by_ckk"] = rep.decided_by_ckk;
    emit(j);
    return 0;
}

int cmd_blocks_trace(double alpha, const std::string& x_str, long long m, double delta,
                     const std::string& out_path) {
    auto x = parse_real_spec(x_str);
    auto bp = block_partition(alpha, x, m, delta);
    json j = record("block-partition-trace");
    j["alpha"] = alpha;
    j["x"] = x_str;
    j["m"] = bp.m;
    j["delta"] = bp.delta;
    j["band"] = bp.band;
    j["p"] = bp.p;
    j["p_tol"] = bp.p_tol;
    j["p_lower_ok"] = bp.p_lower_ok;
    j["p_simple_ok"] = bp.p_simple_ok;
    j["K1_size"] = bp.K1.size();
    j["K2_size"] = bp.K2.size();
    if (bp.K1.size() <= 10000) j["K1"] = bp.K1;
    j["runs_at_most_3"] = bp.runs_at_most_3;
    json runs = json::array();
    for (const auto& r : bp.runs) {
        json rj;
        rj["s"] = r.s;
        rj["v"] = r.v;
        rj["high_side"] = r.high_side;
        rj["u"] = r.u;
        rj["u_even"] = r.u_even;
        rj["t"] = r.t;
        rj["R"] = r.R;
        rj["travel"] = r.travel;
        rj["coverage_ok"] = r.coverage_ok;
        rj["t0_bound_ok"] = r.t0_bound_ok;
        rj["t1_bound_ok"] = r.t1_bound_ok;
        rj["v_band_ok"] = r.v_band_ok;
        rj["v_bound_ok"] = r.v_bound_ok;
        rj["r_bound_ok"] = r.r_bound_ok;
        runs.push_back(std::move(rj));
    }
    j["runs"] = std::move(runs);
    write_or_print(j, out_path);
    return 0;
}

int cmd_blocks_lemma5(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nd(2, 24);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        int n = nd(rng);
        // widening gaps, all below pi, cumulative total below 2*pi
        double gmax = std::min(M_PI - 0.01, 2.0 * M_PI / (double)n);
        double gap = (0.3 + 0.3 * unit(rng)) * gmax;
        double step_max = 0.4 * gmax / (double)n;
        std::vector<double> y, w;
        double angle = 0.0, weight = 1.0;
        for (int i = 0; i < n; ++i) {
            angle += gap;
            y.push_back(angle);
            w.push_back(weight);
            gap += unit(rng) * step_max;
            weight *= 0.7 + 0.3 * unit(rng);
        }
        auto plain = sine_sum_floor_check(y);
        auto weighted = sine_sum_floor_check_weighted(y, w);
        if (!plain.holds || !weighted.holds) {
            ++violations;
            json j = record("widening-gap-sine-floor");
            j["trial"] = t;
            j["y"] = y;
            j["sum"] = plain.sum;
            j["floor"] = plain.floor;
            j["holds"] = plain.holds;
            j["weighted_sum"] = weighted.sum;
            j["weighted_floor"] = weighted.floor;
            j["weighted_holds"] = weighted.holds;
            emit(j);
        }
    }
    json j = record("widening-gap-sine-floor");
    j["trials"] = trials;
    j["violations"] = violations;
    j["holds"] = violations == 0;
    emit(j);
    return violations ? 1 : 0;
}

int cmd_sweep(const std::string& kernel, const std::vector<std::string>& axis_specs,
              std::uint64_t seed, const std::string& out_path,
              const std::string& baseline_path, bool freeze, const std::string& format,
              int threads) {
    SweepConfig cfg;
    cfg.kernel = kernel;
    cfg.seed = seed;
    cfg.out_path = out_path;
    cfg.baseline_path = baseline_path;
    cfg.freeze = freeze;
    cfg.threads = threads;
    cfg.format = format == "csv" ? SweepFormat::Csv : SweepFormat::JsonLines;
    if (axis_specs.empty()) {
        cfg.axes = default_axes(kernel);
    } else {
        for (const auto& spec : axis_specs) {
            auto eq = spec.find('=');
            if (eq == std::string::npos)
                throw PreconditionViolation("axis must be name=values: " + spec);
            cfg.axes.push_back({spec.substr(0, eq), parse_axis_values(spec.substr(eq + 1))});
        }
    }
    auto res = run_sweep(cfg);
    if (out_path.empty() && !freeze) {
        std::cout << res.rendered;
    } else {
        json j = record(kernel.c_str());
        j["rows"] = res.rows.size();
        if (!out_path.empty()) j["out"] = out_path;
        if (res.compared) j["compared"] = res.compared;
        if (res.baseline_written) j["frozen"] = baseline_path;
        emit(j);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sinesum: numerical workbench for non-harmonic sine series\n"
        "Values accept: decimal | a/b | 2pi:a/b | phi | sqrt2.\n"
        "Environment: SINESUM_PRECISION_BITS (default working precision),\n"
        "SINESUM_THREADS (worker count)."};
    app.require_subcommand(1);
    int rc = 0;

    // ---- weyl ----
    auto* weyl = app.add_subcommand("weyl", "exponential sums and the squaring inequality");
    weyl->require_subcommand(1);

    std::string ws_f = "k^3", ws_x = "1", ws_mode = "fast";
    unsigned long long ws_P = 1000;
    auto* weyl_sum_cmd = weyl->add_subcommand("sum", "evaluate sum of e^(i f(k) x), k = 1..P");
    weyl_sum_cmd->add_option("--f", ws_f, "polynomial with rational coefficients");
    weyl_sum_cmd->add_option("--x", ws_x, "abscissa");
    weyl_sum_cmd->add_option("--P", ws_P, "number of terms")->required();
    weyl_sum_cmd->add_option("--mode", ws_mode, "direct|fast")
        ->check(CLI::IsMember({"direct", "fast"}));
    weyl_sum_cmd->callback([&] { rc = cmd_weyl_sum(ws_f, ws_x, ws_P, ws_mode); });

    long long wg_p = 5, wg_a = 1;
    int wg_n = 3;
    auto* weyl_gauss = weyl->add_subcommand("gauss", "complete power sum over a prime-power modulus");
    weyl_gauss->add_option("--p", wg_p, "prime p > n")->required();
    weyl_gauss->add_option("--n", wg_n, "power n > 2")->required();
    weyl_gauss->add_option("--a", wg_a, "multiplier coprime to p")->required();
    weyl_gauss->callback([&] { rc = cmd_weyl_gauss(wg_p, wg_n, wg_a, false); });

    int wm_n = 3, wm_trials = 10;
    unsigned long long wm_m = 40;
    std::uint64_t wm_seed = 0;
    auto* weyl_master = weyl->add_subcommand("verify-master",
                                             "squaring inequality on random polynomials");
    weyl_master->add_option("--n", wm_n, "degree (>= 2)")->required();
    weyl_master->add_option("--m", wm_m, "number of terms")->required();
    weyl_master->add_option("--trials", wm_trials, "random instances");
    weyl_master->add_option("--seed", wm_seed, "random seed");
    weyl_master->callback([&] { rc = cmd_weyl_master(wm_n, wm_m, wm_trials, wm_seed); });

    // ---- classify ----
    std::string cl_y = "0.41", cl_range = "9..9";
    double cl_eps = 1.0 / 7.0;
    int cl_n = 3;
    auto* classify = app.add_subcommand("classify", "index trichotomy by rational approximation");
    classify->add_option("--y", cl_y, "target value")->required();
    classify->add_option("--eps", cl_eps, "exponent in (0, 1/6)")->required();
    classify->add_option("--n", cl_n, "degree (>= 3)")->required();
    classify->add_option("--range", cl_range, "index range l..L")->required();
    classify->callback([&] { rc = cmd_classify(cl_y, cl_eps, cl_n, cl_range); });

    // ---- count ----
    auto* count = app.add_subcommand("count", "hit sets and product counting");
    count->require_subcommand(1);

    std::string ch_y = "0.41";
    unsigned long long ch_P = 128;
    int ch_n = 3;
    double ch_eps = 1.0 / 7.0;
    bool ch_structure = false;
    auto* count_hits = count->add_subcommand("hits", "T with ||y T|| below P^(eps-1)");
    count_hits->add_option("--y", ch_y, "target value")->required();
    count_hits->add_option("--P", ch_P, "range parameter")->required();
    count_hits->add_option("--n", ch_n, "degree (>= 3)");
    count_hits->add_option("--eps", ch_eps, "exponent in (0, 1/6)");
    count_hits->add_flag("--structure", ch_structure,
                         "also verify the arithmetic-progression structure");
    count_hits->callback([&] { rc = cmd_count_hits(ch_y, ch_P, ch_n, ch_eps, ch_structure); });

    long long c1_P = 4;
    int c1_k = 2;
    double c1_A = 4.0;
    auto* count_l1 = count->add_subcommand("lemma1", "tuples with product below P^k / A");
    count_l1->add_option("--P", c1_P, "per-factor range")->required();
    count_l1->add_option("--k", c1_k, "tuple length")->required();
    count_l1->add_option("--A", c1_A, "divisor")->required();
    count_l1->callback([&] { rc = cmd_count_lemma1(c1_P, c1_k, c1_A, false); });

    // ---- series ----
    auto* series = app.add_subcommand("series", "partial sums of sum c_k sin(k^alpha x)");
    series->require_subcommand(1);

    std::string st_seq = "inv_k", st_set = "grid:1000+special", st_out;
    double st_param = 0.0, st_alpha = 1.0;
    long long st_l = 1;
    unsigned long long st_L = 10000;
    auto* series_ts = series->add_subcommand("tail-sup", "sup of |partial sums| over an x-set");
    series_ts->add_option("--seq", st_seq, "coefficient sequence id");
    series_ts->add_option("--param", st_param, "sequence parameter (inv_kpow exponent)");
    series_ts->add_option("--alpha", st_alpha, "frequency exponent")->required();
    series_ts->add_option("--set", st_set, "x-set: grid:N[+special] | point:V | neighbourhood:g,N,c");
    series_ts->add_option("--l", st_l, "first index");
    series_ts->add_option("--L", st_L, "last index")->required();
    series_ts->add_option("--out", st_out, "write the report to this path");
    series_ts->callback(
        [&] { rc = cmd_series_tailsup(st_seq, st_param, st_alpha, st_set, st_l, st_L, st_out); });

    std::string sc_seq = "inv_k", sc_set = "grid:1000+special";
    double sc_param = 0.0, sc_alpha = 2.0;
    auto* series_cr = series->add_subcommand("criterion", "uniform-convergence verdict");
    series_cr->add_option("--seq", sc_seq, "coefficient sequence id");
    series_cr->add_option("--param", sc_param, "sequence parameter");
    series_cr->add_option("--alpha", sc_alpha, "frequency exponent")->required();
    series_cr->add_option("--set", sc_set, "x-set (neighbourhood:* selects the near-zero clause)");
    series_cr->callback([&] { rc = cmd_series_criterion(sc_seq, sc_param, sc_alpha, sc_set); });

    // ---- blocks ----
    auto* blocks = app.add_subcommand("blocks", "phase-step block decomposition");
    blocks->require_subcommand(1);

    std::string bt_x = "1", bt_out;
    double bt_alpha = 1.5, bt_delta = 0.4;
    long long bt_m = 500;
    auto* blocks_tr = blocks->add_subcommand("trace", "full diagnostic trace of one partition");
    blocks_tr->add_option("--alpha", bt_alpha, "frequency exponent in (1, 2)")->required();
    blocks_tr->add_option("--x", bt_x, "abscissa");
    blocks_tr->add_option("--m", bt_m, "base index")->required();
    blocks_tr->add_option("--delta", bt_delta, "band exponent in (0, 2-alpha)")->required();
    blocks_tr->add_option("--out", bt_out, "write the trace to this path");
    blocks_tr->callback([&] { rc = cmd_blocks_trace(bt_alpha, bt_x, bt_m, bt_delta, bt_out); });

    int b5_trials = 1000;
    std::uint64_t b5_seed = 0;
    auto* blocks_l5 = blocks->add_subcommand("lemma5", "randomized widening-gap sine floor check");
    blocks_l5->add_option("--trials", b5_trials, "random instances");
    blocks_l5->add_option("--seed", b5_seed, "random seed");
    blocks_l5->callback([&] { rc = cmd_blocks_lemma5(b5_trials, b5_seed); });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "worked examples with known exact answers");
    verify->require_subcommand(1);

    long long vg_p = 5, vg_a = 1;
    int vg_n = 3;
    auto* verify_gauss = verify->add_subcommand("gauss", "power-sum identity instance");
    verify_gauss->add_option("--p", vg_p, "prime p > n")->required();
    verify_gauss->add_option("--n", vg_n, "power n > 2")->required();
    verify_gauss->add_option("--a", vg_a, "multiplier coprime to p")->required();
    verify_gauss->callback([&] { rc = cmd_weyl_gauss(vg_p, vg_n, vg_a, true); });

    long long v1_P = 4;
    int v1_k = 2;
    double v1_A = 4.0;
    auto* verify_l1 = verify->add_subcommand("lemma1", "product-count bound instance");
    verify_l1->add_option("--P", v1_P, "per-factor range")->required();
    verify_l1->add_option("--k", v1_k, "tuple length")->required();
    verify_l1->add_option("--A", v1_A, "divisor")->required();
    verify_l1->callback([&] { rc = cmd_count_lemma1(v1_P, v1_k, v1_A, true); });

    // ---- sweep ----
    std::string sw_kernel, sw_out, sw_baseline, sw_format = "json";
    std::vector<std::string> sw_axes;
    std::uint64_t sw_seed = 0;
    bool sw_freeze = false;
    int sw_threads = 0;
    auto* sweep = app.add_subcommand("sweep", "deterministic parameter sweeps");
    sweep->add_option("--kernel", sw_kernel, "one of: tail_sup, classify_random, master_random, hitset_random, sine_floor_random")
        ->required();
    sweep->add_option("--axis", sw_axes, "axis as name=v1,v2 or name=a..b (repeatable)");
    sweep->add_option("--seed", sw_seed, "base seed (each row derives its own)");
    sweep->add_option("--out", sw_out, "write rendered rows to this path");
    sweep->add_option("--baseline", sw_baseline, "compare rows against this frozen file");
    sweep->add_flag("--freeze", sw_freeze, "write the baseline file from this run");
    sweep->add_option("--format", sw_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--threads", sw_threads, "worker threads (0 = SINESUM_THREADS/auto)");
    sweep->callback([&] {
        rc = cmd_sweep(sw_kernel, sw_axes, sw_seed, sw_out, sw_baseline, sw_freeze, sw_format,
                       sw_threads);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const BaselineMismatch& e) {
        json j = record("baseline-compare");
        j["error"] = "baseline-mismatch";
        j["detail"] = e.what();
        emit(j);
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
