#include "cliquelab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cliquelab/cliques.hpp"
#include "cliquelab/coloring.hpp"
#include "cliquelab/constructive.hpp"
#include "cliquelab/gnp.hpp"
#include "cliquelab/lowerbound.hpp"
#include "cliquelab/theory.hpp"

namespace cliquelab {

namespace {

const std::vector<std::string> kKnownAlgorithms = {"greedy", "dominating", "low_p", "mid_p", "exact"};

std::uint64_t double_bits(double x) {
    std::uint64_t b;
    std::memcpy(&b, &x, sizeof(b));
    return b;
}

// stable per-point stream id: hash of (master, n, p bits, trial, algorithm)
std::uint64_t point_stream(std::uint64_t master, long long n, double p, int trial, int algo_id) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ static_cast<std::uint64_t>(n));
    h = mix64(h ^ double_bits(p));
    h = mix64(h ^ static_cast<std::uint64_t>(trial));
    h = mix64(h ^ static_cast<std::uint64_t>(algo_id));
    return h;
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

}  // namespace

SweepConfig SweepConfig::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SweepConfig c;
    if (j.contains("n")) c.n_values = j.at("n").get<std::vector<long long>>();
    if (j.contains("p")) c.p_values = j.at("p").get<std::vector<double>>();
    if (j.contains("x_exponents")) c.x_exponents = j.at("x_exponents").get<std::vector<double>>();
    if (j.contains("algorithms")) c.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("clique_cap")) c.clique_cap = j.at("clique_cap").get<long long>();
    if (j.contains("exact_node_budget")) c.exact_node_budget = j.at("exact_node_budget").get<long long>();
    if (j.contains("exact_auto_max_n")) c.exact_auto_max_n = j.at("exact_auto_max_n").get<int>();
    if (j.contains("measure_runtime")) c.measure_runtime = j.at("measure_runtime").get<bool>();
    if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    c.validate();
    return c;
}

void SweepConfig::validate() const {
    if (n_values.empty()) throw std::invalid_argument("config: empty n grid");
    if (p_values.empty() && x_exponents.empty())
        throw std::invalid_argument("config: need p values or x exponents");
    if (algorithms.empty()) throw std::invalid_argument("config: empty algorithm list");
    for (const auto& a : algorithms)
        if (std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), a) == kKnownAlgorithms.end())
            throw std::invalid_argument("config: unknown algorithm \"" + a + "\"");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    for (double p : p_values)
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("config: p outside [0,1]");
}

const char* kCsvHeader =
    "n,p,x_exponent,seed,algorithm,palette,valid,repairs,runtime_ms,predicted_main1,predicted_main2,"
    "regime,ratio,error";

std::string to_csv(const ResultRow& r) {
    std::ostringstream os;
    os << r.n << ',' << format_double(r.p) << ',' << format_double(r.x_exponent) << ',' << r.seed << ','
       << r.algorithm << ',' << r.palette << ',' << (r.valid ? 1 : 0) << ',' << r.repairs << ','
       << format_double(r.runtime_ms) << ',';
    if (r.predicted_main1) os << format_double(*r.predicted_main1);
    os << ',' << format_double(r.predicted_main2) << ',' << r.regime << ',' << format_double(r.ratio)
       << ',' << r.error;
    return os.str();
}

namespace {

struct GridPoint {
    long long n;
    double p;
};

ResultRow run_one(const SweepConfig& cfg, const GridPoint& pt, int trial, const std::string& algo,
                  int algo_id) {
    ResultRow row;
    row.n = pt.n;
    row.p = pt.p;
    row.x_exponent = pt.p > 0 && pt.n > 1 ? -std::log(pt.p) / std::log(static_cast<double>(pt.n)) : 0.0;
    row.algorithm = algo;
    row.seed = point_stream(cfg.master_seed, pt.n, pt.p, trial, algo_id);
    row.predicted_main2 = theory::predicted_main2(pt.n, pt.p);
    if (static_cast<double>(pt.n) * pt.p > 1.0)
        row.predicted_main1 = theory::predicted_main1(pt.n, pt.p);
    row.regime = theory::regime_name(theory::regime_classify(pt.n, pt.p).regime);

    // the graph stream is shared by all algorithms on this (point, trial)
    Seed graph_seed{cfg.master_seed, point_stream(cfg.master_seed, pt.n, pt.p, trial, -1)};
    Seed algo_seed{cfg.master_seed, row.seed};

    auto started = std::chrono::steady_clock::now();
    try {
        CliqueColoring coloring;
        if (algo == "mid_p") {
            if (pt.p > 0.5) throw InapplicableRegime("coupling requires p <= 1/2");
            auto [g_low, g_high] = generate_coupled(static_cast<int>(pt.n), pt.p, graph_seed);
            auto [c, diag] = color_mid_p(g_low, g_high, pt.p, algo_seed);
            row.repairs = diag.repairs;
            coloring = std::move(c);
            row.valid = is_valid_clique_coloring(g_low, coloring).valid;
        } else {
            Graph g = generate_gnp(static_cast<int>(pt.n), pt.p, graph_seed);
            if (algo == "greedy") {
                coloring = greedy_proper_coloring(g);
            } else if (algo == "dominating") {
                auto res = dominating_set_coloring(g);
                row.repairs = res.repairs;
                coloring = std::move(res.coloring);
            } else if (algo == "low_p") {
                if (!(pt.p > 0.0 && pt.p < 1.0)) throw std::invalid_argument("low_p requires p in (0,1)");
                auto [c, diag] = color_low_p(g, pt.p, algo_seed);
                row.repairs = diag.repairs;
                coloring = std::move(c);
            } else if (algo == "exact") {
                if (pt.n > cfg.exact_auto_max_n)
                    throw std::runtime_error("exact solver limited to n <= " +
                                             std::to_string(cfg.exact_auto_max_n));
                ExactBudget budget;
                budget.node_limit = cfg.exact_node_budget;
                budget.clique_cap = cfg.clique_cap;
                auto res = exact_clique_chromatic(g, budget);
                if (!res.proven) row.error = "BudgetExceeded: best bound " + std::to_string(res.value);
                coloring = std::move(res.certificate);
            }
            row.valid = is_valid_clique_coloring(g, coloring).valid;
        }
        row.palette = coloring.palette;
        row.ratio = row.predicted_main2 > 0 ? coloring.palette / row.predicted_main2 : 0.0;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.valid = false;
        row.palette = 0;
        row.ratio = 0;
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    if (cfg.measure_runtime)
        row.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    return row;
}

}  // namespace

std::vector<ResultRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<GridPoint> points;
    for (long long n : cfg.n_values) {
        for (double p : cfg.p_values) points.push_back({n, p});
        for (double x : cfg.x_exponents) points.push_back({n, std::pow(static_cast<double>(n), -x)});
    }
    struct Task {
        GridPoint pt;
        int trial;
        int algo_id;
    };
    std::vector<Task> tasks;
    for (const auto& pt : points)
        for (int t = 0; t < cfg.trials; ++t)
            for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
                tasks.push_back({pt, t, static_cast<int>(a)});

    std::vector<ResultRow> rows(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& task = tasks[i];
        rows[i] = run_one(cfg, task.pt, task.trial, cfg.algorithms[task.algo_id], task.algo_id);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << "# cliquelab sweep generated at " << std::time(nullptr) << '\n';
    out << kCsvHeader << '\n';
    for (const auto& r : rows) out << to_csv(r) << '\n';
}

namespace {

LemmaReport verify_xs_dominates(const LemmaParams& params, Seed seed) {
    LemmaReport rep;
    rep.name = "xs-dominates";
    // exhaustive: all graphs on 6 vertices, all |S| = 4, k = 2, x in {1,2,4}
    const int n = 6;
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    std::vector<std::vector<int>> subsets4;
    for (int m = 0; m < (1 << n); ++m) {
        if (__builtin_popcount(m) != 4) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) s.push_back(v);
        subsets4.push_back(std::move(s));
    }
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
        Graph::Builder b(n);
        for (int e = 0; e < pairs; ++e)
            if (mask >> e & 1) b.add_edge(all_pairs[e].first, all_pairs[e].second);
        Graph g = std::move(b).build();
        for (const auto& s : subsets4) {
            for (long long x : {1, 2, 4}) {
                auto st = count_stats(g, s, 2, x);
                ++rep.total;
                if (st.xprime < st.xs) ++rep.violations;
            }
        }
    }
    // random larger instances
    int extra = params.trials.value_or(10'000);
    Rng rng(seed);
    for (int i = 0; i < extra; ++i) {
        int rn = 8 + static_cast<int>(rng.below(13));  // 8..20
        double p = 0.05 + 0.9 * rng.next_double();
        Graph g = generate_gnp(rn, p, derive(seed, 100 + i));
        int k = 2 + static_cast<int>(rng.below(2));
        int ssz = std::max(k + 1, static_cast<int>(rng.below(rn - 1)) + 1);
        ssz = std::min(ssz, rn);
        std::vector<int> pool(rn);
        for (int v = 0; v < rn; ++v) pool[v] = v;
        for (int v = 0; v < ssz; ++v) std::swap(pool[v], pool[v + rng.below(rn - v)]);
        pool.resize(ssz);
        long long x = 1 + static_cast<long long>(rng.below(6));
        auto st = count_stats(g, pool, k, x);
        ++rep.total;
        if (st.xprime < st.xs) ++rep.violations;
    }
    rep.pass = rep.violations == 0;
    rep.details = "deterministic inequality X'_S >= X_S";
    return rep;
}

LemmaReport verify_crux(const LemmaParams& params, Seed seed) {
    LemmaReport rep;
    rep.name = "crux";
    int graphs = params.trials.value_or(100);
    int n = static_cast<int>(params.n.value_or(40));
    double p = params.p.value_or(0.3);
    int r = params.r.value_or(4);
    for (int t = 0; t < graphs; ++t) {
        Seed ts = derive(seed, t);
        Graph g = generate_gnp(n, p, ts);
        auto plan = partition_vertices(n, r, derive(ts, 1));
        std::vector<int> part_of(n);
        for (int i = 0; i < plan.part_count(); ++i)
            for (int v : plan.parts[i]) part_of[v] = i;
        std::vector<std::pair<Graph, std::vector<int>>> gis;
        std::vector<std::vector<int>> inv(plan.part_count(), std::vector<int>(n, -1));
        for (int i = 0; i < plan.part_count(); ++i) {
            gis.push_back(build_gi(g, plan.parts[i]));
            for (std::size_t j = 0; j < gis[i].second.size(); ++j) inv[i][gis[i].second[j]] = static_cast<int>(j);
        }
        for_each_maximal_clique(g, [&](std::span<const int> q) {
            if (q.size() < 2) return;
            int part = part_of[q[0]];
            for (int v : q)
                if (part_of[v] != part) return;
            std::vector<int> local(q.size());
            for (std::size_t j = 0; j < q.size(); ++j) local[j] = inv[part][q[j]];
            ++rep.total;
            if (!is_maximal_clique(gis[part].first, local)) ++rep.violations;
        });
    }
    rep.pass = rep.violations == 0;
    rep.details = "within-part maximal cliques stay maximal in G_i";
    return rep;
}

LemmaReport verify_gi_maxdeg(const LemmaParams& params, Seed seed) {
    LemmaReport rep;
    rep.name = "gi-maxdeg";
    int seeds = params.trials.value_or(50);
    long long n = params.n.value_or(10'000);
    double p = params.p.value_or(0.01);
    auto th = compute_thresholds(n, p);
    if (params.r) th.r = *params.r;
    for (int t = 0; t < seeds; ++t) {
        Seed ts = derive(seed, t);
        Graph g = generate_gnp(static_cast<int>(n), p, ts);
        auto plan = partition_vertices(static_cast<int>(n), th.r, derive(ts, 1));
        auto report = gi_max_degree_report(g, plan, th);
        for (const auto& part : report.parts) {
            ++rep.total;
            if (part.max_degree > report.bound) ++rep.violations;
        }
    }
    rep.statistic = rep.total ? static_cast<double>(rep.violations) / rep.total : 0.0;
    rep.pass = rep.statistic <= 0.02;
    rep.details = "fraction of (seed, part) pairs with max degree of G_i above 42*Gamma";
    return rep;
}

LemmaReport verify_lambda_edges(const LemmaParams& params, Seed seed) {
    LemmaReport rep;
    rep.name = "lambda-edges";
    int seeds = params.trials.value_or(20);
    long long n = params.n.value_or(50'000);
    double logn = std::log(static_cast<double>(n));
    double p = params.p.value_or(1.05 * std::sqrt((logn / 2.0 + std::log(logn)) / static_cast<double>(n)));
    auto th = compute_thresholds(n, p);
    if (!th.xi_applicable) throw std::invalid_argument("lambda-edges requires xi > 0");
    int bad_seeds = 0;
    for (int t = 0; t < seeds; ++t) {
        Graph g = generate_gnp(static_cast<int>(n), p, derive(seed, t));
        auto counts = non_triangle_edge_counts(g);
        long long over = 0;
        for (int c : counts)
            if (c > th.lambda) ++over;
        rep.total += n;
        rep.violations += over;
        if (over > 0) ++bad_seeds;
    }
    rep.statistic = static_cast<double>(bad_seeds) / seeds;
    rep.pass = rep.statistic <= 0.05;
    rep.details = "fraction of seeds with some vertex in more than lambda non-triangle edges";
    return rep;
}

LemmaReport verify_xs_expectation(const LemmaParams& params, Seed seed) {
    LemmaReport rep;
    rep.name = "xs-expectation";
    long long n = params.n.value_or(60);
    long long s = params.s.value_or(12);
    int k = params.k.value_or(2);
    double p = params.p.value_or(0.15);
    int trials = params.trials.value_or(2000);
    auto summary = concentration_experiment(n, p, k, s, trials, params.sets_per_trial.value_or(1), seed);
    double se = summary.stddev_xs / std::sqrt(static_cast<double>(trials * summary.sets_per_trial));
    rep.total = trials;
    rep.statistic = std::abs(summary.mean_xs - summary.expected) / std::max(se, 1e-12);
    rep.pass = rep.statistic <= 3.0;
    std::ostringstream os;
    os << "mean " << summary.mean_xs << " vs closed form " << summary.expected << " (" << rep.statistic
       << " standard errors)";
    rep.details = os.str();
    return rep;
}

LemmaReport verify_xs_concentration(const LemmaParams& params, Seed seed) {
    LemmaReport rep;
    rep.name = "xs-concentration";
    long long n = params.n.value_or(3000);
    double p = params.p.value_or(1.0 / std::sqrt(static_cast<double>(n)));
    int k = params.k.value_or(2);
    long long s = params.s.value_or(200);
    int trials = params.trials.value_or(50);
    int sets = params.sets_per_trial.value_or(20);
    auto summary = concentration_experiment(n, p, k, s, trials, sets, seed);
    rep.total = trials * sets;
    rep.statistic = summary.frac_xs_below_half;
    rep.pass = rep.statistic <= 0.05;
    std::ostringstream os;
    os << "fraction with X_S < E X_S / 2: " << summary.frac_xs_below_half;
    rep.details = os.str();
    return rep;
}

}  // namespace

LemmaReport verify_lemma(const std::string& name, const LemmaParams& params, Seed seed) {
    if (name == "xs-dominates") return verify_xs_dominates(params, seed);
    if (name == "crux") return verify_crux(params, seed);
    if (name == "gi-maxdeg") return verify_gi_maxdeg(params, seed);
    if (name == "lambda-edges") return verify_lambda_edges(params, seed);
    if (name == "xs-expectation") return verify_xs_expectation(params, seed);
    if (name == "xs-concentration") return verify_xs_concentration(params, seed);
    throw std::invalid_argument("unknown lemma name \"" + name + "\"");
}

std::vector<ConjectureRow> probe_conjecture(long long n, const std::vector<double>& p_grid, Seed seed) {
    if (p_grid.empty()) throw std::invalid_argument("empty p grid");
    std::vector<ConjectureRow> rows;
    double logn = std::log(static_cast<double>(n));
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        double p = p_grid[i];
        ConjectureRow row;
        row.p = p;
        Graph g = generate_gnp(static_cast<int>(n), p, derive(seed, i));
        auto res = dominating_set_coloring(g);
        row.palette = res.coloring.palette;
        row.log_n_over_p = logn / p;
        row.ratio_upper = row.palette / row.log_n_over_p;
        auto best = theory::best_k(n, p, std::exp(1.0), 0.4, std::max(2, theory::default_k_max(n, p)));
        row.lower_bound = best ? best->value : 0.0;
        row.ratio_lower = row.lower_bound > 0 ? row.palette / row.lower_bound : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cliquelab
