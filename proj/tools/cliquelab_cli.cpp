#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cliquelab/cliques.hpp"
#include "cliquelab/coloring.hpp"
#include "cliquelab/constructive.hpp"
#include "cliquelab/gnp.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/harness.hpp"
#include "cliquelab/lowerbound.hpp"
#include "cliquelab/theory.hpp"

using namespace cliquelab;

namespace {

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique chromatic number experiments on G(n,p)"};
    app.require_subcommand(1);

    long long n = 100;
    double p = 0.1;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string in_path;

    auto* gen = app.add_subcommand("gen", "generate a G(n,p) edge list");
    gen->add_option("-n,--vertices", n, "vertex count")->required();
    gen->add_option("-p,--probability", p, "edge probability")->required();
    gen->add_option("--seed", seed, "master seed");
    gen->add_option("-o,--out", out_path, "output path (default stdout)");

    std::string algo = "greedy";
    auto* color = app.add_subcommand("color", "compute a clique coloring");
    color->add_option("--in", in_path, "edge-list input file (alternative to -n/-p)");
    color->add_option("-n,--vertices", n, "vertex count for generated input");
    color->add_option("-p,--probability", p, "edge probability (also used by low_p/mid_p thresholds)");
    color->add_option("--seed", seed, "master seed");
    color->add_option("--algo", algo, "greedy | dominating | low_p | mid_p | exact")
        ->check(CLI::IsMember({"greedy", "dominating", "low_p", "mid_p", "exact"}));
    color->add_option("-o,--out", out_path, "output path (default stdout)");

    double C = std::exp(1.0), tau = 0.4;
    auto* predict = app.add_subcommand("predict", "evaluate the closed-form quantities as JSON");
    predict->add_option("-n,--vertices", n, "vertex count")->required();
    predict->add_option("-p,--probability", p, "edge probability")->required();
    predict->add_option("-C,--constant", C, "constant C >= e");
    predict->add_option("--tau", tau, "tau in (0,1)");

    long long set_size = 20;
    int k = 2, sets = 10;
    long long x = -1;
    auto* stats = app.add_subcommand("stats", "uncovered-set statistics over sampled S");
    stats->add_option("-n,--vertices", n, "vertex count")->required();
    stats->add_option("-p,--probability", p, "edge probability")->required();
    stats->add_option("--seed", seed, "master seed");
    stats->add_option("-s,--set-size", set_size, "|S|");
    stats->add_option("-k", k, "subset size k");
    stats->add_option("-x", x, "mark truncation (default ceil(6 s p))");
    stats->add_option("--sets", sets, "number of sampled sets");

    std::string lemma;
    LemmaParams lemma_params;
    std::optional<long long> opt_n, opt_s;
    std::optional<double> opt_p;
    std::optional<int> opt_trials, opt_sets, opt_r, opt_k;
    auto* verify = app.add_subcommand("verify", "run a lemma verification campaign");
    verify
        ->add_option("name", lemma,
                     "xs-dominates | crux | gi-maxdeg | lambda-edges | xs-expectation | xs-concentration")
        ->required();
    verify->add_option("-n,--vertices", opt_n, "override n");
    verify->add_option("-p,--probability", opt_p, "override p");
    verify->add_option("--trials", opt_trials, "override trial count");
    verify->add_option("--sets", opt_sets, "override sets per trial");
    verify->add_option("-r,--parts", opt_r, "override part count");
    verify->add_option("-s,--set-size", opt_s, "override |S|");
    verify->add_option("-k", opt_k, "override k");
    verify->add_option("--seed", seed, "master seed");

    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "run a sweep from a JSON config");
    sweep->add_option("config", config_path, "config JSON path")->required();

    std::vector<double> p_grid;
    auto* probe = app.add_subcommand("probe-conjecture", "palette vs log(n)/p ratio table");
    probe->add_option("-n,--vertices", n, "vertex count")->required();
    probe->add_option("-p,--probabilities", p_grid, "p grid")->required();
    probe->add_option("--seed", seed, "master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        Seed master{seed, 0};
        if (*gen) {
            write_output(out_path, serialize_edge_list(generate_gnp(static_cast<int>(n), p, master)));
        } else if (*color) {
            CliqueColoring c;
            if (algo == "mid_p") {
                if (!in_path.empty())
                    throw std::runtime_error("mid_p needs a coupled pair; use -n/-p, not --in");
                auto [g_lo, g_hi] = generate_coupled(static_cast<int>(n), p, master);
                auto [col, diag] = color_mid_p(g_lo, g_hi, p, derive(master, 1));
                std::cerr << diag.to_json() << "\n";
                c = std::move(col);
                if (!is_valid_clique_coloring(g_lo, c).valid) throw std::runtime_error("invalid coloring");
            } else {
                Graph g = in_path.empty() ? generate_gnp(static_cast<int>(n), p, master)
                                          : parse_edge_list(read_file(in_path));
                if (algo == "greedy") {
                    c = greedy_proper_coloring(g);
                } else if (algo == "dominating") {
                    c = dominating_set_coloring(g).coloring;
                } else if (algo == "low_p") {
                    auto [col, diag] = color_low_p(g, p, derive(master, 1));
                    std::cerr << diag.to_json() << "\n";
                    c = std::move(col);
                } else {
                    auto res = exact_clique_chromatic(g);
                    if (!res.proven) std::cerr << "warning: budget exhausted, value is an upper bound\n";
                    c = res.certificate;
                }
                if (!is_valid_clique_coloring(g, c).valid) throw std::runtime_error("invalid coloring");
            }
            write_output(out_path, serialize_coloring(c));
        } else if (*predict) {
            nlohmann::json j;
            j["n"] = n;
            j["p"] = p;
            j["predicted_main2"] = theory::predicted_main2(n, p);
            if (static_cast<double>(n) * p > 1.0) j["predicted_main1"] = theory::predicted_main1(n, p);
            auto rc = theory::regime_classify(n, p);
            j["regime"] = theory::regime_name(rc.regime);
            j["regime_value"] = rc.dominant_value;
            auto t = theory::thresholds(n, C);
            j["thresholds"]["p0"] = t.p0;
            j["thresholds"]["p0_star"] = t.p0_star;
            if (t.p1) j["thresholds"]["p1"] = *t.p1;
            j["thresholds"]["p2"] = t.p2;
            if (t.p1_star) j["thresholds"]["p1_star"] = *t.p1_star;
            if (n > 1 && p > 0 && p < 1) {
                double exponent = -std::log(p) / std::log(static_cast<double>(n));
                if (exponent > 0 && exponent < 1) j["f_exponent"] = theory::f_exponent(exponent);
                if (p >= t.p2) j["canonical_k"] = theory::canonical_k(n, p);
                auto best = theory::best_k(n, p, C, tau, std::max(2, theory::default_k_max(n, p)));
                if (best) {
                    j["best_k"] = best->k;
                    j["lower_bound"] = best->value;
                }
                auto dt = compute_thresholds(n, p);
                j["r"] = dt.r;
                j["gamma"] = dt.gamma;
                j["xi"] = dt.xi;
                if (dt.xi_applicable) j["lambda"] = dt.lambda;
            }
            std::cout << j.dump(2) << "\n";
        } else if (*stats) {
            Graph g = generate_gnp(static_cast<int>(n), p, master);
            if (x < 0) x = truncation_x(static_cast<double>(set_size), p);
            std::cout << "set,xs,xprime,ys,k,x\n";
            for (int j = 0; j < sets; ++j) {
                Rng rng(derive(master, 1000 + j));
                std::vector<int> pool(n);
                for (long long v = 0; v < n; ++v) pool[v] = static_cast<int>(v);
                for (long long i = 0; i < set_size; ++i) {
                    long long pick = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n - i)));
                    std::swap(pool[i], pool[pick]);
                }
                std::vector<int> subset(pool.begin(), pool.begin() + set_size);
                auto st = count_stats(g, subset, k, x);
                std::cout << j << ',' << st.xs << ',' << st.xprime << ',' << st.ys << ',' << st.k << ','
                          << st.x << "\n";
            }
        } else if (*verify) {
            lemma_params.n = opt_n;
            lemma_params.p = opt_p;
            lemma_params.trials = opt_trials;
            lemma_params.sets_per_trial = opt_sets;
            lemma_params.r = opt_r;
            lemma_params.s = opt_s;
            lemma_params.k = opt_k;
            auto rep = verify_lemma(lemma, lemma_params, master);
            std::cout << rep.name << ": " << (rep.pass ? "pass" : "FAIL") << "\n"
                      << "violations: " << rep.violations << " / " << rep.total << "\n"
                      << "statistic: " << rep.statistic << "\n"
                      << rep.details << "\n";
            return rep.pass ? 0 : 1;
        } else if (*sweep) {
            auto cfg = SweepConfig::from_json_text(read_file(config_path));
            auto rows = run_sweep(cfg);
            std::ostringstream os;
            write_csv(os, rows);
            write_output(cfg.output_path, os.str());
        } else if (*probe) {
            auto rows = probe_conjecture(n, p_grid, master);
            std::cout << "p,palette,log_n_over_p,ratio_upper,lower_bound,ratio_lower\n";
            std::cout.precision(10);
            for (const auto& r : rows)
                std::cout << r.p << ',' << r.palette << ',' << r.log_n_over_p << ',' << r.ratio_upper
                          << ',' << r.lower_bound << ',' << r.ratio_lower << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
