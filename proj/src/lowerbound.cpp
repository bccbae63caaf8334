#include "cliquelab/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cliquelab/gnp.hpp"

namespace cliquelab {

SizeParameter size_parameter_s(long long n, double p, int k, double C) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double np = static_cast<double>(n) * p;
    const double second = std::pow(p, -0.5 * k) * std::pow(kfact * k * std::log(1.0 / p), 1.0 / (k - 1));
    // (1-p^k)^{-n/(k-1)} in log space
    const double expo = std::exp(-static_cast<double>(n) / (k - 1) * std::log1p(-std::pow(p, k)));
    SizeParameter out;
    out.value = C * std::max(np, second) * expo;
    out.ceiled = static_cast<long long>(std::ceil(out.value));
    return out;
}

long long truncation_x(double s, double p) {
    return static_cast<long long>(std::ceil(6.0 * s * p));
}

double vertex_class_budget(int i, double s, double x, long long n) {
    return 12.0 * s * std::log2(std::exp(1.0) * static_cast<double>(n) / s) /
           ((i + 1.0) * std::pow(2.0, i + 1) * x);
}

MarkedEdges mark_edges(const Graph& g, std::span<const int> s, long long x) {
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    MarkedEdges out;
    out.x = x;
    int n = g.num_vertices();
    out.marked.assign(n, {});
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    for (int w = 0; w < n; ++w) {
        if (in_s[w]) continue;
        auto& mk = out.marked[w];
        // for_neighbors visits in ascending order, which is the fixed
        // "lexicographically first" endpoint order
        g.for_neighbors(w, [&](int v) {
            if (in_s[v] && static_cast<long long>(mk.size()) < x) mk.push_back(v);
        });
    }
    return out;
}

namespace {

using Row = std::vector<std::uint64_t>;

struct CountContext {
    int k;
    const std::vector<Row>* cov;   // per S-position: outside vertices adjacent
    const Graph* g;
    const std::vector<int>* s_list;
    int words;
    long long uncovered_count = 0;
    long long clique_uncovered = 0;
    bool track_clique = true;
    std::vector<int> chosen;

    void recurse(int start, const Row& prefix, bool clique) {
        if (static_cast<int>(chosen.size()) == k) {
            bool empty = true;
            for (int w = 0; w < words; ++w)
                if (prefix[w]) {
                    empty = false;
                    break;
                }
            if (empty) {
                ++uncovered_count;
                if (clique) ++clique_uncovered;
            }
            return;
        }
        int need = k - static_cast<int>(chosen.size());
        for (int i = start; i + need <= static_cast<int>(cov->size()); ++i) {
            bool next_clique = clique;
            if (track_clique && clique) {
                for (int j : chosen)
                    if (!g->has_edge((*s_list)[j], (*s_list)[i])) {
                        next_clique = false;
                        break;
                    }
            }
            Row next(words);
            for (int w = 0; w < words; ++w) next[w] = prefix[w] & (*cov)[i][w];
            chosen.push_back(i);
            recurse(i + 1, next, next_clique);
            chosen.pop_back();
        }
    }
};

}  // namespace

UncoveredStats count_stats(const Graph& g, std::span<const int> s, int k, long long x) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (static_cast<long long>(s.size()) < k) throw std::invalid_argument("|S| must be at least k");
    std::vector<int> s_list(s.begin(), s.end());
    std::sort(s_list.begin(), s_list.end());
    int n = g.num_vertices();
    std::vector<char> in_s(n, 0);
    for (int v : s_list) in_s[v] = 1;
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) outside.push_back(v);
    int n_out = static_cast<int>(outside.size());
    int words = std::max((n_out + 63) / 64, 1);

    const int sz = static_cast<int>(s_list.size());
    std::vector<Row> cov(sz, Row(words, 0)), mcov(sz, Row(words, 0));
    for (int wi = 0; wi < n_out; ++wi) {
        int w = outside[wi];
        for (int i = 0; i < sz; ++i)
            if (g.has_edge(w, s_list[i])) cov[i][wi >> 6] |= 1ULL << (wi & 63);
    }
    auto marks = mark_edges(g, s_list, x);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < sz; ++i) pos[s_list[i]] = i;
    for (int wi = 0; wi < n_out; ++wi)
        for (int v : marks.marked[outside[wi]]) mcov[pos[v]][wi >> 6] |= 1ULL << (wi & 63);

    UncoveredStats out;
    out.k = k;
    out.x = x;

    Row full(std::max(words, 1), 0);
    for (int wi = 0; wi < n_out; ++wi) full[wi >> 6] |= 1ULL << (wi & 63);

    CountContext xs_ctx{k, &cov, &g, &s_list, std::max(words, 1)};
    xs_ctx.recurse(0, full, true);
    out.xs = xs_ctx.uncovered_count;
    out.ys = xs_ctx.clique_uncovered;

    CountContext xp_ctx{k, &mcov, &g, &s_list, std::max(words, 1)};
    xp_ctx.track_clique = false;
    xp_ctx.recurse(0, full, false);
    out.xprime = xp_ctx.uncovered_count;
    return out;
}

UncoveredStats count_stats_naive(const Graph& g, std::span<const int> s, int k, long long x) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (static_cast<long long>(s.size()) < k) throw std::invalid_argument("|S| must be at least k");
    std::vector<int> s_list(s.begin(), s.end());
    std::sort(s_list.begin(), s_list.end());
    int n = g.num_vertices();
    std::vector<char> in_s(n, 0);
    for (int v : s_list) in_s[v] = 1;
    auto marks = mark_edges(g, s_list, x);

    UncoveredStats out;
    out.k = k;
    out.x = x;
    int sz = static_cast<int>(s_list.size());
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool covered = false, safely = false;
        for (int w = 0; w < n && !(covered && safely); ++w) {
            if (in_s[w]) continue;
            bool all_adj = true, all_marked = true;
            for (int j = 0; j < k; ++j) {
                int v = s_list[idx[j]];
                if (!g.has_edge(w, v)) all_adj = false;
                if (std::find(marks.marked[w].begin(), marks.marked[w].end(), v) == marks.marked[w].end())
                    all_marked = false;
            }
            covered = covered || all_adj;
            safely = safely || all_marked;
        }
        if (!covered) {
            ++out.xs;
            bool clique = true;
            for (int a = 0; a < k && clique; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (!g.has_edge(s_list[idx[a]], s_list[idx[b]])) {
                        clique = false;
                        break;
                    }
            if (clique) ++out.ys;
        }
        if (!safely) ++out.xprime;
        int j = k - 1;
        while (j >= 0 && idx[j] == sz - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

double expected_xs(long long n, long long s, double p, int k) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    if (k > s || s > n) throw std::invalid_argument("need k <= s <= n");
    double log_binom = std::lgamma(static_cast<double>(s) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                       std::lgamma(static_cast<double>(s - k) + 1);
    if (p == 1.0) return s < n ? 0.0 : std::exp(log_binom);
    double log_term = static_cast<double>(n - s) * std::log1p(-std::pow(p, k));
    return std::exp(log_binom + log_term);
}

ConcentrationSummary concentration_experiment(long long n, double p, int k, long long s, int trials,
                                              int sets_per_trial, Seed seed, long long x, double gamma) {
    if (s > n) throw std::invalid_argument("s must be at most n");
    if (trials < 1 || sets_per_trial < 1) throw std::invalid_argument("need at least one trial and set");
    if (x < 0) x = truncation_x(static_cast<double>(s), p);

    ConcentrationSummary out;
    out.trials = trials;
    out.sets_per_trial = sets_per_trial;
    out.gamma = gamma;
    out.expected = expected_xs(n, s, p, k);

    int total = trials * sets_per_trial;
    std::vector<double> xs_vals(total), xp_vals(total);

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        Seed trial_seed = derive(seed, static_cast<std::uint64_t>(t));
        Graph g = generate_gnp(static_cast<int>(n), p, trial_seed);
        for (int j = 0; j < sets_per_trial; ++j) {
            Rng rng(derive(trial_seed, 0x736574ULL + j));
            // partial Fisher-Yates for a uniform s-subset
            std::vector<int> pool(n);
            std::iota(pool.begin(), pool.end(), 0);
            for (long long i = 0; i < s; ++i) {
                long long pick = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n - i)));
                std::swap(pool[i], pool[pick]);
            }
            std::vector<int> subset(pool.begin(), pool.begin() + s);
            auto stats = count_stats(g, subset, k, x);
            xs_vals[t * sets_per_trial + j] = static_cast<double>(stats.xs);
            xp_vals[t * sets_per_trial + j] = static_cast<double>(stats.xprime);
        }
    }

    double sum = 0, sum_sq = 0, sum_xp = 0;
    for (int i = 0; i < total; ++i) {
        sum += xs_vals[i];
        sum_sq += xs_vals[i] * xs_vals[i];
        sum_xp += xp_vals[i];
    }
    out.mean_xs = sum / total;
    out.stddev_xs = std::sqrt(std::max(0.0, sum_sq / total - out.mean_xs * out.mean_xs));
    out.mean_xprime = sum_xp / total;
    int below = 0, below_xp = 0;
    for (int i = 0; i < total; ++i) {
        if (xs_vals[i] < 0.5 * out.expected) ++below;
        if (xp_vals[i] < (1.0 - gamma) * out.mean_xprime) ++below_xp;
    }
    out.frac_xs_below_half = static_cast<double>(below) / total;
    out.frac_xprime_below_gamma = static_cast<double>(below_xp) / total;
    return out;
}

ClassSizeHistogram class_size_experiment(const Graph& g, std::span<const int> s, long long x, double p) {
    if (x < 1) throw std::invalid_argument("x must be at least 1");
    int n = g.num_vertices();
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    std::vector<long long> sizes;
    for (int w = 0; w < n; ++w) {
        if (in_s[w]) continue;
        long long deg_s = 0;
        g.for_neighbors(w, [&](int v) { deg_s += in_s[v]; });
        if (deg_s < x) continue;
        int i = 0;
        while ((x << (i + 1)) <= deg_s) ++i;  // half-open classes [2^i x, 2^{i+1} x)
        if (static_cast<int>(sizes.size()) <= i) sizes.resize(i + 1, 0);
        ++sizes[i];
    }
    ClassSizeHistogram hist;
    double np = static_cast<double>(n) * p;
    for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
        ClassSizeHistogram::Row row;
        row.i = i;
        row.size = sizes[i];
        row.budget = vertex_class_budget(i, static_cast<double>(s.size()), static_cast<double>(x), n);
        row.in_window = static_cast<double>(x) * std::pow(2.0, i) <= 2.0 * np;
        row.exceeds = static_cast<double>(row.size) > row.budget;
        if (row.in_window && row.exceeds) ++hist.exceedances_in_window;
        hist.rows.push_back(row);
    }
    return hist;
}

}  // namespace cliquelab
