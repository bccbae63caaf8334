#include "cliquelab/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cliquelab::theory {

double f_exponent(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("x must be in (0,1)");
    double left = x < 0.5 ? x : 0.0;
    return std::max(left, std::min((3.0 * x - 1.0) / 2.0, 1.0 - x));
}

double predicted_main1(long long n, double p) {
    double np = static_cast<double>(n) * p;
    if (!(np > 1.0)) throw std::invalid_argument("requires np > 1");
    double logn = std::log(static_cast<double>(n));
    double first = std::exp(-np * p) * np / std::log(np);
    double second = std::pow(p, 1.5) * static_cast<double>(n) / std::sqrt(logn);
    return std::max(first, second);
}

double predicted_main2(long long n, double p) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0,1]");
    double np = static_cast<double>(n) * p;
    double logn = std::log(static_cast<double>(n));
    double first = std::exp(-np * p) * np / logn;
    double second = std::min(std::pow(p, 1.5) * static_cast<double>(n) / std::sqrt(logn), 1.0 / p);
    return std::max({1.0, first, second});
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Constant: return "constant";
        case Regime::ChromaticLike: return "chromatic-like";
        case Regime::PolyThreeHalves: return "p32-scaling";
        case Regime::InverseP: return "inverse-p";
    }
    return "?";
}

RegimeResult regime_classify(long long n, double p) {
    auto th = thresholds(n, std::exp(1.0));
    double np = static_cast<double>(n) * p;
    double logn = std::log(static_cast<double>(n));
    if (p <= th.p0) return {Regime::Constant, 1.0};
    if (th.p1 && p <= *th.p1) return {Regime::ChromaticLike, std::exp(-np * p) * np / logn};
    if (p <= th.p2)
        return {Regime::PolyThreeHalves, std::pow(p, 1.5) * static_cast<double>(n) / std::sqrt(logn)};
    return {Regime::InverseP, 1.0 / p};
}

Thresholds thresholds(long long n, double C) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    Thresholds t;
    double nn = static_cast<double>(n);
    double logn = std::log(nn);
    t.p0 = logn / nn;
    t.p0_star = std::pow(nn, -0.6);
    t.p2 = std::pow(logn / (nn * nn), 0.2);
    double loglogn = std::log(logn);
    double rad1 = (logn - 3.0 * loglogn) / (4.0 * nn);
    if (rad1 > 0.0) t.p1 = std::sqrt(rad1);
    double rad1s = (logn - 5.0 * loglogn - 4.0 * std::log(24.0 * C)) / (4.0 * nn);
    if (rad1s > 0.0) t.p1_star = std::sqrt(rad1s);
    return t;
}

AssumptionMargins assumptions_hold(long long n, double p, int k, double C, double tau) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must be in (0,1)");
    AssumptionMargins m;
    double nn = static_cast<double>(n);
    double np = nn * p;
    double log1p_term = std::log1p(-std::pow(p, k));
    double lower = std::pow(nn, -1.0 + tau);
    m.lower_margin = p / lower;
    double upper = (1.0 / (6.0 * C)) *
                   std::pow(k * static_cast<double>(k) * std::log(1.0 / p) * np, -1.0 / (2.0 * (k - 1))) *
                   std::exp(nn / (k - 1) * log1p_term);
    m.upper_margin = upper / p;
    double lhs2 = std::max(np * p, std::pow(p, -(k - 2) / 2.0)) *
                  std::exp(nn * (k - 2.0) / (k - 1.0) * log1p_term);
    double rhs2 = (k >= 3 ? 1.0 : 0.0) * std::pow(static_cast<double>(k), 5) * std::log(1.0 / p);
    m.second_margin = rhs2 > 0.0 ? lhs2 / rhs2 : std::numeric_limits<double>::infinity();
    m.ok = m.lower_margin >= 1.0 && m.upper_margin >= 1.0 && lhs2 >= rhs2;
    return m;
}

double lower_bound_value(long long n, double p, int k, double C) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    double nn = static_cast<double>(n);
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    double second = std::pow(p, 0.5 * k) * nn / std::pow(kfact * k * std::log(1.0 / p), 1.0 / (k - 1));
    double expo = std::exp(nn / (k - 1) * std::log1p(-std::pow(p, k)));
    return (1.0 / (C * C)) * std::min(1.0 / p, second) * expo;
}

long long canonical_k(long long n, double p) {
    auto th = thresholds(n, std::exp(1.0));
    if (!(p >= th.p2 && p < 1.0)) throw std::invalid_argument("canonical k requires p in [p2, 1)");
    double ratio = std::log(static_cast<double>(n)) / std::log(1.0 / p);
    double r = std::round(ratio);
    if (std::abs(ratio - r) < 1e-9) return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(ratio));
}

int default_k_max(long long n, double p) {
    return static_cast<int>(std::ceil(2.0 * std::log(static_cast<double>(n)) / std::log(1.0 / p)));
}

std::optional<BestK> best_k(long long n, double p, double C, double tau, int k_max) {
    if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
    std::optional<BestK> best;
    for (int k = 2; k <= k_max; ++k) {
        if (!assumptions_hold(n, p, k, C, tau).ok) continue;
        double v = lower_bound_value(n, p, k, C);
        if (!best || v > best->value) best = BestK{k, v};
    }
    return best;
}

}  // namespace cliquelab::theory
