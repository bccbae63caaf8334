#pragma once

#include <optional>
#include <string>

namespace cliquelab::theory {

// f(x) := max{x*1[x<1/2], min{(3x-1)/2, 1-x}} for x in (0,1)
double f_exponent(double x);

// max{e^{-np^2} np / log(np), p^{3/2} n / sqrt(log n)}; requires np > 1
double predicted_main1(long long n, double p);

// max{1, e^{-np^2} np / log n, min{p^{3/2} n / sqrt(log n), 1/p}}
double predicted_main2(long long n, double p);

enum class Regime { Constant, ChromaticLike, PolyThreeHalves, InverseP };

const char* regime_name(Regime r);

struct RegimeResult {
    Regime regime;
    double dominant_value;
};

RegimeResult regime_classify(long long n, double p);

struct Thresholds {
    double p0 = 0;       // log n / n
    double p0_star = 0;  // n^{-0.6}
    std::optional<double> p1;       // sqrt((log n - 3 log log n)/(4n))
    double p2 = 0;       // (log n / n^2)^{1/5}
    std::optional<double> p1_star;  // sqrt((log n - 5 log log n - 4 log(24C))/(4n))
};

Thresholds thresholds(long long n, double C);

struct AssumptionMargins {
    bool ok = false;
    double lower_margin = 0;   // p / n^{-1+tau}
    double upper_margin = 0;   // RHS of the p upper bound / p
    double second_margin = 0;  // LHS/RHS of the second condition (inf when RHS = 0)
};

AssumptionMargins assumptions_hold(long long n, double p, int k, double C, double tau);

// RHS of the lower-bound inequality:
// (1/C^2) min{1/p, p^{k/2} n / [k! k log(1/p)]^{1/(k-1)}} (1-p^k)^{n/(k-1)}
double lower_bound_value(long long n, double p, int k, double C);

// ceil(log_{1/p} n); only defined for p in [p2(n), 1)
long long canonical_k(long long n, double p);

struct BestK {
    int k = 0;
    double value = 0;
};

// Maximize lower_bound_value over k in [2, k_max] with assumptions
// satisfied; nullopt when no k qualifies.
std::optional<BestK> best_k(long long n, double p, double C, double tau, int k_max);

// Default k_max = ceil(2 log n / log(1/p))
int default_k_max(long long n, double p);

}  // namespace cliquelab::theory
