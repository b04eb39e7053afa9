#pragma once
// Brute-force maximization of l_p * a_p and l_p * b_p over a uniform grid.
// Works directly with powers and odds ratios rather than the library's
// log-space objective, so it shares no code path with the optimizer under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace lgamble::oracle {

struct GridScenario {
    int m;
    int x;
    double c;
};

struct GridMaxima {
    double alpha = 0.0;
    double beta = 0.0;
};

// 0^0 == 1, which std::pow already guarantees.
inline double binomial_kernel(double p, int m, int x) { return std::pow(p, x) * std::pow(1.0 - p, m - x); }

// Evaluates every scenario at points i / (points - 1), i = 0..points-1.
// Scenarios are limited to m <= 60 so direct powers neither underflow nor lose
// meaningful precision.
inline std::vector<GridMaxima> brute_force_maxima(std::span<const GridScenario> scenarios, std::size_t points) {
    int max_m = 0;
    for (const auto& s : scenarios) max_m = std::max(max_m, s.m);

    std::vector<double> normalizer(scenarios.size()), exp_neg_c(scenarios.size());
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
        const auto& s = scenarios[k];
        normalizer[k] = binomial_kernel(static_cast<double>(s.x) / s.m, s.m, s.x);
        exp_neg_c[k] = std::exp(-s.c);
    }

    std::vector<GridMaxima> best(scenarios.size());
    std::vector<double> p_pow(static_cast<std::size_t>(max_m) + 1), q_pow(p_pow.size());
    for (std::size_t i = 0; i < points; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(points - 1);
        const double q = 1.0 - p;
        p_pow[0] = q_pow[0] = 1.0;
        for (std::size_t k = 1; k < p_pow.size(); ++k) {
            p_pow[k] = p_pow[k - 1] * p;
            q_pow[k] = q_pow[k - 1] * q;
        }
        for (std::size_t k = 0; k < scenarios.size(); ++k) {
            const auto& s = scenarios[k];
            const double likelihood = p_pow[s.x] * q_pow[s.m - s.x] / normalizer[k];
            // a_p = min(1, (p/q) e^-c), b_p = min(1, (q/p) e^c); limits at p = 0, 1.
            double a, b;
            if (p == 0.0) {
                a = 0.0;
                b = 1.0;
            } else if (q == 0.0) {
                a = 1.0;
                b = 0.0;
            } else {
                const double odds = p / q * exp_neg_c[k];
                a = std::min(1.0, odds);
                b = std::min(1.0, 1.0 / odds);
            }
            best[k].alpha = std::max(best[k].alpha, likelihood * a);
            best[k].beta = std::max(best[k].beta, likelihood * b);
        }
    }
    return best;
}

}  // namespace lgamble::oracle
