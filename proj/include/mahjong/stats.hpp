#pragma once

#include <vector>

namespace mahjong::stats {

struct Summary {
    double mean = 0;
    double std = 0;  // sample std (n-1 denominator), 0 for a single sample
    double min = 0;
    double max = 0;
};

Summary summarize(const std::vector<double>& samples);  // throws on empty input

struct TTestResult {
    double mean = 0;
    double std = 0;
    int n = 0;
    double mu0 = 0;
    double t_statistic = 0;
    double critical = 0;
    bool reject = false;  // t_statistic > critical
};

// One-tailed one-sample t-test of h0: mu <= mu0 against h1: mu > mu0.
// Requires n >= 2 and nonzero sample std.
TTestResult one_tailed_t(const std::vector<double>& samples, double mu0,
                         double critical);

enum class Significance { OnePercent, FivePercent };

// Large-sample critical values (n >= 100): 2.334 at 1%, 1.648 at 5%.
// Outside that regime callers must supply the critical value themselves.
double critical_value(Significance level, int n);

}  // namespace mahjong::stats
