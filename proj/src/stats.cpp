#include "mahjong/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mahjong::stats {

Summary summarize(const std::vector<double>& samples) {
    if (samples.empty()) throw std::invalid_argument("summarize: empty input");
    Summary s;
    double sum = 0;
    s.min = s.max = samples.front();
    for (double x : samples) {
        sum += x;
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    s.mean = sum / samples.size();
    if (samples.size() > 1) {
        double ss = 0;
        for (double x : samples) ss += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(ss / (samples.size() - 1));
    }
    return s;
}

TTestResult one_tailed_t(const std::vector<double>& samples, double mu0,
                         double critical) {
    if (samples.size() < 2)
        throw std::invalid_argument("t-test needs at least 2 samples");
    Summary s = summarize(samples);
    if (s.std == 0) throw std::invalid_argument("t-test needs nonzero std");
    TTestResult r;
    r.mean = s.mean;
    r.std = s.std;
    r.n = int(samples.size());
    r.mu0 = mu0;
    r.critical = critical;
    r.t_statistic = (s.mean - mu0) / (s.std / std::sqrt(double(r.n)));
    r.reject = r.t_statistic > critical;
    return r;
}

double critical_value(Significance level, int n) {
    if (n < 100)
        throw std::invalid_argument(
            "no tabulated critical value for n < 100; supply one explicitly");
    switch (level) {
        case Significance::OnePercent: return 2.334;
        case Significance::FivePercent: return 1.648;
    }
    throw std::invalid_argument("unsupported significance level");
}

}  // namespace mahjong::stats
