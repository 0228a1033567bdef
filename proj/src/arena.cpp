#include "mahjong/arena.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mahjong {

namespace {

// Index-addressed parallel loop: each worker claims indices from a shared
// counter, results land in per-index slots, so aggregation order never
// depends on the job count.
template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
    jobs = std::clamp(jobs, 1, n);
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace

BatchStats run_batch(int n, const ShapingParams& params, std::uint64_t master_seed,
                     int jobs) {
    if (n < 1) throw std::invalid_argument("batch needs at least one game");
    struct Row {
        bool won;
        int discards;
        int multiplier;
    };
    std::vector<Row> rows(n);
    parallel_for(n, jobs, [&](int i) {
        GameLog log = play_game(split_seed(master_seed, i), params, /*record_q=*/false);
        rows[i] = {log.outcome.won, log.outcome.discards,
                   log.outcome.won ? log.outcome.score.multiplier : 0};
    });

    BatchStats stats;
    stats.games = n;
    double sum = 0, sumsq = 0;
    for (const auto& r : rows) {
        if (!r.won) continue;
        ++stats.completed;
        sum += r.discards;
        sumsq += double(r.discards) * r.discards;
        ++stats.discard_histogram[r.discards];
        ++stats.score_histogram[r.multiplier];
        if (stats.completed == 1) {
            stats.min_discards = stats.max_discards = r.discards;
        } else {
            stats.min_discards = std::min(stats.min_discards, r.discards);
            stats.max_discards = std::max(stats.max_discards, r.discards);
        }
    }
    stats.completion_rate = double(stats.completed) / n;
    if (stats.completed > 0) stats.mean_discards = sum / stats.completed;
    if (stats.completed > 1)
        stats.std_discards = std::sqrt(
            (sumsq - sum * sum / stats.completed) / (stats.completed - 1));
    return stats;
}

DuelResult duel_with_seeds(std::uint64_t seed1, std::uint64_t seed2,
                           const ShapingParams& params1, const ShapingParams& params2,
                           double base_payoff, double transfer_factor) {
    ShapingParams p1 = params1;
    ShapingParams p2 = params2;
    p1.base_payoff = p2.base_payoff = base_payoff;
    GameLog g1 = play_game(seed1, p1, /*record_q=*/false);
    GameLog g2 = play_game(seed2, p2, /*record_q=*/false);

    constexpr int kNever = std::numeric_limits<int>::max();
    int t1 = g1.outcome.won ? g1.outcome.discards : kNever;
    int t2 = g2.outcome.won ? g2.outcome.discards : kNever;

    DuelResult r;
    if (t1 == t2) return r;  // simultaneous win or double exhaustion
    const GameLog& winner = t1 < t2 ? g1 : g2;
    r.winner = t1 < t2 ? DuelWinner::Player1 : DuelWinner::Player2;
    r.winning_turns = winner.outcome.discards;
    r.multiplier = winner.outcome.score.multiplier;
    double pot = transfer_factor * std::ldexp(base_payoff, r.multiplier);
    r.transfer = r.winner == DuelWinner::Player2 ? pot : -pot;
    return r;
}

DuelResult duel(std::uint64_t master_seed, const ShapingParams& params1,
                const ShapingParams& params2, double base_payoff,
                double transfer_factor) {
    return duel_with_seeds(split_seed(master_seed, 0), split_seed(master_seed, 1),
                           params1, params2, base_payoff, transfer_factor);
}

MatchSeries run_match_series(int n_matches, const ShapingParams& params1,
                             const ShapingParams& params2, double base_payoff,
                             std::uint64_t master_seed, double transfer_factor,
                             int jobs) {
    if (n_matches < 1) throw std::invalid_argument("series needs at least one match");
    MatchSeries series;
    series.per_match.resize(n_matches);
    parallel_for(n_matches, jobs, [&](int i) {
        series.per_match[i] = duel(split_seed(master_seed, i), params1, params2,
                                   base_payoff, transfer_factor);
    });
    series.cumulative.reserve(n_matches);
    double running = 0;
    for (const auto& m : series.per_match) {
        running += m.transfer;
        series.cumulative.push_back(running);
    }
    series.total = running;
    return series;
}

SweepResult sweep(const std::vector<double>& weights1,
                  const std::vector<double>& weights2, int matches_per_cell,
                  double base_payoff, std::uint64_t master_seed,
                  double transfer_factor, int jobs) {
    if (weights1.empty() || weights2.empty())
        throw std::invalid_argument("sweep needs nonempty weight lists");
    if (matches_per_cell < 1)
        throw std::invalid_argument("sweep needs at least one match per cell");

    SweepResult result;
    result.weights1 = weights1;
    result.weights2 = weights2;
    result.earnings.assign(weights1.size(),
                           std::vector<double>(weights2.size(), 0));
    for (std::size_t i = 0; i < weights1.size(); ++i) {
        for (std::size_t j = 0; j < weights2.size(); ++j) {
            ShapingParams p1{weights1[i], base_payoff};
            ShapingParams p2{weights2[j], base_payoff};
            std::uint64_t cell_seed =
                split_seed(master_seed, i * weights2.size() + j);
            std::vector<double> transfers(matches_per_cell);
            if (weights1[i] == weights2[j]) {
                // Self-play diagonal: mirror the seed pair within each pair of
                // matches so transfers cancel exactly.
                parallel_for(matches_per_cell, jobs, [&](int m) {
                    std::uint64_t a = split_seed(cell_seed, m / 2 * 2);
                    std::uint64_t b = split_seed(cell_seed, m / 2 * 2 + 1);
                    if (m % 2) std::swap(a, b);
                    transfers[m] = duel_with_seeds(a, b, p1, p2, base_payoff,
                                                   transfer_factor)
                                       .transfer;
                });
            } else {
                parallel_for(matches_per_cell, jobs, [&](int m) {
                    transfers[m] = duel(split_seed(cell_seed, m), p1, p2,
                                        base_payoff, transfer_factor)
                                       .transfer;
                });
            }
            double tot = 0;
            for (double t : transfers) tot += t;
            result.earnings[i][j] = tot;
        }
    }
    return result;
}

std::string batch_report(const BatchStats& stats) {
    std::ostringstream out;
    out << "games: " << stats.games << "\n"
        << "completed: " << stats.completed << "\n"
        << "completion_rate: " << stats.completion_rate << "\n"
        << "discards_mean: " << stats.mean_discards << "\n"
        << "discards_std: " << stats.std_discards << "\n"
        << "discards_min: " << stats.min_discards << "\n"
        << "discards_max: " << stats.max_discards << "\n"
        << "score_counts:";
    for (const auto& [m, count] : stats.score_histogram)
        out << " " << m << "=" << count;
    out << "\n";
    return out.str();
}

std::string histogram_csv(const std::map<int, int>& histogram,
                          const std::string& key_name) {
    std::ostringstream out;
    out << key_name << ",count\n";
    for (const auto& [key, count] : histogram) out << key << "," << count << "\n";
    return out.str();
}

std::string series_csv(const MatchSeries& series) {
    std::ostringstream out;
    out << "match,winner,winning_turns,multiplier,transfer,cumulative\n";
    for (std::size_t i = 0; i < series.per_match.size(); ++i) {
        const auto& m = series.per_match[i];
        const char* who = m.winner == DuelWinner::Player1   ? "p1"
                          : m.winner == DuelWinner::Player2 ? "p2"
                                                            : "draw";
        out << i + 1 << "," << who << "," << m.winning_turns << ","
            << m.multiplier << "," << m.transfer << "," << series.cumulative[i]
            << "\n";
    }
    return out.str();
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "w1\\w2";
    for (double w2 : result.weights2) out << "," << w2;
    out << "\n";
    for (std::size_t i = 0; i < result.weights1.size(); ++i) {
        out << result.weights1[i];
        for (double v : result.earnings[i]) out << "," << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace mahjong
