#pragma once

#include <map>
#include <string>
#include <vector>

#include "mahjong/engine.hpp"

namespace mahjong {

struct BatchStats {
    int games = 0;
    int completed = 0;
    double completion_rate = 0;
    double mean_discards = 0;
    double std_discards = 0;  // sample std, n-1
    int min_discards = 0;
    int max_discards = 0;
    std::map<int, int> discard_histogram;  // discards -> count (completed games)
    std::map<int, int> score_histogram;    // multiplier m -> count
};

// n independent games with seeds split from the master seed. `jobs` workers;
// aggregation is per-game-index, so results are identical for any job count.
BatchStats run_batch(int n, const ShapingParams& params, std::uint64_t master_seed,
                     int jobs = 1);

enum class DuelWinner { Player1, Player2, Draw };

struct DuelResult {
    DuelWinner winner = DuelWinner::Draw;
    int winning_turns = 0;
    int multiplier = 0;
    double transfer = 0;  // positive = player 2 gains
};

// Tandem match: two independent single-player games advance in lockstep; the
// one that completes a winning hand in fewer discards takes the pot. The
// loser pays transfer_factor * 2^m * b (factor 3 stands in for three losers).
DuelResult duel_with_seeds(std::uint64_t seed1, std::uint64_t seed2,
                           const ShapingParams& params1, const ShapingParams& params2,
                           double base_payoff, double transfer_factor = 3);

DuelResult duel(std::uint64_t master_seed, const ShapingParams& params1,
                const ShapingParams& params2, double base_payoff,
                double transfer_factor = 3);

struct MatchSeries {
    std::vector<DuelResult> per_match;
    std::vector<double> cumulative;  // player 2 earnings after each match
    double total = 0;                // player 2 total
};

MatchSeries run_match_series(int n_matches, const ShapingParams& params1,
                             const ShapingParams& params2, double base_payoff,
                             std::uint64_t master_seed, double transfer_factor = 3,
                             int jobs = 1);

struct SweepResult {
    std::vector<double> weights1;  // rows, player 1
    std::vector<double> weights2;  // columns, player 2
    std::vector<std::vector<double>> earnings;  // player 2 totals per cell
};

// Table-style weight sweep. Diagonal cells (w1 == w2) use mirrored seed
// pairing so self-play totals cancel exactly.
SweepResult sweep(const std::vector<double>& weights1,
                  const std::vector<double>& weights2, int matches_per_cell,
                  double base_payoff, std::uint64_t master_seed,
                  double transfer_factor = 3, int jobs = 1);

// CSV / report exports (Fig 5, Fig 6, Table 2 data).
std::string batch_report(const BatchStats& stats);
std::string histogram_csv(const std::map<int, int>& histogram,
                          const std::string& key_name);
std::string series_csv(const MatchSeries& series);
std::string sweep_csv(const SweepResult& result);

}  // namespace mahjong
