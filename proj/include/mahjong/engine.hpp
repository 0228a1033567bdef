#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahjong/planner.hpp"
#include "mahjong/shaping.hpp"
#include "mahjong/state.hpp"

namespace mahjong {

struct TurnRecord {
    HandCounts hand;  // the 14 tiles before the discard
    std::optional<QReport> q_report;
    TileKind discard;
    TileKind drawn;
};

struct GameOutcome {
    bool won = false;
    int discards = 0;
    ScoreBreakdown score;  // meaningful only when won
};

struct GameLog {
    std::uint64_t seed = 0;
    ShapingParams params;
    std::vector<TurnRecord> turns;
    GameOutcome outcome;
};

// Play one seeded game to completion: deal, then discard via the depth-1
// policy and draw until the hand wins or the wall runs out. A hand that wins
// straight off the deal ends the game with zero discards.
GameLog play_game(std::uint64_t seed, const ShapingParams& params,
                  bool record_q = true);

// Fixed-width text: hand tokens, their Q-values to 4 decimals, and a marker
// under the recommended discard.
std::string render_snapshot(const GameState& state, const QReport& report);

// Line-oriented, versioned log format; parse() round-trips serialize().
std::string serialize(const GameLog& log);
GameLog parse_game_log(const std::string& text);

// Re-run the log's seed and parameters and check the recorded turns and
// outcome match move for move.
bool replays_identically(const GameLog& log);

}  // namespace mahjong
