#pragma once

#include "mahjong/hand_eval.hpp"
#include "mahjong/state.hpp"
#include "mahjong/tiles.hpp"

namespace mahjong {

struct ShapingParams {
    double weight = 0;       // bonus weight w, >= 0
    double base_payoff = 2;  // b, > 0
    ScoreRules rules{};
};

struct ShapedValue {
    int shangting = 0;  // in [-14, 0]
    double bonus = 0;   // pre-weight
    double combined = 0;
};

// Greedy distance-to-win in [-14, 0]: start at -14, extract triplets in kind
// order (+3 each), then runs per suit lowest-start-first (+3 each), then the
// first remaining pair (+2). Requires a 14-tile hand.
int shangting(const HandCounts& hand);

// Honor/flush synergy bonus, returned pre-weight: 3 per honor triplet, +1 for
// the first remaining honor pair, +3 * (largest single-suit count / suited
// tiles). With no suited tiles the flush term is 3.
double unscented_bonus(const HandCounts& hand);

ShapedValue shaped_value(const HandCounts& hand, const ShapingParams& params);

// Difference-form shaping reward: the official payoff if the next hand wins,
// otherwise the change in combined shaped value.
double shaping_reward(const GameState& s, const GameState& s_next,
                      const ShapingParams& params);

}  // namespace mahjong
