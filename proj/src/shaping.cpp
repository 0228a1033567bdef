#include "mahjong/shaping.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahjong {

namespace {
void require_full_hand(const HandCounts& hand) {
    if (total(hand) != kHandSize)
        throw std::invalid_argument("expected a 14-tile hand, got " +
                                    std::to_string(total(hand)));
}
}  // namespace

int shangting(const HandCounts& hand) {
    require_full_hand(hand);
    HandCounts c = hand;
    int score = -kHandSize;
    // Triplets, kind order.
    for (int k = 0; k < kNumKinds; ++k) {
        if (c[k] >= 3) {
            c[k] -= 3;
            score += 3;
        }
    }
    // Runs per suit, repeatedly taking the lowest start.
    for (int suit = 0; suit < 3; ++suit) {
        const int base = 9 * suit;
        for (int r = 0; r <= 6; ++r) {
            while (c[base + r] > 0 && c[base + r + 1] > 0 && c[base + r + 2] > 0) {
                --c[base + r];
                --c[base + r + 1];
                --c[base + r + 2];
                score += 3;
            }
        }
    }
    // First remaining pair only.
    for (int k = 0; k < kNumKinds; ++k) {
        if (c[k] >= 2) {
            score += 2;
            break;
        }
    }
    return score;
}

double unscented_bonus(const HandCounts& hand) {
    require_full_hand(hand);
    double bonus = 0;
    // Honor triplets, then the first remaining honor pair.
    bool pair_counted = false;
    for (int k = 27; k < kNumKinds; ++k) {
        if (hand[k] >= 3) {
            bonus += 3;
        } else if (hand[k] >= 2 && !pair_counted) {
            bonus += 1;
            pair_counted = true;
        }
    }
    // Flush term over suited tiles only; an all-honors hand takes the supremum.
    int suited = 0, largest = 0;
    for (int suit = 0; suit < 3; ++suit) {
        int n = 0;
        for (int r = 0; r < 9; ++r) n += hand[9 * suit + r];
        suited += n;
        largest = std::max(largest, n);
    }
    bonus += suited == 0 ? 3.0 : 3.0 * largest / suited;
    return bonus;
}

ShapedValue shaped_value(const HandCounts& hand, const ShapingParams& params) {
    ShapedValue v;
    v.shangting = shangting(hand);
    v.bonus = unscented_bonus(hand);
    v.combined = v.shangting + params.weight * v.bonus;
    return v;
}

double shaping_reward(const GameState& s, const GameState& s_next,
                      const ShapingParams& params) {
    if (is_winning(s_next.hand))
        return score_hand(s_next.hand, params.base_payoff, params.rules).total_payoff;
    return shaped_value(s_next.hand, params).combined -
           shaped_value(s.hand, params).combined;
}

}  // namespace mahjong
