#pragma once

#include <vector>

#include "mahjong/hand_eval.hpp"
#include "mahjong/rng.hpp"
#include "mahjong/state.hpp"
#include "mahjong/tiles.hpp"

namespace mahjong::testing {

// Uniform random 14-tile hand drawn from the 136 physical tiles.
inline HandCounts random_hand(Rng& rng) {
    HandCounts pool{};
    pool.fill(kCopiesPerKind);
    HandCounts hand{};
    int remaining = kTotalTiles;
    for (int i = 0; i < kHandSize; ++i) {
        int pick = int(rng.below(std::uint64_t(remaining)));
        for (int k = 0; k < kNumKinds; ++k) {
            pick -= pool[k];
            if (pick < 0) {
                --pool[k];
                ++hand[k];
                break;
            }
        }
        --remaining;
    }
    return hand;
}

// Random winning hand: 4 sets + a pair, resampled until copy counts fit.
inline HandCounts random_winning_hand(Rng& rng) {
    for (;;) {
        HandCounts hand{};
        bool ok = true;
        for (int s = 0; s < 4 && ok; ++s) {
            if (rng.below(2) == 0) {  // triplet
                int k = int(rng.below(kNumKinds));
                hand[k] += 3;
                ok = hand[k] <= kCopiesPerKind;
            } else {  // run
                int suit = int(rng.below(3));
                int start = int(rng.below(7));
                for (int d = 0; d < 3; ++d) {
                    int k = 9 * suit + start + d;
                    ok = ++hand[k] <= kCopiesPerKind && ok;
                }
            }
        }
        if (ok) {
            int p = int(rng.below(kNumKinds));
            hand[p] += 2;
            ok = hand[p] <= kCopiesPerKind;
        }
        if (ok) return hand;
    }
}

// A mid-game state: deal, then a few random discard/draw rounds.
inline GameState random_midgame_state(Rng& rng, int rounds) {
    GameState s = deal(rng);
    for (int r = 0; r < rounds; ++r) {
        if (s.wall_total() == 0) break;
        // random discard among held kinds
        int held = 0;
        for (int k = 0; k < kNumKinds; ++k)
            if (s.hand[k] > 0) ++held;
        int pick = int(rng.below(std::uint64_t(held)));
        TileKind discard{0};
        for (int k = 0; k < kNumKinds; ++k) {
            if (s.hand[k] == 0) continue;
            if (pick-- == 0) {
                discard = TileKind{k};
                break;
            }
        }
        GameState after = s;
        --after.hand[discard.index];
        ++after.discard[discard.index];
        TileKind drawn = sample_draw(after, rng);
        s = apply(s, discard, drawn);
    }
    return s;
}

}  // namespace mahjong::testing
