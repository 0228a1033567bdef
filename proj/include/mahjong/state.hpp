#pragma once

#include <optional>
#include <vector>

#include "mahjong/rng.hpp"
#include "mahjong/tiles.hpp"

namespace mahjong {

// Zone-tracking game state. Copies of a kind are interchangeable, so the
// canonical form is three per-kind count vectors rather than a per-copy
// mark array. Invariant: wall[k] + hand[k] + discard[k] == 4 for every kind.
struct GameState {
    HandCounts wall{};
    HandCounts hand{};
    HandCounts discard{};
    int turn = 0;

    int wall_total() const { return total(wall); }
    int hand_total() const { return total(hand); }
    bool valid() const;
};

struct DrawDistribution {
    struct Entry {
        TileKind kind;
        double probability;
    };
    std::vector<Entry> entries;
};

// Deal a fresh game: 14 hand tiles drawn uniformly from the 136 physical
// tiles, the remaining 122 form the wall. Deterministic in the seed.
GameState deal(std::uint64_t seed);
GameState deal(Rng& rng);

// Exact grouped-by-kind draw distribution over the wall: P(k) = wall[k]/W.
// Empty wall yields nullopt (wall exhausted).
std::optional<DrawDistribution> draw_distribution(const GameState& state);

// Discard one held tile, then move one drawn tile from wall to hand.
// Throws std::invalid_argument on a discard not in hand or draw not in wall.
GameState apply(const GameState& state, TileKind discard, TileKind drawn);

// Sample a draw uniformly over undrawn physical copies.
TileKind sample_draw(const GameState& state, Rng& rng);

}  // namespace mahjong
