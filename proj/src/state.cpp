#include "mahjong/state.hpp"

#include <stdexcept>

namespace mahjong {

bool GameState::valid() const {
    int tiles = 0;
    for (int k = 0; k < kNumKinds; ++k) {
        if (wall[k] < 0 || hand[k] < 0 || discard[k] < 0) return false;
        if (wall[k] + hand[k] + discard[k] != kCopiesPerKind) return false;
        tiles += wall[k] + hand[k] + discard[k];
    }
    int h = hand_total();
    return tiles == kTotalTiles && (h == 13 || h == 14);
}

GameState deal(Rng& rng) {
    GameState s;
    s.wall.fill(kCopiesPerKind);
    // Sequential uniform draws without replacement = uniform 14-subset.
    for (int i = 0; i < kHandSize; ++i) {
        TileKind t = sample_draw(s, rng);
        --s.wall[t.index];
        ++s.hand[t.index];
    }
    return s;
}

GameState deal(std::uint64_t seed) {
    Rng rng(seed);
    return deal(rng);
}

std::optional<DrawDistribution> draw_distribution(const GameState& state) {
    const int w = state.wall_total();
    if (w == 0) return std::nullopt;
    DrawDistribution dist;
    for (int k = 0; k < kNumKinds; ++k)
        if (state.wall[k] > 0)
            dist.entries.push_back({TileKind{k}, double(state.wall[k]) / w});
    return dist;
}

GameState apply(const GameState& state, TileKind discard, TileKind drawn) {
    if (state.hand[discard.index] < 1)
        throw std::invalid_argument("discard not in hand: " + render_tile(discard));
    if (state.wall[drawn.index] < 1)
        throw std::invalid_argument("drawn tile not in wall: " + render_tile(drawn));
    GameState next = state;
    --next.hand[discard.index];
    ++next.discard[discard.index];
    --next.wall[drawn.index];
    ++next.hand[drawn.index];
    ++next.turn;
    return next;
}

TileKind sample_draw(const GameState& state, Rng& rng) {
    const int w = state.wall_total();
    if (w == 0) throw std::logic_error("sample_draw on exhausted wall");
    int pick = int(rng.below(std::uint64_t(w)));
    for (int k = 0; k < kNumKinds; ++k) {
        pick -= state.wall[k];
        if (pick < 0) return TileKind{k};
    }
    throw std::logic_error("unreachable");
}

}  // namespace mahjong
