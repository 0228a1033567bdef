#include <doctest.h>

#include <sstream>

#include <stdexcept>

#include "helpers.hpp"
#include "mahjong/engine.hpp"

using namespace mahjong;

TEST_CASE("play_game is deterministic") {
    ShapingParams p;
    p.weight = 0;
    GameLog a = play_game(42, p);
    GameLog b = play_game(42, p);
    CHECK(serialize(a) == serialize(b));
}

TEST_CASE("completed games stay within the wall budget") {
    ShapingParams p;
    p.weight = 1.2;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GameLog log = play_game(seed, p, /*record_q=*/false);
        CHECK(log.outcome.discards >= 0);
        CHECK(log.outcome.discards <= kWallAfterDeal);
        CHECK(int(log.turns.size()) == log.outcome.discards);
    }
}

TEST_CASE("logs replay move for move") {
    ShapingParams p;
    p.weight = 0.5;
    GameLog log = play_game(7, p, /*record_q=*/false);
    CHECK(replays_identically(log));
}

TEST_CASE("log serialization round-trips") {
    ShapingParams p;
    p.weight = 1.2;
    GameLog log = play_game(99, p, /*record_q=*/true);
    GameLog back = parse_game_log(serialize(log));
    CHECK(back.seed == log.seed);
    CHECK(back.params.weight == log.params.weight);
    CHECK(back.turns.size() == log.turns.size());
    CHECK(back.outcome.won == log.outcome.won);
    CHECK(back.outcome.discards == log.outcome.discards);
    CHECK(serialize(back) == serialize(log));
    CHECK(replays_identically(back));
}

TEST_CASE("every intermediate state satisfies the invariants") {
    ShapingParams p;
    p.weight = 0;
    GameLog log = play_game(12345, p, /*record_q=*/false);
    Rng rng(log.seed);
    GameState state = deal(rng);
    for (const auto& t : log.turns) {
        CHECK(state.hand == t.hand);
        CHECK(state.valid());
        CHECK(state.hand_total() == kHandSize);
        CHECK(!is_winning(state.hand));
        // the drawn tile was in the wall at draw time
        CHECK(state.wall[t.drawn.index] > 0);
        state = apply(state, t.discard, t.drawn);
    }
    if (log.outcome.won) CHECK(is_winning(state.hand));
    CHECK(state.turn == log.outcome.discards);
}

TEST_CASE("win detection uses the exact detector, not greedy zero") {
    // greedy scores this winning hand -2; the engine must still terminate on it
    HandCounts gap = parse_hand("1m 1m 1m 2m 2m 2m 3m 3m 3m 3m 4m 4m 4m 5m");
    CHECK(shangting(gap) == -2);
    CHECK(is_winning(gap));
}

TEST_CASE("snapshot renders one column per hand tile") {
    GameState s;
    s.hand = parse_hand("1m 2m 3m 4m 5m 6m 1p 2p 3p 7s 8s 9s E N");
    for (int k = 0; k < kNumKinds; ++k) s.wall[k] = kCopiesPerKind - s.hand[k];
    ShapingParams p;
    QReport r = q_values(s, p);
    std::string text = render_snapshot(s, r);
    std::istringstream in(text);
    std::string tiles_row, q_row;
    std::getline(in, tiles_row);
    std::getline(in, q_row);
    std::istringstream tokens(tiles_row);
    int columns = 0;
    std::string tok;
    while (tokens >> tok) ++columns;
    CHECK(columns == 14);
    CHECK(text.find("^ best") != std::string::npos);
    CHECK(render_snapshot(s, r) == text);  // deterministic
}

TEST_CASE("snapshot marks the dominant discard in a near-win state") {
    GameState s;
    s.hand = parse_hand("1m 2m 3m 4m 5m 6m 1p 2p 3p 7s 8s 9s E N");
    for (int k = 0; k < kNumKinds; ++k) s.wall[k] = kCopiesPerKind - s.hand[k];
    int n = parse_tile("N").index;
    s.discard[n] = s.wall[n];
    s.wall[n] = 0;
    ShapingParams p;
    QReport r = q_values(s, p);
    CHECK(r.best == parse_tile("N"));
    std::string text = render_snapshot(s, r);
    // marker column lines up under the final (N) column
    auto mark = text.rfind("^ best");
    CHECK(mark != std::string::npos);
}

TEST_CASE("snapshot rejects a mismatched report") {
    GameState s;
    s.hand = parse_hand("1m 2m 3m 4m 5m 6m 1p 2p 3p 7s 8s 9s E N");
    for (int k = 0; k < kNumKinds; ++k) s.wall[k] = kCopiesPerKind - s.hand[k];
    ShapingParams p;
    QReport r = q_values(s, p);
    GameState other;
    other.hand = parse_hand("9m 9m 9m 1p 1p 1p 2p 3p 4p 5p 6p 7p W W");
    for (int k = 0; k < kNumKinds; ++k)
        other.wall[k] = kCopiesPerKind - other.hand[k];
    CHECK_THROWS_AS(render_snapshot(other, r), std::invalid_argument);
}
