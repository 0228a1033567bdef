#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "mahjong/hand_eval.hpp"

using namespace mahjong;
using mahjong::testing::random_hand;
using mahjong::testing::random_winning_hand;

namespace {
HandCounts hand(const char* text) { return parse_hand(text); }
}  // namespace

TEST_CASE("winning detection on the spec-level anchors") {
    CHECK(is_winning(hand("1m 1m 1m 2m 2m 2m 3p 4p 5p 7s 8s 9s E E")));
    CHECK(!is_winning(hand("1m 4m 7m 1p 4p 7p 1s 4s 7s E S W N RD")));
    // the greedy blind spot: 111m 222m 333m 345m 44m
    CHECK(is_winning(hand("1m 1m 1m 2m 2m 2m 3m 3m 3m 3m 4m 4m 4m 5m")));
}

TEST_CASE("is_winning rejects wrong hand sizes") {
    HandCounts h{};
    h[0] = 3;
    CHECK_THROWS_AS(is_winning(h), std::invalid_argument);
}

TEST_CASE("decompose returns the lowest viable pair kind") {
    auto d = decompose(hand("1m 1m 1m 2m 2m 2m 3m 3m 3m 3m 4m 4m 4m 5m"));
    REQUIRE(d.has_value());
    // Pair 1m admits a pure-run reading (123 234 234 345), so the canonical
    // pair is 1m, not a higher kind.
    CHECK(d->pair.index == 0);
    CHECK(d->sets.size() == 4);
}

TEST_CASE("decompose union equals the hand") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        HandCounts h = random_winning_hand(rng);
        auto d = decompose(h);
        REQUIRE(d.has_value());
        HandCounts rebuilt{};
        rebuilt[d->pair.index] += 2;
        for (const auto& m : d->sets) {
            if (m.type == Meld::Type::Triplet) {
                rebuilt[m.tile.index] += 3;
            } else {
                for (int o = 0; o < 3; ++o) ++rebuilt[m.tile.index + o];
            }
        }
        CHECK(rebuilt == h);
    }
}

TEST_CASE("decompose is absent for non-winning hands") {
    CHECK(!decompose(hand("1m 4m 7m 1p 4p 7p 1s 4s 7s E S W N RD")).has_value());
}

TEST_CASE("an all-pairs-ish run hand decomposes") {
    auto d = decompose(hand("2m 2m 3m 3m 4m 4m 5m 5m 6m 6m 7m 7m 8m 8m"));
    CHECK(d.has_value());
}

TEST_CASE("payoff formula") {
    auto [i1, t1] = payoff(1, 2);
    CHECK(i1 == 4);
    CHECK(t1 == 12);
    auto [i7, t7] = payoff(7, 2);
    CHECK(i7 == 256);
    CHECK(t7 == 768);
    CHECK_THROWS_AS(payoff(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(payoff(1, 0), std::invalid_argument);
}

TEST_CASE("score_hand on the rule-table anchors") {
    auto basic = score_hand(hand("1m 1m 1m 2m 2m 2m 3p 4p 5p 7s 8s 9s E E"), 2);
    CHECK(basic.multiplier == 1);
    CHECK(basic.individual_payoff == 4);
    CHECK(basic.total_payoff == 12);

    auto flush = score_hand(hand("1m 1m 1m 2m 3m 4m 4m 5m 6m 6m 7m 8m 9m 9m"), 2);
    CHECK(flush.multiplier == 5);  // base 1 + full flush 4
    CHECK(flush.total_payoff == 192);

    auto half = score_hand(hand("E E E GD GD GD 1m 2m 3m 4m 5m 6m 7m 7m"), 2);
    CHECK(half.multiplier == 5);  // base + wind + dragon + half flush
}

TEST_CASE("score_hand takes the best reading when triplet rules are ambiguous") {
    // 111222333m can read as three triplets or three runs; with 44m pair and
    // a 567m run the all-triplets bonus never applies but wind/dragon logic
    // still picks the max-delta reading.
    auto all_trip = score_hand(hand("E E E S S S WD WD WD 9p 9p 9p 1m 1m"), 2);
    // 2 winds + 1 dragon + all triplets + (1m/9p mix: no flush)
    CHECK(all_trip.multiplier == 1 + 2 + 1 + 2);
}

TEST_CASE("all honors hand scores the all-honors rule") {
    auto s = score_hand(hand("E E E S S S W W W N N N RD RD"), 2);
    // winds x4? three wind triplets (E,S,W) + N triplet + all triplets + all honors
    CHECK(s.multiplier == 1 + 4 + 2 + 3);
}

TEST_CASE("score_hand multiplier is invariant under suit relabeling") {
    Rng rng(33);
    auto permute = [](const HandCounts& h) {
        HandCounts out = h;
        for (int r = 0; r < 9; ++r) {
            out[r] = h[9 + r];       // Pin -> Man
            out[9 + r] = h[18 + r];  // Sou -> Pin
            out[18 + r] = h[r];      // Man -> Sou
        }
        return out;
    };
    for (int i = 0; i < 100; ++i) {
        HandCounts h = random_winning_hand(rng);
        CHECK(score_hand(h, 2).multiplier == score_hand(permute(h), 2).multiplier);
    }
}

TEST_CASE("score_hand rejects non-winning hands") {
    CHECK_THROWS_AS(score_hand(hand("1m 4m 7m 1p 4p 7p 1s 4s 7s E S W N RD"), 2),
                    std::invalid_argument);
}

TEST_CASE("score rules load from a key=value file") {
    std::string path = "test_rules.txt";
    {
        std::ofstream out(path);
        out << "# custom table\nfull_flush = 6\nbase=2\n";
    }
    ScoreRules rules = load_score_rules(path);
    CHECK(rules.full_flush == 6);
    CHECK(rules.base == 2);
    CHECK(rules.wind_triplet == 1);  // untouched default
    std::remove(path.c_str());
    CHECK_THROWS(load_score_rules("does_not_exist.txt"));
}

TEST_CASE("exact oracle anchors") {
    CHECK(exact_shangting_oracle(
              hand("1m 1m 1m 2m 2m 2m 3m 3m 3m 3m 4m 4m 4m 5m")) == 0);
    CHECK(exact_shangting_oracle(
              hand("1m 4m 7m 1p 4p 7p 1s 4s 7s E S W N RD")) == -14);
    CHECK(exact_shangting_oracle(
              hand("1m 1m 1m 2m 2m 2m 3p 4p 5p 7s 8s 9s E E")) == 0);
}

TEST_CASE("is_winning iff exact oracle reaches zero") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        HandCounts h = random_hand(rng);
        CHECK(is_winning(h) == (exact_shangting_oracle(h) == 0));
    }
    for (int i = 0; i < 200; ++i) {
        HandCounts h = random_winning_hand(rng);
        CHECK(is_winning(h));
        CHECK(exact_shangting_oracle(h) == 0);
    }
}
