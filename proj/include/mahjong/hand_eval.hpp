#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahjong/tiles.hpp"

namespace mahjong {

// One meld in a winning-hand decomposition.
struct Meld {
    enum class Type { Triplet, Run } type;
    // Triplet: the kind. Run: the lowest kind of the three (start rank <= 7).
    TileKind tile;

    friend bool operator==(const Meld&, const Meld&) = default;
    friend auto operator<=>(const Meld& a, const Meld& b) {
        if (auto c = a.tile <=> b.tile; c != 0) return c;
        return int(a.type) <=> int(b.type);
    }
};

struct Decomposition {
    std::vector<Meld> sets;  // exactly 4
    TileKind pair;
};

// Scoring-rule table for the winning-hand multiplier m. The defaults are the
// compiled-in rule set; load_score_rules reads a key=value file overriding
// individual entries.
struct ScoreRules {
    int base = 1;
    int dragon_triplet = 1;  // per dragon triplet
    int wind_triplet = 1;    // per wind triplet
    int all_triplets = 2;    // all four sets are triplets
    int half_flush = 2;      // one suit plus honors
    int full_flush = 4;      // one suit, no honors
    int all_honors = 3;      // no suited tiles at all
};

ScoreRules load_score_rules(const std::string& path);

struct ScoreBreakdown {
    int multiplier = 1;
    std::vector<std::pair<std::string, int>> items;
    double individual_payoff = 0;  // 2^m * b
    double total_payoff = 0;       // 3 * 2^m * b
};

// True iff the 14 tiles split into 4 sets (triplets/runs) + 1 pair.
bool is_winning(const HandCounts& hand);

// Canonical decomposition (lowest pair kind, then lexicographically smallest
// set list), or nullopt for a non-winning hand.
std::optional<Decomposition> decompose(const HandCounts& hand);

// Every distinct decomposition of a winning hand.
std::vector<Decomposition> all_decompositions(const HandCounts& hand);

// (2^m * b, 3 * 2^m * b)
std::pair<double, double> payoff(int multiplier, double base_payoff);

// Multiplier of a winning hand, maximized over decompositions where rules
// depend on the reading. Throws on a non-winning hand.
ScoreBreakdown score_hand(const HandCounts& hand, double base_payoff,
                          const ScoreRules& rules = ScoreRules{});

// Exhaustive-search counterpart of the greedy ShangTing score: the maximum of
// 3*(disjoint sets) + 2*[a pair remains] - 14 over every extraction.
int exact_shangting_oracle(const HandCounts& hand);

}  // namespace mahjong
