#include "mahjong/hand_eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

namespace mahjong {

namespace {

void require_full_hand(const HandCounts& hand) {
    if (total(hand) != kHandSize)
        throw std::invalid_argument("expected a 14-tile hand, got " +
                                    std::to_string(total(hand)));
}

bool run_possible(const HandCounts& c, int k) {
    TileKind t{k};
    return t.is_suited() && t.rank() <= 7 && c[k + 1] > 0 && c[k + 2] > 0;
}

// Enumerate every split of `c` into triplets and runs. `sink` receives each
// complete meld list; returning true from it stops the search early.
bool enumerate_melds(HandCounts& c, int pos, std::vector<Meld>& acc,
                     const std::function<bool(const std::vector<Meld>&)>& sink) {
    while (pos < kNumKinds && c[pos] == 0) ++pos;
    if (pos == kNumKinds) return sink(acc);
    if (c[pos] >= 3) {
        c[pos] -= 3;
        acc.push_back({Meld::Type::Triplet, TileKind{pos}});
        bool stop = enumerate_melds(c, pos, acc, sink);
        acc.pop_back();
        c[pos] += 3;
        if (stop) return true;
    }
    if (run_possible(c, pos)) {
        --c[pos]; --c[pos + 1]; --c[pos + 2];
        acc.push_back({Meld::Type::Run, TileKind{pos}});
        bool stop = enumerate_melds(c, pos, acc, sink);
        acc.pop_back();
        ++c[pos]; ++c[pos + 1]; ++c[pos + 2];
        if (stop) return true;
    }
    return false;
}

// Quick reject: with the pair removed, each suit group and the honors must
// split into sets, so every group total must be divisible by 3 and honor
// kinds can only appear as full triplets.
bool group_totals_ok(const HandCounts& c) {
    int man = 0, pin = 0, sou = 0;
    for (int r = 0; r < 9; ++r) {
        man += c[r];
        pin += c[9 + r];
        sou += c[18 + r];
    }
    if (man % 3 || pin % 3 || sou % 3) return false;
    for (int k = 27; k < kNumKinds; ++k)
        if (c[k] % 3) return false;
    return true;
}

// Allocation-free existence check for the game loop's hot path.
bool can_meld_all(HandCounts& c, int pos) {
    while (pos < kNumKinds && c[pos] == 0) ++pos;
    if (pos == kNumKinds) return true;
    if (c[pos] >= 3) {
        c[pos] -= 3;
        bool ok = can_meld_all(c, pos);
        c[pos] += 3;
        if (ok) return true;
    }
    if (run_possible(c, pos)) {
        --c[pos]; --c[pos + 1]; --c[pos + 2];
        bool ok = can_meld_all(c, pos);
        ++c[pos]; ++c[pos + 1]; ++c[pos + 2];
        if (ok) return true;
    }
    return false;
}

bool sets_less(const std::vector<Meld>& a, const std::vector<Meld>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Maximum number of disjoint sets extractable from `c` starting at `pos`.
int max_sets(HandCounts& c, int pos) {
    while (pos < kNumKinds && c[pos] == 0) ++pos;
    if (pos == kNumKinds) return 0;
    // Leave one copy unused.
    --c[pos];
    int best = max_sets(c, pos);
    ++c[pos];
    if (c[pos] >= 3) {
        c[pos] -= 3;
        best = std::max(best, 1 + max_sets(c, pos));
        c[pos] += 3;
    }
    if (run_possible(c, pos)) {
        --c[pos]; --c[pos + 1]; --c[pos + 2];
        best = std::max(best, 1 + max_sets(c, pos));
        ++c[pos]; ++c[pos + 1]; ++c[pos + 2];
    }
    return best;
}

}  // namespace

bool is_winning(const HandCounts& hand) {
    require_full_hand(hand);
    HandCounts c = hand;
    for (int p = 0; p < kNumKinds; ++p) {
        if (c[p] < 2) continue;
        c[p] -= 2;
        bool found = group_totals_ok(c) && can_meld_all(c, 0);
        c[p] += 2;
        if (found) return true;
    }
    return false;
}

std::optional<Decomposition> decompose(const HandCounts& hand) {
    require_full_hand(hand);
    HandCounts c = hand;
    std::vector<Meld> acc;
    for (int p = 0; p < kNumKinds; ++p) {
        if (c[p] < 2) continue;
        c[p] -= 2;
        std::optional<std::vector<Meld>> best;
        if (group_totals_ok(c)) {
            enumerate_melds(c, 0, acc, [&](const std::vector<Meld>& melds) {
                std::vector<Meld> sorted = melds;
                std::sort(sorted.begin(), sorted.end());
                if (!best || sets_less(sorted, *best)) best = std::move(sorted);
                return false;
            });
        }
        c[p] += 2;
        if (best) return Decomposition{std::move(*best), TileKind{p}};
    }
    return std::nullopt;
}

std::vector<Decomposition> all_decompositions(const HandCounts& hand) {
    require_full_hand(hand);
    HandCounts c = hand;
    std::vector<Meld> acc;
    std::vector<Decomposition> out;
    for (int p = 0; p < kNumKinds; ++p) {
        if (c[p] < 2) continue;
        c[p] -= 2;
        std::vector<std::vector<Meld>> seen;
        if (group_totals_ok(c)) {
            enumerate_melds(c, 0, acc, [&](const std::vector<Meld>& melds) {
                std::vector<Meld> sorted = melds;
                std::sort(sorted.begin(), sorted.end());
                if (std::find(seen.begin(), seen.end(), sorted) == seen.end())
                    seen.push_back(std::move(sorted));
                return false;
            });
        }
        c[p] += 2;
        for (auto& sets : seen) out.push_back({std::move(sets), TileKind{p}});
    }
    return out;
}

ScoreRules load_score_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open score rules file: " + path);
    ScoreRules rules;
    std::map<std::string, int ScoreRules::*> keys = {
        {"base", &ScoreRules::base},
        {"dragon_triplet", &ScoreRules::dragon_triplet},
        {"wind_triplet", &ScoreRules::wind_triplet},
        {"all_triplets", &ScoreRules::all_triplets},
        {"half_flush", &ScoreRules::half_flush},
        {"full_flush", &ScoreRules::full_flush},
        {"all_honors", &ScoreRules::all_honors},
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = strip(line.substr(0, eq));
        auto it = keys.find(key);
        if (it == keys.end())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": unknown rule '" + key + "'");
        rules.*(it->second) = std::stoi(strip(line.substr(eq + 1)));
    }
    return rules;
}

std::pair<double, double> payoff(int multiplier, double base_payoff) {
    if (multiplier < 1) throw std::invalid_argument("multiplier must be >= 1");
    if (base_payoff <= 0) throw std::invalid_argument("base payoff must be > 0");
    double individual = std::ldexp(base_payoff, multiplier);
    return {individual, 3 * individual};
}

ScoreBreakdown score_hand(const HandCounts& hand, double base_payoff,
                          const ScoreRules& rules) {
    auto decomps = all_decompositions(hand);
    if (decomps.empty())
        throw std::invalid_argument("score_hand called on a non-winning hand");

    // Flush-type rules depend only on the tile multiset.
    int suits_used = 0;
    bool honors = false;
    for (int k = 0; k < kNumKinds; ++k) {
        if (hand[k] == 0) continue;
        if (TileKind{k}.is_honor()) honors = true;
    }
    for (int s = 0; s < 3; ++s) {
        int n = 0;
        for (int r = 0; r < 9; ++r) n += hand[9 * s + r];
        if (n > 0) ++suits_used;
    }

    // Triplet-dependent rules are scored on the best reading.
    int best_delta = -1;
    int best_winds = 0, best_dragons = 0;
    bool best_all_triplets = false;
    for (const auto& d : decomps) {
        int winds = 0, dragons = 0, triplets = 0;
        for (const auto& m : d.sets) {
            if (m.type != Meld::Type::Triplet) continue;
            ++triplets;
            if (m.tile.suit() == Suit::Wind) ++winds;
            if (m.tile.suit() == Suit::Dragon) ++dragons;
        }
        bool all_trip = triplets == 4;
        int delta = winds * rules.wind_triplet + dragons * rules.dragon_triplet +
                    (all_trip ? rules.all_triplets : 0);
        if (delta > best_delta) {
            best_delta = delta;
            best_winds = winds;
            best_dragons = dragons;
            best_all_triplets = all_trip;
        }
    }

    ScoreBreakdown out;
    out.multiplier = rules.base;
    if (best_winds)
        out.items.emplace_back("wind triplets", best_winds * rules.wind_triplet);
    if (best_dragons)
        out.items.emplace_back("dragon triplets", best_dragons * rules.dragon_triplet);
    if (best_all_triplets) out.items.emplace_back("all triplets", rules.all_triplets);
    if (suits_used == 0)
        out.items.emplace_back("all honors", rules.all_honors);
    else if (suits_used == 1 && !honors)
        out.items.emplace_back("full flush", rules.full_flush);
    else if (suits_used == 1 && honors)
        out.items.emplace_back("half flush", rules.half_flush);
    for (const auto& [name, value] : out.items) out.multiplier += value;

    auto [individual, tot] = payoff(out.multiplier, base_payoff);
    out.individual_payoff = individual;
    out.total_payoff = tot;
    return out;
}

int exact_shangting_oracle(const HandCounts& hand) {
    require_full_hand(hand);
    HandCounts c = hand;
    int best = 3 * max_sets(c, 0) - kHandSize;
    for (int p = 0; p < kNumKinds; ++p) {
        if (c[p] < 2) continue;
        c[p] -= 2;
        best = std::max(best, 3 * max_sets(c, 0) + 2 - kHandSize);
        c[p] += 2;
    }
    return best;
}

}  // namespace mahjong
