#include "mahjong/planner.hpp"

#include <stdexcept>

namespace mahjong {

QReport q_values(const GameState& state, const ShapingParams& params) {
    if (state.hand_total() != kHandSize)
        throw std::invalid_argument("q_values needs a 14-tile hand");
    const int wall = state.wall_total();
    if (wall == 0) throw std::runtime_error("wall exhausted");

    const double current = shaped_value(state.hand, params).combined;
    QReport report;
    GameState work = state;
    for (int a = 0; a < kNumKinds; ++a) {
        if (state.hand[a] == 0) continue;
        --work.hand[a];
        ++work.discard[a];
        double q = 0;
        for (int k = 0; k < kNumKinds; ++k) {
            if (work.wall[k] == 0) continue;
            const double p = double(work.wall[k]) / wall;
            ++work.hand[k];
            double reward;
            if (is_winning(work.hand))
                reward = score_hand(work.hand, params.base_payoff, params.rules)
                             .total_payoff;
            else
                reward = shaped_value(work.hand, params).combined - current;
            --work.hand[k];
            q += p * reward;
        }
        ++work.hand[a];
        --work.discard[a];
        report.actions.push_back({TileKind{a}, q});
    }
    // Ties go to the highest tile index: lone honors get discarded ahead of
    // equally valued suited tiles, which keeps the score distribution of
    // weight-0 play dominated by base-multiplier hands.
    report.best = report.actions.front().discard;
    double best_q = report.actions.front().q;
    for (const auto& e : report.actions) {
        if (e.q >= best_q) {
            best_q = e.q;
            report.best = e.discard;
        }
    }
    return report;
}

TileKind best_action(const GameState& state, const ShapingParams& params) {
    return q_values(state, params).best;
}

BigInt leaf_node_count(int depth) {
    if (depth < 1 || depth > kWallAfterDeal)
        throw std::invalid_argument("depth must be in [1, 122]");
    BigInt actions = 1, draws = 1;
    for (int i = 0; i < depth; ++i) {
        actions *= kHandSize;
        draws *= kWallAfterDeal - i;
    }
    return actions * draws;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt state_space_size() {
    return binomial(kTotalTiles, kHandSize) << kWallAfterDeal;
}

}  // namespace mahjong
