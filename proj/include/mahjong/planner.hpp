#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mahjong/shaping.hpp"
#include "mahjong/state.hpp"

namespace mahjong {

using BigInt = boost::multiprecision::cpp_int;

struct QReport {
    struct Entry {
        TileKind discard;
        double q;
    };
    std::vector<Entry> actions;  // one per kind present in hand, index order
    TileKind best;               // maximal q, ties to the highest index
};

// Exact depth-1 expectimax: for every candidate discard a,
// Q(s,a) = sum_k T(k | s, a) * R_s(s'(a,k), s), with the transition taken
// over the post-discard wall. No sampling.
QReport q_values(const GameState& state, const ShapingParams& params);

TileKind best_action(const GameState& state, const ShapingParams& params);

// Leaf count of an exact forward search from a fresh deal: 14^n times the
// falling factorial 122 * 121 * ... * (122 - n + 1). Depth 1 gives 1708.
BigInt leaf_node_count(int depth);

// C(136, 14) * 2^122
BigInt state_space_size();

BigInt binomial(unsigned n, unsigned k);

}  // namespace mahjong
