#include "mahjong/tiles.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mahjong {

namespace {
constexpr const char* kWindNames[] = {"E", "S", "W", "N"};
constexpr const char* kDragonNames[] = {"RD", "GD", "WD"};
}  // namespace

std::string render_tile(TileKind t) {
    switch (t.suit()) {
        case Suit::Man: return std::to_string(t.rank()) + "m";
        case Suit::Pin: return std::to_string(t.rank()) + "p";
        case Suit::Sou: return std::to_string(t.rank()) + "s";
        case Suit::Wind: return kWindNames[t.rank() - 1];
        default: return kDragonNames[t.rank() - 1];
    }
}

TileKind parse_tile(std::string_view token) {
    if (token.size() == 1) {
        for (int i = 0; i < 4; ++i)
            if (token == kWindNames[i]) return make_tile(Suit::Wind, i + 1);
    } else if (token.size() == 2) {
        for (int i = 0; i < 3; ++i)
            if (token == kDragonNames[i]) return make_tile(Suit::Dragon, i + 1);
        char r = token[0], s = token[1];
        if (r >= '1' && r <= '9') {
            int rank = r - '0';
            if (s == 'm') return make_tile(Suit::Man, rank);
            if (s == 'p') return make_tile(Suit::Pin, rank);
            if (s == 's') return make_tile(Suit::Sou, rank);
        }
    }
    throw std::invalid_argument("bad tile token: '" + std::string(token) + "'");
}

int total(const HandCounts& h) {
    return std::accumulate(h.begin(), h.end(), 0);
}

std::string render_hand(const HandCounts& h) {
    std::string out;
    for (int k = 0; k < kNumKinds; ++k) {
        for (int c = 0; c < h[k]; ++c) {
            if (!out.empty()) out += ' ';
            out += render_tile(TileKind{k});
        }
    }
    return out;
}

HandCounts parse_hand(std::string_view text) {
    HandCounts h{};
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        TileKind t = parse_tile(token);
        if (++h[t.index] > kCopiesPerKind)
            throw std::invalid_argument("more than 4 copies of " + token);
    }
    return h;
}

std::vector<TileKind> to_tiles(const HandCounts& h) {
    std::vector<TileKind> tiles;
    for (int k = 0; k < kNumKinds; ++k)
        for (int c = 0; c < h[k]; ++c) tiles.push_back(TileKind{k});
    return tiles;
}

}  // namespace mahjong
