#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mahjong {

// 34 tile kinds: 0-8 Man, 9-17 Pin, 18-26 Sou, 27-30 winds (E,S,W,N),
// 31-33 dragons (Red, Green, White). Four physical copies of each kind.
inline constexpr int kNumKinds = 34;
inline constexpr int kCopiesPerKind = 4;
inline constexpr int kTotalTiles = kNumKinds * kCopiesPerKind;  // 136
inline constexpr int kHandSize = 14;
inline constexpr int kWallAfterDeal = kTotalTiles - kHandSize;  // 122

enum class Suit { Man, Pin, Sou, Wind, Dragon };

struct TileKind {
    int index = 0;  // 0..33

    constexpr Suit suit() const {
        if (index < 9) return Suit::Man;
        if (index < 18) return Suit::Pin;
        if (index < 27) return Suit::Sou;
        if (index < 31) return Suit::Wind;
        return Suit::Dragon;
    }
    // 1..9 for suits, 1..4 for winds (E,S,W,N), 1..3 for dragons (R,G,W)
    constexpr int rank() const {
        if (index < 27) return index % 9 + 1;
        if (index < 31) return index - 27 + 1;
        return index - 31 + 1;
    }
    constexpr bool is_suited() const { return index < 27; }
    constexpr bool is_honor() const { return index >= 27; }

    friend constexpr bool operator==(TileKind a, TileKind b) { return a.index == b.index; }
    friend constexpr auto operator<=>(TileKind a, TileKind b) { return a.index <=> b.index; }
};

constexpr TileKind make_tile(Suit suit, int rank) {
    switch (suit) {
        case Suit::Man: return TileKind{rank - 1};
        case Suit::Pin: return TileKind{9 + rank - 1};
        case Suit::Sou: return TileKind{18 + rank - 1};
        case Suit::Wind: return TileKind{27 + rank - 1};
        default: return TileKind{31 + rank - 1};
    }
}

// Notation: "1m".."9m", "1p".."9p", "1s".."9s", "E","S","W","N", "RD","GD","WD".
std::string render_tile(TileKind t);
TileKind parse_tile(std::string_view token);  // throws std::invalid_argument

// Multiset of tiles as per-kind counts.
using HandCounts = std::array<int, kNumKinds>;

int total(const HandCounts& h);

// Space-separated sorted tokens, e.g. "1m 1m 2p E E".
std::string render_hand(const HandCounts& h);
HandCounts parse_hand(std::string_view text);

// Expand counts to a sorted list of kinds (duplicates repeated).
std::vector<TileKind> to_tiles(const HandCounts& h);

}  // namespace mahjong
