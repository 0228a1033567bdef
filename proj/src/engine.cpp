#include "mahjong/engine.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mahjong {

GameLog play_game(std::uint64_t seed, const ShapingParams& params, bool record_q) {
    GameLog log;
    log.seed = seed;
    log.params = params;

    Rng rng(seed);
    GameState state = deal(rng);
    while (true) {
        if (is_winning(state.hand)) {
            log.outcome.won = true;
            log.outcome.discards = state.turn;
            log.outcome.score = score_hand(state.hand, params.base_payoff, params.rules);
            return log;
        }
        if (state.wall_total() == 0) {
            log.outcome.won = false;
            log.outcome.discards = state.turn;
            return log;
        }
        QReport report = q_values(state, params);
        TurnRecord turn;
        turn.hand = state.hand;
        if (record_q) turn.q_report = report;
        turn.discard = report.best;
        // Discard first so the drawn tile never collides with a full hand.
        GameState after_discard = state;
        --after_discard.hand[report.best.index];
        ++after_discard.discard[report.best.index];
        turn.drawn = sample_draw(after_discard, rng);
        state = apply(state, turn.discard, turn.drawn);
        log.turns.push_back(std::move(turn));
    }
}

std::string render_snapshot(const GameState& state, const QReport& report) {
    if (state.hand_total() != kHandSize)
        throw std::invalid_argument("snapshot needs a 14-tile hand");
    // Q-value per kind; every token column of a duplicated kind shows it.
    std::array<double, kNumKinds> q{};
    std::array<bool, kNumKinds> present{};
    for (const auto& e : report.actions) {
        q[e.discard.index] = e.q;
        present[e.discard.index] = true;
    }
    for (int k = 0; k < kNumKinds; ++k)
        if (state.hand[k] > 0 && !present[k])
            throw std::invalid_argument("q_report does not match state");

    std::string tiles_row, q_row, mark_row;
    for (TileKind t : to_tiles(state.hand)) {
        char qbuf[32];
        std::snprintf(qbuf, sizeof qbuf, "%.4f", q[t.index]);
        std::string token = render_tile(t);
        std::size_t width = std::max(token.size(), std::string(qbuf).size()) + 2;
        auto pad = [width](std::string s) {
            s.resize(width, ' ');
            return s;
        };
        tiles_row += pad(token);
        q_row += pad(qbuf);
        mark_row += pad(t == report.best ? "^ best" : "");
    }
    return tiles_row + "\n" + q_row + "\n" + mark_row + "\n";
}

namespace {

constexpr const char* kLogVersion = "mahjong-log-v1";

std::string render_q(const QReport& r) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < r.actions.size(); ++i) {
        if (i) out << ',';
        out << render_tile(r.actions[i].discard) << ':' << r.actions[i].q;
    }
    return out.str();
}

QReport parse_q(const std::string& text) {
    QReport r;
    std::istringstream in(text);
    std::string item;
    double best_q = 0;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("bad q entry: " + item);
        TileKind t = parse_tile(item.substr(0, colon));
        double q = std::stod(item.substr(colon + 1));
        if (r.actions.empty() || q > best_q) {
            best_q = q;
            r.best = t;
        }
        r.actions.push_back({t, q});
    }
    return r;
}

}  // namespace

std::string serialize(const GameLog& log) {
    std::ostringstream out;
    out.precision(17);
    out << kLogVersion << " seed=" << log.seed << " weight=" << log.params.weight
        << " base=" << log.params.base_payoff << "\n";
    for (const auto& t : log.turns) {
        out << "turn|hand=" << render_hand(t.hand) << "|discard="
            << render_tile(t.discard) << "|drawn=" << render_tile(t.drawn);
        if (t.q_report) out << "|q=" << render_q(*t.q_report);
        out << "\n";
    }
    if (log.outcome.won)
        out << "outcome|won|discards=" << log.outcome.discards
            << "|multiplier=" << log.outcome.score.multiplier
            << "|individual=" << log.outcome.score.individual_payoff
            << "|total=" << log.outcome.score.total_payoff << "\n";
    else
        out << "outcome|exhausted|discards=" << log.outcome.discards << "\n";
    return out.str();
}

GameLog parse_game_log(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty log");

    // Header fields are space-separated, turn/outcome fields pipe-separated.
    auto field = [](const std::string& s, const std::string& key, char delim) {
        auto pos = s.find(key + "=");
        if (pos == std::string::npos)
            throw std::runtime_error("missing field '" + key + "'");
        pos += key.size() + 1;
        auto end = s.find(delim, pos);
        return s.substr(pos, end == std::string::npos ? end : end - pos);
    };

    GameLog log;
    if (line.rfind(kLogVersion, 0) != 0)
        throw std::runtime_error("unsupported log version");
    log.seed = std::stoull(field(line, "seed", ' '));
    log.params.weight = std::stod(field(line, "weight", ' '));
    log.params.base_payoff = std::stod(field(line, "base", ' '));

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("turn|", 0) == 0) {
            TurnRecord t;
            t.hand = parse_hand(field(line, "hand", '|'));
            t.discard = parse_tile(field(line, "discard", '|'));
            t.drawn = parse_tile(field(line, "drawn", '|'));
            if (line.find("|q=") != std::string::npos)
                t.q_report = parse_q(field(line, "q", '|'));
            log.turns.push_back(std::move(t));
        } else if (line.rfind("outcome|", 0) == 0) {
            log.outcome.won = line.find("|won|") != std::string::npos;
            log.outcome.discards = std::stoi(field(line, "discards", '|'));
            if (log.outcome.won) {
                log.outcome.score.multiplier = std::stoi(field(line, "multiplier", '|'));
                log.outcome.score.individual_payoff = std::stod(field(line, "individual", '|'));
                log.outcome.score.total_payoff = std::stod(field(line, "total", '|'));
            }
        } else {
            throw std::runtime_error("bad log line: " + line);
        }
    }
    return log;
}

bool replays_identically(const GameLog& log) {
    GameLog fresh = play_game(log.seed, log.params, /*record_q=*/false);
    if (fresh.turns.size() != log.turns.size()) return false;
    for (std::size_t i = 0; i < fresh.turns.size(); ++i) {
        const auto& a = fresh.turns[i];
        const auto& b = log.turns[i];
        if (a.hand != b.hand || a.discard != b.discard || a.drawn != b.drawn)
            return false;
    }
    return fresh.outcome.won == log.outcome.won &&
           fresh.outcome.discards == log.outcome.discards &&
           (!fresh.outcome.won ||
            fresh.outcome.score.multiplier == log.outcome.score.multiplier);
}

}  // namespace mahjong
