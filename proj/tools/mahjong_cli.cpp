#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mahjong/arena.hpp"
#include "mahjong/engine.hpp"
#include "mahjong/stats.hpp"

namespace {

using namespace mahjong;

// temp + rename, so an interrupted run never leaves a truncated file
void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

ShapingParams make_params(double weight, double base_payoff,
                          const std::string& rules_file) {
    ShapingParams p;
    p.weight = weight;
    p.base_payoff = base_payoff;
    if (!rules_file.empty()) p.rules = load_score_rules(rules_file);
    return p;
}

void print_ttest(const stats::TTestResult& r) {
    std::cout << "t_statistic: " << r.t_statistic << "\n"
              << "critical: " << r.critical << "\n"
              << "mean: " << r.mean << "  std: " << r.std << "  n: " << r.n
              << "\n"
              << "reject_h0: " << (r.reject ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-player Mahjong solver and experiment harness"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    double weight = 0, w1 = 0, w2 = 0;
    double base_payoff = 2;
    double transfer_factor = 3;
    int games = 1000, matches = 100, jobs = 1;
    bool verbose = false;
    std::string out, rules_file, in_file;
    double mu0 = 0, critical = 0;
    std::vector<double> sweep_w1, sweep_w2;

    auto add_common = [&](CLI::App* cmd, bool needs_seed) {
        auto* s = cmd->add_option("--seed", seed, "Master seed (64-bit)");
        if (needs_seed) s->required();
        cmd->add_option("--base-payoff", base_payoff, "Base payoff b")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--rules", rules_file, "Score-rule table file (key=value)");
        cmd->add_option("--jobs", jobs, "Worker threads")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_flag("--verbose", verbose, "Verbose output");
    };

    auto* play = app.add_subcommand("play", "Play one game and write its log");
    add_common(play, true);
    play->add_option("--weight", weight, "Unscented bonus weight w")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    play->add_option("--out", out, "Log file path")->default_val("game.log");

    auto* batch = app.add_subcommand("batch", "Run a batch of games, export stats");
    add_common(batch, true);
    batch->add_option("--weight", weight, "Unscented bonus weight w")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    batch->add_option("--games", games, "Number of games")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    batch->add_option("--out", out, "Output prefix")->default_val("batch");

    auto* duel_cmd = app.add_subcommand("duel", "Run a tandem 1-v-1 match series");
    add_common(duel_cmd, true);
    duel_cmd->add_option("--w1", w1, "Player 1 weight")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    duel_cmd->add_option("--w2", w2, "Player 2 weight")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    duel_cmd->add_option("--matches", matches, "Number of matches")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    duel_cmd->add_option("--transfer-factor", transfer_factor, "Pot factor, 1 or 3")
        ->check(CLI::IsMember({1.0, 3.0}))
        ->capture_default_str();
    duel_cmd->add_option("--out", out, "Output prefix")->default_val("duel");

    auto* sweep_cmd = app.add_subcommand("sweep", "Weight-sweep duel matrix");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--w1", sweep_w1, "Player 1 weights")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--w2", sweep_w2, "Player 2 weights")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--matches", matches, "Matches per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--transfer-factor", transfer_factor, "Pot factor, 1 or 3")
        ->check(CLI::IsMember({1.0, 3.0}))
        ->capture_default_str();
    sweep_cmd->add_option("--out", out, "Output prefix")->default_val("sweep");

    auto* ttest = app.add_subcommand("ttest", "One-tailed t-test on a sample CSV");
    ttest->add_option("--in", in_file, "One-column CSV of samples")->required();
    ttest->add_option("--mu0", mu0, "Null-hypothesis mean")->capture_default_str();
    ttest->add_option("--critical", critical,
                      "Critical t value (default: 1% large-sample table)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*play) {
            ShapingParams params = make_params(weight, base_payoff, rules_file);
            GameLog log = play_game(seed, params, /*record_q=*/true);
            if (verbose) {
                for (const auto& t : log.turns) {
                    GameState view;
                    view.hand = t.hand;
                    std::cout << render_snapshot(view, *t.q_report) << "\n";
                }
            }
            write_atomic(out, serialize(log));
            if (log.outcome.won) {
                std::cout << "won after " << log.outcome.discards
                          << " discards, multiplier " << log.outcome.score.multiplier
                          << ", individual payoff " << log.outcome.score.individual_payoff
                          << ", total payoff " << log.outcome.score.total_payoff << "\n";
            } else {
                std::cout << "wall exhausted after " << log.outcome.discards
                          << " discards\n";
            }
            std::cout << "log written to " << out << "\n";
        } else if (*batch) {
            ShapingParams params = make_params(weight, base_payoff, rules_file);
            BatchStats st = run_batch(games, params, seed, jobs);
            write_atomic(out + "_report.txt", batch_report(st));
            write_atomic(out + "_discards.csv",
                         histogram_csv(st.discard_histogram, "discards"));
            write_atomic(out + "_scores.csv",
                         histogram_csv(st.score_histogram, "multiplier"));
            std::cout << batch_report(st);
        } else if (*duel_cmd) {
            ShapingParams p1 = make_params(w1, base_payoff, rules_file);
            ShapingParams p2 = make_params(w2, base_payoff, rules_file);
            MatchSeries series = run_match_series(matches, p1, p2, base_payoff,
                                                  seed, transfer_factor, jobs);
            write_atomic(out + "_matches.csv", series_csv(series));
            std::cout << "player2 total: " << series.total << "\n"
                      << "player1 total: " << -series.total << "\n";
            if (matches >= 2) {
                std::vector<double> transfers;
                for (const auto& m : series.per_match)
                    transfers.push_back(m.transfer);
                double crit = matches >= 100
                                  ? stats::critical_value(
                                        stats::Significance::OnePercent, matches)
                                  : 2.334;
                try {
                    print_ttest(stats::one_tailed_t(transfers, 0.0, crit));
                } catch (const std::invalid_argument& e) {
                    std::cout << "t-test skipped: " << e.what() << "\n";
                }
            }
        } else if (*sweep_cmd) {
            SweepResult result = sweep(sweep_w1, sweep_w2, matches, base_payoff,
                                       seed, transfer_factor, jobs);
            write_atomic(out + "_matrix.csv", sweep_csv(result));
            std::cout << sweep_csv(result);
        } else if (*ttest) {
            std::ifstream in(in_file);
            if (!in) throw std::runtime_error("cannot open " + in_file);
            std::vector<double> samples;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                try {
                    samples.push_back(std::stod(line));
                } catch (const std::exception&) {
                    // header or label line
                }
            }
            double crit = ttest->count("--critical")
                              ? critical
                              : stats::critical_value(
                                    stats::Significance::OnePercent,
                                    int(samples.size()));
            print_ttest(stats::one_tailed_t(samples, mu0, crit));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
