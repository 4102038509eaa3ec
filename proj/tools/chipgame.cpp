// Command-line front end for the chip game toolkit: exact solving and
// paintability search, closure export and independent verification, the
// brick-strategy simulator, hyperedge bounds, the symmetric game, the
// painting-game oracle sweep, and an interactive play mode.
//
// Exit codes: 0 success/verified, 1 usage error, 2 verification or strategy
// failure, 3 inconclusive (budget exhausted).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chipgame/chipgame.hpp"

using json = nlohmann::ordered_json;
using namespace chipgame;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;
constexpr int kInconclusive = 3;

void emit_summary(const json& summary, const std::string& path) {
    const std::string line = summary.dump();
    std::cout << line << "\n";
    if (!path.empty()) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write summary file: " + path);
        out << line << "\n";
    }
}

/// Renders a size profile the way the tables do: K_{2*3,3*3}.
std::string profile_name(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end());
    std::string out = "K_{";
    for (std::size_t i = 0; i < sizes.size();) {
        std::size_t j = i;
        while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
        if (i) out += ',';
        out += std::to_string(sizes[i]) + "*" + std::to_string(j - i);
        i = j;
    }
    out += '}';
    return out;
}

struct KnownBounds {
    int lower;
    int upper;
};

/// Previously published bounds, keyed by the parts profile. Used for display
/// and as default search windows, never in the computation itself.
std::optional<KnownBounds> known_bounds(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end());
    const int m = static_cast<int>(sizes.size());
    int ones = 0, twos = 0, threes = 0;
    for (int n : sizes) {
        if (n == 1) ++ones;
        if (n == 2) ++twos;
        if (n == 3) ++threes;
    }
    if (ones == m) return KnownBounds{m, m};
    if (twos == m) return KnownBounds{m, m};
    if (threes == m) return KnownBounds{(4 * m - 1 + 2) / 3, (3 * m) / 2};
    if (twos >= 2 && threes == 1 && twos + threes == m) return KnownBounds{m + 1, m + 1};
    static const std::map<std::vector<int>, KnownBounds> mixed = {
        {{2, 2, 2, 3, 3, 3}, {7, 9}},       // 2*3, 3*3
        {{2, 2, 3, 3, 3, 3}, {7, 9}},       // 2*2, 3*4
        {{2, 3, 3, 3, 3, 3}, {7, 9}},       // 2*1, 3*5
        {{2, 2, 2, 2, 3, 3, 3}, {8, 10}},   // 2*4, 3*3
        {{2, 2, 2, 3, 3, 3, 3}, {8, 10}},   // 2*3, 3*4
        {{2, 2, 3, 3, 3, 3, 3}, {8, 10}},   // 2*2, 3*5
    };
    if (auto it = mixed.find(sizes); it != mixed.end()) return it->second;
    return std::nullopt;
}

struct SolverFlags {
    SolveConfig cfg;
    std::string summary_path;

    void attach(CLI::App* cmd) {
        cmd->add_flag_callback("--no-prune-pusher", [this] { cfg.prune_pusher = false; },
                               "disable identical-column move pruning");
        cmd->add_flag_callback("--no-prune-remover", [this] { cfg.prune_remover = false; },
                               "disable dominated-response pruning");
        cmd->add_flag_callback("--no-domination", [this] { cfg.use_domination = false; },
                               "disable closure-store domination lookups");
        cmd->add_flag_callback("--compact-store", [this] { cfg.compact_store = true; },
                               "retain only minimal winning / maximal losing states");
        cmd->add_option("--max-nodes", cfg.max_nodes, "node budget (0 = unlimited)");
        cmd->add_option("--max-store", cfg.max_store_states,
                        "stored-state budget (0 = unlimited)");
        cmd->add_option("--max-seconds", cfg.max_seconds, "wall-clock budget (0 = unlimited)");
        cmd->add_option("--threads", cfg.threads, "worker threads (1 = deterministic)");
        cmd->add_option("--summary", summary_path, "also write the JSON summary line here");
    }
};

json stats_to_json(const SolveStats& stats) {
    // Wall time stays out of the summary: repeated runs must be byte-identical.
    return json{{"nodes", stats.nodes},
                {"memo_hits", stats.memo_hits},
                {"domination_hits", stats.domination_hits},
                {"pusher_moves_pruned", stats.pusher_moves_pruned},
                {"remover_moves_pruned", stats.remover_moves_pruned}};
}

std::string render_pusher_move(const PusherMove& move) {
    std::string out;
    for (std::size_t c = 0; c < move.by_column.size(); ++c) {
        for (const auto& [row, count] : move.by_column[c]) {
            if (!out.empty()) out += ' ';
            out += std::to_string(c + 1) + ":" + std::to_string(row);
            if (count > 1) out += "x" + std::to_string(count);
        }
    }
    return out.empty() ? "(nothing)" : out;
}

int run_solve(const std::vector<int>& sizes, int gamma, const SolverFlags& flags,
              const std::string& out_winning, const std::string& out_losing) {
    GameSpec spec(gamma, sizes);
    SolveResult result = evaluate(spec, flags.cfg);
    std::cout << profile_name(spec.sizes) << " threshold " << gamma << ": "
              << to_string(result.value) << "\n";
    std::cout << "nodes " << result.stats.nodes << ", memo hits " << result.stats.memo_hits
              << ", domination hits " << result.stats.domination_hits << ", pruned "
              << result.stats.pusher_moves_pruned << "+" << result.stats.remover_moves_pruned
              << " moves, " << result.stats.wall_seconds << "s\n";
    if (!out_winning.empty()) {
        write_closure_file(out_winning, result.closures.export_closure(ClosureKind::Winning));
        std::cout << "winning closure (" << result.closures.winning_count() << " states) -> "
                  << out_winning << "\n";
    }
    if (!out_losing.empty()) {
        write_closure_file(out_losing, result.closures.export_closure(ClosureKind::Losing));
        std::cout << "losing closure (" << result.closures.losing_count() << " states) -> "
                  << out_losing << "\n";
    }
    json summary{{"command", "solve"},
                 {"gamma", gamma},
                 {"sizes", spec.sizes},
                 {"value", to_string(result.value)},
                 {"winning_states", result.closures.winning_count()},
                 {"losing_states", result.closures.losing_count()},
                 {"stats", stats_to_json(result.stats)}};
    emit_summary(summary, flags.summary_path);
    return kOk;
}

int run_paint(const std::vector<int>& sizes, std::optional<int> lo_flag,
              std::optional<int> hi_flag, const SolverFlags& flags) {
    GameSpec probe(1, sizes);  // normalizes the size order
    auto [def_lo, def_hi] = default_gamma_bounds(probe.sizes);
    std::optional<KnownBounds> known = known_bounds(probe.sizes);
    Row lo = lo_flag ? *lo_flag : def_lo;
    Row hi = hi_flag ? *hi_flag : (known ? std::max<Row>(known->upper, lo) : def_hi);

    std::vector<std::pair<Row, GameValue>> evaluations;
    const int value = paintability(probe.sizes, lo, hi, flags.cfg, &evaluations);

    const std::string lower_text = known ? std::to_string(known->lower) : "-";
    const std::string upper_text = known ? std::to_string(known->upper) : "-";
    std::cout << profile_name(probe.sizes) << "  known lower " << lower_text << "  computed "
              << value << "  known upper " << upper_text << "\n";
    for (const auto& [g, v] : evaluations)
        std::cout << "  threshold " << g << ": " << to_string(v) << "\n";

    json evals = json::array();
    for (const auto& [g, v] : evaluations) evals.push_back({{"gamma", g}, {"value", to_string(v)}});
    json summary{{"command", "paint"},
                 {"sizes", probe.sizes},
                 {"gamma_lo", lo},
                 {"gamma_hi", hi},
                 {"known_lower", known ? json(known->lower) : json()},
                 {"known_upper", known ? json(known->upper) : json()},
                 {"value", value},
                 {"evaluations", evals}};
    emit_summary(summary, flags.summary_path);
    return kOk;
}

int run_verify(const std::string& path, bool scan_all, int threads,
               const std::string& summary_path) {
    ClosureFile file = read_closure_file(path);
    VerifyOptions options;
    options.scan_all = scan_all;
    options.threads = threads;
    VerifyReport report = verify(file, options);

    json failures = json::array();
    if (report.ok) {
        std::cout << "verified: " << path << " is a " << to_string(file.kind) << " closure ("
                  << file.states.size() << " states)\n";
    } else {
        for (const auto& f : report.failures) {
            std::cout << "bad state: " << state_line(file.spec, f.state) << "\n";
            std::cout << "  reason: " << f.reason << "\n";
            if (f.unanswered_move)
                std::cout << "  unanswered push: " << render_pusher_move(*f.unanswered_move)
                          << "\n";
            json entry{{"state", state_line(file.spec, f.state)}, {"reason", f.reason}};
            if (f.unanswered_move)
                entry["unanswered_push"] = render_pusher_move(*f.unanswered_move);
            failures.push_back(entry);
        }
    }
    json summary{{"command", "verify"},       {"file", path},
                 {"kind", to_string(file.kind)}, {"gamma", file.spec.threshold},
                 {"sizes", file.spec.sizes},  {"states", file.states.size()},
                 {"ok", report.ok},           {"failures", failures}};
    emit_summary(summary, summary_path);
    return report.ok ? kOk : kFailed;
}

int run_brick_sim(int m, int k, const std::string& remover, int trials, std::uint64_t seed,
                  int bricks, std::uint64_t max_positions, const std::string& summary_path) {
    json summary{{"command", "brick-sim"}, {"m", m},       {"k", k},
                 {"remover", remover},     {"trials", trials}, {"seed", seed}};
    if (remover == "exhaustive") {
        BrickExhaustiveResult r = brick_strategy_wins_all(m, k, max_positions);
        summary["positions"] = r.positions;
        summary["all_win"] = r.all_win;
        if (r.budget_hit) {
            std::cout << "inconclusive: position budget exhausted after " << r.positions
                      << " positions\n";
            emit_summary(summary, summary_path);
            return kInconclusive;
        }
        std::cout << (r.all_win ? "pusher wins against every remover line ("
                                : "STRATEGY FAILURE (")
                  << r.positions << " positions)\n";
        if (!r.all_win) std::cout << "  " << r.failure << "\n";
        emit_summary(summary, summary_path);
        return r.all_win ? kOk : kFailed;
    }

    BrickSimOptions options;
    options.bricks_per_column = bricks;
    int wins = 0;
    int total_rounds = 0;
    std::string first_failure;
    for (int t = 0; t < trials; ++t) {
        RemoverPolicy policy;
        if (remover == "random")
            policy = uniform_random_policy(seed + static_cast<std::uint64_t>(t));
        else if (remover == "greedy")
            policy = greedy_most_advanced_policy();
        else if (remover == "round-robin")
            policy = round_robin_policy();
        else
            throw CLI::ValidationError("--remover",
                                       "expected exhaustive, random, greedy or round-robin");
        BrickSimResult r = simulate_brick_game(m, k, policy, options);
        total_rounds += r.rounds;
        if (r.outcome == BrickOutcome::PusherWin) {
            ++wins;
        } else if (first_failure.empty()) {
            first_failure = r.failure;
        }
    }
    std::cout << wins << "/" << trials << " games won by the brick strategy\n";
    if (!first_failure.empty()) std::cout << "  first failure: " << first_failure << "\n";
    summary["wins"] = wins;
    summary["rounds_total"] = total_rounds;
    if (!first_failure.empty()) summary["failure"] = first_failure;
    emit_summary(summary, summary_path);
    return wins == trials ? kOk : kFailed;
}

int run_bounds(int k, int r, const std::string& summary_path) {
    PolBounds b = pol_bounds(k, r);
    std::ostringstream lower, upper;
    lower << b.lower;
    upper << b.upper;
    std::cout << "p_OL(" << k << ", " << r << ") >= " << lower.str() << " ("
              << b.lower.convert_to<double>() << ")\n";
    std::cout << "p_OL(" << k << ", " << r << ") <= " << upper.str() << " ("
              << b.upper.convert_to<double>() << ")\n";
    json summary{{"command", "bounds"},
                 {"k", k},
                 {"r", r},
                 {"lower", lower.str()},
                 {"upper", upper.str()}};
    emit_summary(summary, summary_path);
    return kOk;
}

int run_sym_solve(int k, int n, int r, std::uint64_t max_nodes, bool transcript,
                  const std::string& summary_path) {
    GameValue value = symmetric_evaluate(k, n, r, max_nodes);
    std::cout << "symmetric (" << k << ", " << n << "*" << r << ") chip game: "
              << to_string(value) << "\n";
    json summary{{"command", "sym-solve"},
                 {"k", k},
                 {"n", n},
                 {"r", r},
                 {"value", to_string(value)}};
    if (transcript) {
        // Run the matching hypergraph pancoloring game, both sides driven by
        // the exact strategies, one round per line.
        PancolorTranscript t =
            play_pancoloring_game(k, n, r, optimal_pusher_strategy(k, n, r, max_nodes),
                                  optimal_remover_strategy(k, n, r, max_nodes));
        std::cout << t.text();
        if (t.winner)
            std::cout << (*t.winner == PancolorWinner::Presenter
                              ? "Presenter wins: a full hyperedge is missing a color\n"
                              : "Colorer wins: the coloring is panchromatic\n");
        summary["rounds"] = t.rounds.size();
        summary["correspondence_ok"] = t.correspondence_ok;
        if (t.winner)
            summary["pancoloring_winner"] =
                *t.winner == PancolorWinner::Presenter ? "Presenter" : "Colorer";
    }
    emit_summary(summary, summary_path);
    return kOk;
}

// Non-increasing part profiles with total vertex count in [1, max_total].
std::vector<std::vector<int>> part_profiles(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int cap) -> void {
        if (!current.empty()) out.push_back(current);
        for (int next = std::min(cap, remaining); next >= 1; --next) {
            current.push_back(next);
            self(self, remaining - next, next);
            current.pop_back();
        }
    };
    recurse(recurse, max_total, max_total);
    return out;
}

int run_oracle_check(int max_total, int max_r, const SolverFlags& flags) {
    int checked = 0;
    int mismatches = 0;
    std::cout << "profile        r  painter  chip-game   match\n";
    for (const auto& profile : part_profiles(max_total)) {
        for (int r = 1; r <= max_r; ++r) {
            const bool painter = painter_wins(MultipartiteGraph(profile), r, max_total);
            const GameValue chip = evaluate(GameSpec(r, profile), flags.cfg).value;
            const bool match = painter == (chip == GameValue::RemoverWins);
            ++checked;
            if (!match) ++mismatches;
            std::cout << std::left << std::setw(14) << profile_name(profile) << " " << r
                      << "  " << (painter ? "painter" : "lister ") << "  "
                      << (chip == GameValue::RemoverWins ? "RemoverWins" : "PusherWins ")
                      << "  " << (match ? "ok" : "MISMATCH") << "\n";
        }
    }
    std::cout << checked << " instances checked, " << mismatches << " mismatches\n";
    json summary{{"command", "oracle-check"},
                 {"max_total", max_total},
                 {"max_r", max_r},
                 {"checked", checked},
                 {"mismatches", mismatches}};
    emit_summary(summary, flags.summary_path);
    return mismatches == 0 ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// Interactive play

void print_board(const GameState& state) {
    std::cout << "board: " << encode_board(state.board) << "\n";
    for (int c = 0; c < state.board.column_count(); ++c)
        std::cout << "  column " << (c + 1) << ": " << encode_column(state.board.columns[c])
                  << "\n";
}

std::optional<PusherMove> parse_push_tokens(const GameState& state, const std::string& line,
                                            std::string& error) {
    PusherMove move;
    move.by_column.assign(state.board.column_count(), {});
    std::istringstream in(line);
    std::string token;
    bool any = false;
    while (in >> token) {
        const std::size_t colon = token.find(':');
        if (colon == std::string::npos) {
            error = "expected column:row tokens like 1:0 or 1:0x2";
            return std::nullopt;
        }
        int count = 1;
        std::string row_part = token.substr(colon + 1);
        const std::size_t x = row_part.find('x');
        try {
            if (x != std::string::npos) {
                count = std::stoi(row_part.substr(x + 1));
                row_part = row_part.substr(0, x);
            }
            const int column = std::stoi(token.substr(0, colon));
            const int row = std::stoi(row_part);
            if (column < 1 || column > state.board.column_count()) {
                error = "column must be between 1 and " +
                        std::to_string(state.board.column_count());
                return std::nullopt;
            }
            bool merged = false;
            for (auto& [r, c] : move.by_column[column - 1])
                if (r == row) {
                    c += count;
                    merged = true;
                }
            if (!merged) move.by_column[column - 1].emplace_back(row, count);
            any = true;
        } catch (const std::exception&) {
            error = "could not parse token '" + token + "'";
            return std::nullopt;
        }
    }
    if (!any) {
        error = "a push must move at least one chip";
        return std::nullopt;
    }
    return move;
}

class PlayEngine {
public:
    PlayEngine(GameSpec spec, SolveConfig cfg)
        : spec_(std::move(spec)), cfg_(cfg), closures_(spec_) {
        cfg_.threads = 1;
        SolveResult solved = evaluate(spec_, cfg_);
        root_value_ = solved.value;
        closures_ = std::move(solved.closures);
    }

    GameValue root_value() const { return root_value_; }

    // The initial solve's closures answer most queries; anything they left
    // unresolved is solved on demand and cached.
    GameValue value(const GameState& state) {
        switch (classify_by_closure(state, closures_)) {
        case Classification::Winning:
            return GameValue::PusherWins;
        case Classification::Losing:
            return GameValue::RemoverWins;
        case Classification::Unknown:
            break;
        }
        const std::string key = state_key(state);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        GameValue v = evaluate_state(state, cfg_).value;
        cache_.emplace(key, v);
        return v;
    }

    PusherMove choose_push(const GameState& state) {
        std::vector<PusherMove> moves = prune_pusher_moves(state, legal_pusher_moves(state));
        for (const auto& move : moves) {
            bool all_winning = true;
            for (const auto& [rmove, child] : remover_children(apply_pusher(state, move)))
                all_winning = all_winning && value(child) == GameValue::PusherWins;
            if (all_winning) return move;
        }
        return moves.front();  // losing position: any move does
    }

    RemoverMove choose_removal(const GameState& rstate) {
        auto children = remover_children(rstate);
        for (const auto& [rmove, child] : children)
            if (value(child) == GameValue::RemoverWins) return rmove;
        return children.front().first;
    }

private:
    GameSpec spec_;
    SolveConfig cfg_;
    GameValue root_value_ = GameValue::RemoverWins;
    ClosureStore closures_;
    std::unordered_map<std::string, GameValue> cache_;
};

int run_play(const std::vector<int>& sizes, int gamma, const std::string& side,
             const SolverFlags& flags) {
    GameSpec spec(gamma, sizes);
    const bool human_pushes = side == "pusher";
    SolveConfig cfg = flags.cfg;
    PlayEngine engine(spec, cfg);

    GameState state = initial_state(spec);
    std::cout << profile_name(spec.sizes) << " threshold " << gamma << "; with best play: "
              << to_string(engine.root_value()) << "\n";
    std::cout << "you are the " << (human_pushes ? "Pusher" : "Remover") << "\n";

    int rounds = 0;
    while (terminal(state) == Outcome::Ongoing) {
        print_board(state);
        GameState rstate;
        if (human_pushes) {
            while (true) {
                std::cout << "your push (column:row tokens, e.g. 1:0x2 2:1) > " << std::flush;
                std::string line;
                if (!std::getline(std::cin, line)) {
                    std::cout << "input ended before the game finished\n";
                    return kUsage;
                }
                if (line == "quit") return kOk;
                std::string error;
                auto move = parse_push_tokens(state, line, error);
                if (!move) {
                    std::cout << "illegal: " << error << "\n";
                    continue;
                }
                try {
                    rstate = apply_pusher(state, *move);
                    break;
                } catch (const std::exception& e) {
                    std::cout << "illegal: " << e.what() << "\n";
                }
            }
        } else {
            PusherMove move = engine.choose_push(state);
            std::cout << "engine pushes " << render_pusher_move(move) << "\n";
            rstate = apply_pusher(state, move);
        }

        if (human_pushes) {
            RemoverMove removal = engine.choose_removal(rstate);
            std::cout << "engine removes column " << (removal.column + 1) << "\n";
            state = apply_remover(rstate, removal);
        } else {
            while (true) {
                std::cout << "column to remove (1-" << spec.columns() << ") > " << std::flush;
                std::string line;
                if (!std::getline(std::cin, line)) {
                    std::cout << "input ended before the game finished\n";
                    return kUsage;
                }
                if (line == "quit") return kOk;
                try {
                    const int column = std::stoi(line);
                    if (column < 1 || column > spec.columns())
                        throw std::invalid_argument("column must be between 1 and " +
                                                    std::to_string(spec.columns()));
                    state = apply_remover(rstate, RemoverMove{column - 1});
                    break;
                } catch (const std::exception& e) {
                    std::cout << "illegal: " << e.what() << "\n";
                }
            }
        }
        ++rounds;
    }

    print_board(state);
    const bool pusher_won = terminal(state) == Outcome::PusherWin;
    std::cout << (pusher_won ? "Pusher" : "Remover") << " wins after " << rounds
              << " rounds\n";
    json summary{{"command", "play"},
                 {"gamma", gamma},
                 {"sizes", spec.sizes},
                 {"side", side},
                 {"rounds", rounds},
                 {"winner", pusher_won ? "Pusher" : "Remover"}};
    emit_summary(summary, flags.summary_path);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chip game solver, verifier and strategy toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "evaluate a chip game and export closures");
    std::vector<int> solve_sizes;
    int solve_gamma = 0;
    std::string out_winning, out_losing;
    SolverFlags solve_flags;
    solve_cmd->add_option("--sizes", solve_sizes, "chips per column, e.g. 3,3,3,3")
        ->delimiter(',')
        ->required();
    solve_cmd->add_option("--gamma", solve_gamma, "winning threshold row")->required();
    solve_cmd->add_option("--out-winning", out_winning, "path for the winning closure");
    solve_cmd->add_option("--out-losing", out_losing, "path for the losing closure");
    solve_flags.attach(solve_cmd);

    // paint
    auto* paint_cmd = app.add_subcommand("paint", "paintability search over thresholds");
    std::vector<int> paint_sizes;
    std::optional<int> paint_lo, paint_hi;
    SolverFlags paint_flags;
    paint_cmd->add_option("--sizes", paint_sizes, "part sizes of the graph")
        ->delimiter(',')
        ->required();
    paint_cmd->add_option("--gamma-min", paint_lo, "lowest threshold to try");
    paint_cmd->add_option("--gamma-max", paint_hi, "highest threshold to try");
    paint_flags.attach(paint_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a closure file independently");
    std::string verify_path, verify_summary;
    bool scan_all = false;
    int verify_threads = 1;
    verify_cmd->add_option("--file", verify_path, "closure file")->required();
    verify_cmd->add_flag("--scan-all", scan_all, "keep checking after the first bad state");
    verify_cmd->add_option("--threads", verify_threads, "worker threads");
    verify_cmd->add_option("--summary", verify_summary, "also write the JSON summary here");

    // brick-sim
    auto* brick_cmd = app.add_subcommand("brick-sim", "play the brick strategy");
    int brick_m = 2, brick_k = 2, brick_trials = 1, brick_bricks = 0;
    std::uint64_t brick_seed = 1, brick_positions = 5'000'000;
    std::string brick_remover = "exhaustive", brick_summary;
    brick_cmd->add_option("--m", brick_m, "columns")->required();
    brick_cmd->add_option("--k", brick_k, "threshold")->required();
    brick_cmd->add_option("--remover", brick_remover,
                          "exhaustive, random, greedy or round-robin");
    brick_cmd->add_option("--trials", brick_trials, "games to play (randomized removers)");
    brick_cmd->add_option("--seed", brick_seed, "base seed for random removers");
    brick_cmd->add_option("--bricks", brick_bricks,
                          "starting bricks per column (0 = the strategy's m(k+1))");
    brick_cmd->add_option("--max-positions", brick_positions,
                          "position budget for the exhaustive remover");
    brick_cmd->add_option("--summary", brick_summary, "also write the JSON summary here");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form hyperedge bounds");
    int bounds_k = 1, bounds_r = 2;
    std::string bounds_summary;
    bounds_cmd->add_option("--k", bounds_k, "uniformity")->required();
    bounds_cmd->add_option("--r", bounds_r, "colors")->required();
    bounds_cmd->add_option("--summary", bounds_summary, "also write the JSON summary here");

    // sym-solve
    auto* sym_cmd = app.add_subcommand("sym-solve", "solve the symmetric chip game");
    int sym_k = 1, sym_n = 1, sym_r = 2;
    std::uint64_t sym_nodes = 50'000'000;
    bool sym_transcript = false;
    std::string sym_summary;
    sym_cmd->add_option("--k", sym_k, "threshold")->required();
    sym_cmd->add_option("--n", sym_n, "labels per column")->required();
    sym_cmd->add_option("--r", sym_r, "columns")->required();
    sym_cmd->add_option("--max-nodes", sym_nodes, "node budget");
    sym_cmd->add_flag("--transcript", sym_transcript,
                      "play the pancoloring game with exact strategies, one round per line");
    sym_cmd->add_option("--summary", sym_summary, "also write the JSON summary here");

    // oracle-check
    auto* oracle_cmd =
        app.add_subcommand("oracle-check", "painting-game equivalence sweep");
    int oracle_total = 7, oracle_r = 4;
    SolverFlags oracle_flags;
    oracle_cmd->add_option("--max-total", oracle_total, "largest vertex count to sweep");
    oracle_cmd->add_option("--max-r", oracle_r, "largest threshold to sweep");
    oracle_flags.attach(oracle_cmd);

    // play
    auto* play_cmd = app.add_subcommand("play", "play against the engine");
    std::vector<int> play_sizes;
    int play_gamma = 0;
    std::string play_side = "pusher";
    SolverFlags play_flags;
    play_cmd->add_option("--sizes", play_sizes, "chips per column")->delimiter(',')->required();
    play_cmd->add_option("--gamma", play_gamma, "winning threshold row")->required();
    play_cmd->add_option("--side", play_side, "pusher or remover")
        ->check(CLI::IsMember({"pusher", "remover"}));
    play_flags.attach(play_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(solve_sizes, solve_gamma, solve_flags, out_winning, out_losing);
        if (paint_cmd->parsed()) return run_paint(paint_sizes, paint_lo, paint_hi, paint_flags);
        if (verify_cmd->parsed())
            return run_verify(verify_path, scan_all, verify_threads, verify_summary);
        if (brick_cmd->parsed())
            return run_brick_sim(brick_m, brick_k, brick_remover, brick_trials, brick_seed,
                                 brick_bricks, brick_positions, brick_summary);
        if (bounds_cmd->parsed()) return run_bounds(bounds_k, bounds_r, bounds_summary);
        if (sym_cmd->parsed())
            return run_sym_solve(sym_k, sym_n, sym_r, sym_nodes, sym_transcript, sym_summary);
        if (oracle_cmd->parsed()) return run_oracle_check(oracle_total, oracle_r, oracle_flags);
        if (play_cmd->parsed()) return run_play(play_sizes, play_gamma, play_side, play_flags);
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const SymmetricBudgetError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const PaintabilityRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
