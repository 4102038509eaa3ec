#pragma once

// The brick strategy for the Pusher in the m-column chip game. This module
// keeps its own row orientation: chips start at row k and a push moves a
// brick from row r to row r-1; row 0 is the target. Conversions to the
// chip-game orientation (start 0, target k) are provided at the boundary.
//
// A brick at row r is f(r) chips of one column sitting in that row, with
//   f(0) = 1,   g(r) = ceil(f(r) / (m-1)),   f(r) = f(r-1) + g(r-1),
// and a fraction brick at row r is g(r) chips. Pushing a brick from row r
// yields one full brick plus one fraction at row r-1; m-1 fractions meeting
// in a cell merge back into a full brick, discarding any surplus chips.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chipgame/bounds.hpp"
#include "chipgame/core.hpp"

namespace chipgame {

struct BrickConfig {
    int m = 0;  // columns
    int k = 0;  // threshold; start row in this module's orientation
    std::vector<long long> f;  // brick sizes, index 0..k
    std::vector<long long> g;  // fraction sizes, index 0..k
};

/// Builds the f/g tables and checks them against the exact growth cap
/// f(k) < m (m/(m-1))^k. The cap cannot fail for a correct recurrence; the
/// check guards implementation bugs.
inline BrickConfig brick_tables(int m, int k) {
    if (m < 2) throw std::invalid_argument("brick_tables: need m >= 2");
    if (k < 0) throw std::invalid_argument("brick_tables: need k >= 0");
    BrickConfig cfg;
    cfg.m = m;
    cfg.k = k;
    cfg.f.resize(k + 1);
    cfg.g.resize(k + 1);
    cfg.f[0] = 1;
    for (int r = 0; r <= k; ++r) {
        cfg.g[r] = (cfg.f[r] + m - 2) / (m - 1);
        if (r < k) cfg.f[r + 1] = cfg.f[r] + cfg.g[r];
    }
    if (Rational(cfg.f[k]) >= brick_growth_cap(m, k))
        throw std::logic_error("brick_tables: f(k) breaks its growth cap");
    return cfg;
}

struct BrickCell {
    int full = 0;
    int fractions = 0;
};

struct BrickBoard {
    int m = 0;
    int k = 0;
    std::vector<std::vector<BrickCell>> cells;  // [column][row 0..k]
    long long spilled = 0;  // chips discarded by fraction merges

    /// Most advanced row holding a full brick (smallest index), or -1.
    int lowest_full_row(int column) const {
        for (int r = 0; r <= k; ++r)
            if (cells[column][r].full > 0) return r;
        return -1;
    }

    /// Brick mass of a cell in units of 1/(m-1): a full brick is m-1 units.
    long long cell_units(int column, int row) const {
        const BrickCell& c = cells[column][row];
        return static_cast<long long>(c.full) * (m - 1) + c.fractions;
    }

    long long total_units() const {
        long long t = 0;
        for (int c = 0; c < m; ++c)
            for (int r = 0; r <= k; ++r) t += cell_units(c, r);
        return t;
    }

    bool chips_at_target() const {
        for (int c = 0; c < m; ++c)
            if (cells[c][0].full > 0 || cells[c][0].fractions > 0) return true;
        return false;
    }

    std::string key() const {
        std::string out;
        for (int c = 0; c < m; ++c) {
            for (int r = 0; r <= k; ++r) {
                out += std::to_string(cells[c][r].full);
                out += ':';
                out += std::to_string(cells[c][r].fractions);
                out += ',';
            }
            out += '|';
        }
        return out;
    }
};

/// Starting board: `bricks_per_column` full bricks in row k of every column
/// (default m(k+1), the count the strategy is built for).
inline BrickBoard initial_brick_board(const BrickConfig& cfg, int bricks_per_column = 0) {
    if (bricks_per_column <= 0) bricks_per_column = cfg.m * (cfg.k + 1);
    BrickBoard board;
    board.m = cfg.m;
    board.k = cfg.k;
    board.cells.assign(cfg.m, std::vector<BrickCell>(cfg.k + 1));
    for (int c = 0; c < cfg.m; ++c) board.cells[c][cfg.k].full = bricks_per_column;
    return board;
}

class BrickStrategyInapplicable : public std::runtime_error {
public:
    BrickStrategyInapplicable(BrickBoard board_, int column_)
        : std::runtime_error("no full brick to push in column " + std::to_string(column_)),
          board(std::move(board_)),
          column(column_) {}
    BrickBoard board;
    int column;
};

struct BrickMove {
    std::vector<int> source_rows;  // per column, the row pushed from
};

/// The strategy's move: in every column, push all chips of the most advanced
/// full brick.
inline BrickMove brick_pusher_move(const BrickBoard& board, const BrickConfig& cfg) {
    BrickMove move;
    move.source_rows.resize(cfg.m);
    for (int c = 0; c < cfg.m; ++c) {
        int r = board.lowest_full_row(c);
        if (r < 0) throw BrickStrategyInapplicable(board, c);
        move.source_rows[c] = r;
    }
    return move;
}

inline void apply_brick_push(BrickBoard& board, const BrickMove& move) {
    for (int c = 0; c < board.m; ++c) {
        const int r = move.source_rows[c];
        board.cells[c][r].full -= 1;
        board.cells[c][r - 1].full += 1;
        board.cells[c][r - 1].fractions += 1;
    }
}

inline void apply_brick_removal(BrickBoard& board, const BrickMove& move, int column) {
    const int r = move.source_rows[column] - 1;
    board.cells[column][r].full -= 1;
    board.cells[column][r].fractions -= 1;
}

inline void merge_fractions(BrickBoard& board, const BrickConfig& cfg) {
    for (int c = 0; c < board.m; ++c) {
        for (int r = 0; r <= board.k; ++r) {
            BrickCell& cell = board.cells[c][r];
            while (cell.fractions >= cfg.m - 1) {
                cell.fractions -= cfg.m - 1;
                cell.full += 1;
                board.spilled += static_cast<long long>(cfg.m - 1) * cfg.g[r] - cfg.f[r];
            }
        }
    }
}

/// Brick position shape maintained by the strategy: in every column the most
/// advanced row with a full brick carries at most 2 bricks (unless it is the
/// start row), and every row strictly between it and the start row carries at
/// most 1 brick, counting a fraction as 1/(m-1).
inline std::optional<std::string> brick_shape_violation(const BrickBoard& board) {
    const int unit = board.m - 1;
    for (int c = 0; c < board.m; ++c) {
        const int rc = board.lowest_full_row(c);
        if (rc < 0 || rc == board.k) continue;
        if (board.cell_units(c, rc) > 2 * unit)
            return "column " + std::to_string(c) + " row " + std::to_string(rc) +
                   " holds more than 2 bricks";
        for (int r = rc + 1; r < board.k; ++r)
            if (board.cell_units(c, r) > unit)
                return "column " + std::to_string(c) + " row " + std::to_string(r) +
                       " holds more than 1 brick";
    }
    return std::nullopt;
}

enum class BrickOutcome { PusherWin, StrategyFailure };

struct BrickSimResult {
    BrickOutcome outcome = BrickOutcome::PusherWin;
    int rounds = 0;
    long long spilled = 0;
    std::string failure;  // set when outcome == StrategyFailure
};

/// Remover policy: sees the board (after the push), the move, and the round
/// number, and returns the column to remove.
using RemoverPolicy = std::function<int(const BrickBoard&, const BrickMove&, int round)>;

inline RemoverPolicy uniform_random_policy(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const BrickBoard& board, const BrickMove&, int) {
        return static_cast<int>((*rng)() % static_cast<std::uint64_t>(board.m));
    };
}

/// Removes the column whose pushed chips are most advanced.
inline RemoverPolicy greedy_most_advanced_policy() {
    return [](const BrickBoard&, const BrickMove& move, int) {
        int best = 0;
        for (int c = 1; c < static_cast<int>(move.source_rows.size()); ++c)
            if (move.source_rows[c] < move.source_rows[best]) best = c;
        return best;
    };
}

inline RemoverPolicy round_robin_policy() {
    return [](const BrickBoard& board, const BrickMove&, int round) { return round % board.m; };
}

struct BrickSimOptions {
    int bricks_per_column = 0;  // 0 = the strategy's m(k+1)
    bool check_invariants = true;
};

/// Plays the brick strategy against a Remover policy to termination,
/// asserting the position-shape invariant and the non-decrease of the total
/// brick mass after every round.
inline BrickSimResult simulate_brick_game(int m, int k, const RemoverPolicy& remover,
                                          const BrickSimOptions& options = {}) {
    const BrickConfig cfg = brick_tables(m, k);
    BrickBoard board = initial_brick_board(cfg, options.bricks_per_column);
    BrickSimResult result;

    if (board.chips_at_target()) return result;  // k = 0: target row occupied at start

    // Each round moves at least one chip one row down, so total chips * k
    // bounds the game length.
    const long long round_cap =
        static_cast<long long>(m) * (options.bricks_per_column > 0 ? options.bricks_per_column
                                                                   : m * (k + 1)) *
            cfg.f[k] * k +
        1;
    long long prev_units = board.total_units();
    for (long long round = 0;; ++round) {
        if (round > round_cap) {
            result.outcome = BrickOutcome::StrategyFailure;
            result.failure = "game did not terminate within its round cap";
            return result;
        }
        BrickMove move;
        try {
            move = brick_pusher_move(board, cfg);
        } catch (const BrickStrategyInapplicable& e) {
            result.outcome = BrickOutcome::StrategyFailure;
            result.failure = e.what();
            return result;
        }
        apply_brick_push(board, move);
        int column = remover(board, move, static_cast<int>(round));
        if (column < 0 || column >= m) {
            result.outcome = BrickOutcome::StrategyFailure;
            result.failure = "remover policy returned an invalid column";
            return result;
        }
        apply_brick_removal(board, move, column);
        merge_fractions(board, cfg);
        ++result.rounds;

        if (options.check_invariants) {
            if (auto violation = brick_shape_violation(board)) {
                result.outcome = BrickOutcome::StrategyFailure;
                result.failure = "shape invariant violated after round " +
                                 std::to_string(result.rounds) + ": " + *violation;
                return result;
            }
            const long long units = board.total_units();
            if (units < prev_units) {
                result.outcome = BrickOutcome::StrategyFailure;
                result.failure = "brick count decreased after round " +
                                 std::to_string(result.rounds);
                return result;
            }
            prev_units = units;
        }
        if (board.chips_at_target()) {
            result.spilled = board.spilled;
            return result;
        }
    }
}

struct BrickExhaustiveResult {
    bool all_win = true;
    bool budget_hit = false;
    std::uint64_t positions = 0;
    std::string failure;
};

/// Walks every Remover reply sequence (with transposition detection) and
/// requires the strategy to win on all of them, checking the same invariants
/// as the single-game simulation.
inline BrickExhaustiveResult brick_strategy_wins_all(int m, int k,
                                                     std::uint64_t max_positions = 5'000'000) {
    const BrickConfig cfg = brick_tables(m, k);
    BrickExhaustiveResult result;
    std::unordered_map<std::string, bool> memo;

    auto walk = [&](auto&& self, const BrickBoard& board, long long prev_units) -> bool {
        if (board.chips_at_target()) return true;
        const std::string key = board.key();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++result.positions > max_positions) {
            result.budget_hit = true;
            return false;
        }
        BrickMove move;
        try {
            move = brick_pusher_move(board, cfg);
        } catch (const BrickStrategyInapplicable& e) {
            result.failure = e.what();
            return false;
        }
        bool all = true;
        for (int column = 0; column < m && all; ++column) {
            BrickBoard next = board;
            apply_brick_push(next, move);
            apply_brick_removal(next, move, column);
            merge_fractions(next, cfg);
            if (auto violation = brick_shape_violation(next)) {
                result.failure = *violation;
                all = false;
                break;
            }
            if (next.total_units() < prev_units) {
                result.failure = "brick count decreased";
                all = false;
                break;
            }
            all = self(self, next, next.total_units());
        }
        memo.emplace(key, all);
        return all;
    };

    BrickBoard board = initial_brick_board(cfg);
    result.all_win = walk(walk, board, board.total_units());
    return result;
}

// ---------------------------------------------------------------------------
// Boundary conversions to the chip-game orientation (start row 0, target k).

inline Board brick_board_to_chips(const BrickBoard& board, const BrickConfig& cfg) {
    Board out;
    for (int c = 0; c < board.m; ++c) {
        ColumnState col;
        for (int r = 0; r <= board.k; ++r) {
            const BrickCell& cell = board.cells[c][r];
            const long long chips = static_cast<long long>(cell.full) * cfg.f[r] +
                                    static_cast<long long>(cell.fractions) * cfg.g[r];
            for (long long i = 0; i < chips; ++i) col.rows.push_back(cfg.k - r);
        }
        sort_column(col);
        out.columns.push_back(std::move(col));
    }
    return out;
}

/// The strategy's move as a chip-game push: f(r) chips from each column's
/// source row, in the orientation of brick_board_to_chips.
inline PusherMove brick_move_to_chips(const BrickMove& move, const BrickConfig& cfg) {
    PusherMove out;
    for (int source : move.source_rows) {
        PushPattern pattern;
        pattern.emplace_back(cfg.k - source, static_cast<int>(cfg.f[source]));
        out.by_column.push_back(std::move(pattern));
    }
    return out;
}

}  // namespace chipgame
