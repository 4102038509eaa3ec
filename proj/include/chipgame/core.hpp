#pragma once

// Core types and rules of the Pusher/Remover chip game played on a table of
// columns. Boards are stored canonically: rows within a column descending,
// columns ordered by a fixed total order, removed chips absent rather than
// kept as sentinels.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chipgame {

using Row = int;

enum class Player { Pusher, Remover };

enum class Outcome { PusherWin, PusherLoss, Ongoing };

enum class GameValue { PusherWins, RemoverWins };

inline const char* to_string(GameValue v) {
    return v == GameValue::PusherWins ? "PusherWins" : "RemoverWins";
}

/// Game parameters: the winning threshold row and the initial chip count of
/// every column. Sizes are normalized to descending order on construction so
/// that equal games serialize identically.
struct GameSpec {
    Row threshold = 0;
    std::vector<int> sizes;

    GameSpec() = default;
    GameSpec(Row threshold_, std::vector<int> sizes_)
        : threshold(threshold_), sizes(std::move(sizes_)) {
        if (threshold < 1)
            throw std::invalid_argument("chip game: threshold must be >= 1");
        if (sizes.empty())
            throw std::invalid_argument("chip game: need at least one column");
        for (int n : sizes)
            if (n < 1)
                throw std::invalid_argument("chip game: column sizes must be >= 1");
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
    }

    int columns() const { return static_cast<int>(sizes.size()); }
    int total_chips() const {
        int t = 0;
        for (int n : sizes) t += n;
        return t;
    }
    bool operator==(const GameSpec&) const = default;
};

/// Rows of the live chips in one column, sorted descending. Removed chips are
/// simply absent; comparisons pad with a -1 sentinel (see order.hpp).
struct ColumnState {
    std::vector<Row> rows;

    int chips() const { return static_cast<int>(rows.size()); }
    bool empty() const { return rows.empty(); }
    int chips_at(Row r) const {
        return static_cast<int>(std::count(rows.begin(), rows.end(), r));
    }
    bool operator==(const ColumnState&) const = default;
};

struct Board {
    std::vector<ColumnState> columns;

    int column_count() const { return static_cast<int>(columns.size()); }
    int live_chips() const {
        int t = 0;
        for (const auto& c : columns) t += c.chips();
        return t;
    }
    Row max_row() const {
        Row m = -1;
        for (const auto& c : columns)
            if (!c.rows.empty()) m = std::max(m, c.rows.front());
        return m;
    }
    bool operator==(const Board&) const = default;
};

/// Chips pushed in one column, as (row, count) pairs with rows descending and
/// counts >= 1. Chips within a (column, row) cell are interchangeable, so a
/// per-chip 0/1 vector collapses to these counts.
using PushPattern = std::vector<std::pair<Row, int>>;

struct PusherMove {
    std::vector<PushPattern> by_column;  // one entry per board column

    int total_pushed() const {
        int t = 0;
        for (const auto& pat : by_column)
            for (const auto& [row, count] : pat) t += count;
        return t;
    }
    int pushed_in(int column) const {
        int t = 0;
        for (const auto& [row, count] : by_column[column]) t += count;
        return t;
    }
    bool empty() const { return total_pushed() == 0; }
    bool operator==(const PusherMove&) const = default;
};

struct RemoverMove {
    int column = 0;  // 0-based index into the board's columns
    bool operator==(const RemoverMove&) const = default;
};

/// Full game position. `pending` is present exactly on Remover-to-move states
/// and records which chips were just pushed and are eligible for removal.
struct GameState {
    GameSpec spec;
    Board board;
    Player to_move = Player::Pusher;
    std::optional<PusherMove> pending;
};

// ---------------------------------------------------------------------------
// Canonical form

inline void sort_column(ColumnState& c) {
    std::sort(c.rows.begin(), c.rows.end(), std::greater<>());
}

/// Fixed total order on canonical columns: descending-lexicographic on the
/// row sequences, longer sequence first when one is a prefix of the other.
inline bool column_order_less(const ColumnState& a, const ColumnState& b) {
    const std::size_t n = std::min(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.rows[i] != b.rows[i]) return a.rows[i] > b.rows[i];
    return a.rows.size() > b.rows.size();
}

inline Board canonicalize(Board board) {
    for (auto& c : board.columns) sort_column(c);
    std::sort(board.columns.begin(), board.columns.end(), column_order_less);
    return board;
}

inline bool is_canonical(const Board& board) {
    return board == canonicalize(board);
}

// ---------------------------------------------------------------------------
// Text encoding
//
// A board encodes as a bracketed list of columns in canonical order, each a
// bracketed descending list of rows: [[5,3,0],[2]]. A state line carries the
// game parameters as well. Both encodings are bit-exact: equal states produce
// byte-identical lines.

inline std::string encode_column(const ColumnState& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.rows[i]);
    }
    out += ']';
    return out;
}

inline std::string encode_board(const Board& board) {
    std::string out = "[";
    for (std::size_t i = 0; i < board.columns.size(); ++i) {
        if (i) out += ',';
        out += encode_column(board.columns[i]);
    }
    out += ']';
    return out;
}

inline constexpr std::string_view kGammaKey = "\xCE\x93";  // UTF-8 capital gamma

inline std::string encode_sizes(const GameSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.sizes[i]);
    }
    return out;
}

inline std::string state_line(const GameSpec& spec, const Board& board) {
    std::string out(kGammaKey);
    out += '=';
    out += std::to_string(spec.threshold);
    out += "; sizes=";
    out += encode_sizes(spec);
    out += "; board=";
    out += encode_board(board);
    return out;
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
    if (s.empty()) throw std::invalid_argument("empty " + std::string(what));
    std::size_t pos = 0;
    int value = 0;
    bool neg = false;
    if (s[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("bad " + std::string(what));
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw std::invalid_argument("bad " + std::string(what) + ": " + std::string(s));
        value = value * 10 + (s[pos] - '0');
    }
    return neg ? -value : value;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start), what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

inline Board parse_board(std::string_view text) {
    Board board;
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("bad board encoding: " + std::string(text));
    std::string_view inner = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
        if (inner[pos] != '[')
            throw std::invalid_argument("bad board encoding: " + std::string(text));
        std::size_t close = inner.find(']', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("bad board encoding: " + std::string(text));
        ColumnState col;
        col.rows = detail::parse_int_list(inner.substr(pos + 1, close - pos - 1), "row");
        board.columns.push_back(std::move(col));
        pos = close + 1;
        if (pos < inner.size()) {
            if (inner[pos] != ',')
                throw std::invalid_argument("bad board encoding: " + std::string(text));
            ++pos;
        }
    }
    if (board.columns.empty())
        throw std::invalid_argument("bad board encoding: no columns");
    return board;
}

/// Checks that `board` is playable under `spec`: row range, column count, and
/// an assignment of columns to initial sizes that covers every chip.
inline void validate_board(const GameSpec& spec, const Board& board) {
    if (board.column_count() != spec.columns())
        throw std::invalid_argument("board has wrong number of columns");
    std::vector<int> counts;
    for (const auto& c : board.columns) {
        for (Row r : c.rows)
            if (r < 0 || r > spec.threshold)
                throw std::invalid_argument("chip row out of range");
        counts.push_back(c.chips());
    }
    // Sizes are descending; matching descending chip counts greedily is
    // optimal for "each column fits some initial size".
    std::sort(counts.begin(), counts.end(), std::greater<>());
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > spec.sizes[i])
            throw std::invalid_argument("column holds more chips than any remaining initial size");
}

struct ParsedStateLine {
    GameSpec spec;
    Board board;
};

inline ParsedStateLine parse_state_line(std::string_view line) {
    auto expect = [&](std::string_view prefix) {
        if (line.substr(0, prefix.size()) != prefix)
            throw std::invalid_argument("bad state line: " + std::string(line));
        line.remove_prefix(prefix.size());
    };
    expect(kGammaKey);
    expect("=");
    std::size_t semi = line.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("bad state line: missing sizes");
    Row gamma = detail::parse_int(line.substr(0, semi), "threshold");
    line.remove_prefix(semi + 1);
    expect(" sizes=");
    semi = line.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("bad state line: missing board");
    std::vector<int> sizes = detail::parse_int_list(line.substr(0, semi), "size");
    line.remove_prefix(semi + 1);
    expect(" board=");
    ParsedStateLine out{GameSpec(gamma, std::move(sizes)), parse_board(line)};
    out.board = canonicalize(out.board);
    validate_board(out.spec, out.board);
    return out;
}

/// Memoization key for a Pusher-to-move state. Equal keys iff the canonical
/// boards are equal; stores never mix game parameters, so the key omits them.
inline std::string state_key(const GameState& state) {
    if (state.to_move != Player::Pusher)
        throw std::logic_error("state_key is defined on Pusher-to-move states");
    return encode_board(canonicalize(state.board));
}

// ---------------------------------------------------------------------------
// Rules

inline GameState initial_state(const GameSpec& spec) {
    GameState g;
    g.spec = spec;
    for (int n : spec.sizes) {
        ColumnState c;
        c.rows.assign(static_cast<std::size_t>(n), 0);
        g.board.columns.push_back(std::move(c));
    }
    g.board = canonicalize(g.board);
    g.to_move = Player::Pusher;
    return g;
}

/// Terminal classification of a Pusher-to-move state. The win condition is
/// checked before the loss condition; they cannot co-occur because a chip at
/// the threshold row means the board is nonempty.
inline Outcome terminal(const GameState& state) {
    if (state.to_move != Player::Pusher)
        throw std::logic_error("terminal is defined on Pusher-to-move states");
    bool any_chip = false;
    for (const auto& c : state.board.columns) {
        if (!c.rows.empty()) {
            any_chip = true;
            if (c.rows.front() >= state.spec.threshold) return Outcome::PusherWin;
        }
    }
    return any_chip ? Outcome::Ongoing : Outcome::PusherLoss;
}

inline void validate_pusher_move(const GameState& state, const PusherMove& move) {
    if (state.to_move != Player::Pusher)
        throw std::invalid_argument("not Pusher's turn");
    if (static_cast<int>(move.by_column.size()) != state.board.column_count())
        throw std::invalid_argument("pusher move addresses wrong number of columns");
    if (move.empty())
        throw std::invalid_argument("pusher move must push at least one chip");
    for (std::size_t i = 0; i < move.by_column.size(); ++i) {
        for (const auto& [row, count] : move.by_column[i]) {
            if (count < 1) throw std::invalid_argument("pushed count must be >= 1");
            if (row < 0 || row > state.spec.threshold)
                throw std::invalid_argument("pushed row out of range");
            if (count > state.board.columns[i].chips_at(row))
                throw std::invalid_argument("pushing more chips than exist at row " +
                                            std::to_string(row));
        }
    }
}

/// Applies a Pusher move: each pushed chip's row increases by one, capped at
/// the threshold (a push from the threshold row is legal but pointless).
/// Column order is preserved so the pending record stays aligned.
inline GameState apply_pusher(const GameState& state, const PusherMove& move) {
    validate_pusher_move(state, move);
    GameState next = state;
    for (std::size_t i = 0; i < move.by_column.size(); ++i) {
        ColumnState& col = next.board.columns[i];
        for (const auto& [row, count] : move.by_column[i]) {
            int remaining = count;
            for (Row& r : col.rows) {
                if (remaining == 0) break;
                if (r == row) {
                    r = std::min<Row>(row + 1, state.spec.threshold);
                    --remaining;
                }
            }
        }
        sort_column(col);
    }
    next.to_move = Player::Remover;
    next.pending = move;
    return next;
}

/// Applies a Remover move: deletes exactly the pending chips of the chosen
/// column at their post-push rows, then returns a canonical Pusher-to-move
/// state.
inline GameState apply_remover(const GameState& state, const RemoverMove& move) {
    if (state.to_move != Player::Remover)
        throw std::invalid_argument("not Remover's turn");
    if (!state.pending)
        throw std::logic_error("Remover-to-move state without a pending record");
    if (move.column < 0 || move.column >= state.board.column_count())
        throw std::invalid_argument("remover column out of range");
    GameState next = state;
    ColumnState& col = next.board.columns[move.column];
    for (const auto& [row, count] : state.pending->by_column[move.column]) {
        const Row pushed_to = std::min<Row>(row + 1, state.spec.threshold);
        int remaining = count;
        std::erase_if(col.rows, [&](Row r) {
            if (remaining > 0 && r == pushed_to) {
                --remaining;
                return true;
            }
            return false;
        });
        if (remaining != 0)
            throw std::logic_error("pending record inconsistent with board");
    }
    next.board = canonicalize(next.board);
    next.to_move = Player::Pusher;
    next.pending.reset();
    return next;
}

/// All distinct Pusher-to-move children of a Remover-to-move state, one per
/// canonical result, keeping the lowest removable column index for each.
inline std::vector<std::pair<RemoverMove, GameState>> remover_children(const GameState& state) {
    std::vector<std::pair<RemoverMove, GameState>> out;
    std::vector<std::string> seen;
    for (int c = 0; c < state.board.column_count(); ++c) {
        GameState child = apply_remover(state, RemoverMove{c});
        std::string key = encode_board(child.board);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        out.emplace_back(RemoverMove{c}, std::move(child));
    }
    return out;
}

}  // namespace chipgame
