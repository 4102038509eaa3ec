#pragma once

// Pusher move generation, reduced by symmetry: chips in the same (column, row)
// cell are interchangeable, and identical columns receive an unordered
// multiset of per-column patterns. An optional filter drops moves that give
// two identical columns comparable-but-unequal results (pushing the dominating
// pattern in both is never worse).

#include <cstdint>
#include <map>
#include <vector>

#include "chipgame/core.hpp"
#include "chipgame/order.hpp"

namespace chipgame {

/// Every push pattern for one column, including the empty pattern (index 0).
/// A pattern picks, for each distinct row, how many of its chips to push.
inline std::vector<PushPattern> column_patterns(const ColumnState& col) {
    std::vector<std::pair<Row, int>> cells;  // (row, chips) per distinct row
    for (Row r : col.rows) {
        if (!cells.empty() && cells.back().first == r)
            ++cells.back().second;
        else
            cells.emplace_back(r, 1);
    }
    std::vector<PushPattern> out;
    PushPattern current;
    auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            out.push_back(current);
            return;
        }
        const auto [row, chips] = cells[cell];
        for (int take = 0; take <= chips; ++take) {
            if (take > 0) {
                if (take == 1)
                    current.emplace_back(row, 1);
                else
                    current.back().second = take;
            }
            self(self, cell + 1);
        }
        if (chips > 0) current.pop_back();
    };
    recurse(recurse, 0);
    return out;
}

inline ColumnState apply_pattern(const ColumnState& col, const PushPattern& pat, Row threshold) {
    ColumnState out = col;
    for (const auto& [row, count] : pat) {
        int remaining = count;
        for (Row& r : out.rows) {
            if (remaining == 0) break;
            if (r == row) {
                r = std::min<Row>(row + 1, threshold);
                --remaining;
            }
        }
    }
    sort_column(out);
    return out;
}

/// Number of push-count assignments with no symmetry reduction at all:
/// prod over columns, rows of (chips_at_row + 1), minus the empty move.
inline std::uint64_t push_assignment_count(const GameState& state) {
    std::uint64_t product = 1;
    for (const auto& col : state.board.columns) {
        Row prev = -1;
        int run = 0;
        for (Row r : col.rows) {
            if (r == prev) {
                ++run;
            } else {
                if (run > 0) product *= static_cast<std::uint64_t>(run) + 1;
                prev = r;
                run = 1;
            }
        }
        if (run > 0) product *= static_cast<std::uint64_t>(run) + 1;
    }
    return product - 1;
}

struct MoveGenOptions {
    /// Apply the identical-column dominance filter during generation.
    bool prune_comparable_duplicates = false;
};

namespace detail {

struct ColumnGroup {
    std::vector<int> indices;              // board columns holding this value
    std::vector<PushPattern> patterns;     // all patterns for the value
    std::vector<ColumnState> results;      // pattern results, same indexing
    std::vector<std::vector<int>> choices; // multisets of pattern indices
    std::vector<int> choice_pushed;        // chips pushed by each multiset
};

inline bool comparable_unequal(const ColumnState& a, const ColumnState& b) {
    if (a == b) return false;
    return column_geq(a, b) || column_geq(b, a);
}

}  // namespace detail

/// Enumerates Pusher moves up to symmetry. Deterministic order. Returns an
/// empty list when the board has no chips.
inline std::vector<PusherMove> legal_pusher_moves(const GameState& state,
                                                  const MoveGenOptions& options = {}) {
    if (state.to_move != Player::Pusher)
        throw std::logic_error("legal_pusher_moves is defined on Pusher-to-move states");

    // Group columns with identical state; map preserves a deterministic order.
    std::map<std::string, std::vector<int>> by_value;
    for (int i = 0; i < state.board.column_count(); ++i)
        by_value[encode_column(state.board.columns[i])].push_back(i);

    std::vector<detail::ColumnGroup> groups;
    for (auto& [key, indices] : by_value) {
        detail::ColumnGroup g;
        g.indices = indices;
        const ColumnState& value = state.board.columns[indices.front()];
        g.patterns = column_patterns(value);
        for (const auto& pat : g.patterns)
            g.results.push_back(apply_pattern(value, pat, state.spec.threshold));

        // Multisets of patterns, one per column in the group, as
        // non-decreasing index sequences.
        std::vector<int> pick(indices.size(), 0);
        auto recurse = [&](auto&& self, std::size_t slot, int min_index, int pushed) -> void {
            if (slot == pick.size()) {
                g.choices.push_back(pick);
                g.choice_pushed.push_back(pushed);
                return;
            }
            for (int p = min_index; p < static_cast<int>(g.patterns.size()); ++p) {
                if (options.prune_comparable_duplicates) {
                    bool dominated = false;
                    for (std::size_t s = 0; s < slot && !dominated; ++s)
                        dominated = detail::comparable_unequal(g.results[pick[s]], g.results[p]);
                    if (dominated) continue;
                }
                pick[slot] = p;
                int pat_pushed = 0;
                for (const auto& [row, count] : g.patterns[p]) pat_pushed += count;
                self(self, slot + 1, p, pushed + pat_pushed);
            }
        };
        recurse(recurse, 0, 0, 0);
        groups.push_back(std::move(g));
    }

    std::vector<PusherMove> moves;
    PusherMove current;
    current.by_column.resize(state.board.column_count());
    auto cross = [&](auto&& self, std::size_t gi, int pushed) -> void {
        if (gi == groups.size()) {
            if (pushed > 0) moves.push_back(current);
            return;
        }
        const auto& g = groups[gi];
        for (std::size_t c = 0; c < g.choices.size(); ++c) {
            for (std::size_t slot = 0; slot < g.indices.size(); ++slot)
                current.by_column[g.indices[slot]] = g.patterns[g.choices[c][slot]];
            self(self, gi + 1, pushed + g.choice_pushed[c]);
        }
    };
    cross(cross, 0, 0);
    return moves;
}

/// True iff the move assigns two identical columns patterns whose resulting
/// columns are comparable and unequal; such a move is never better than the
/// one that duplicates the dominating pattern.
inline bool has_dominated_duplicate(const GameState& state, const PusherMove& move) {
    std::map<std::string, std::vector<int>> by_value;
    for (int i = 0; i < state.board.column_count(); ++i)
        by_value[encode_column(state.board.columns[i])].push_back(i);
    for (const auto& [key, indices] : by_value) {
        if (indices.size() < 2) continue;
        std::vector<ColumnState> results;
        for (int i : indices)
            results.push_back(
                apply_pattern(state.board.columns[i], move.by_column[i], state.spec.threshold));
        for (std::size_t a = 0; a < results.size(); ++a)
            for (std::size_t b = a + 1; b < results.size(); ++b)
                if (detail::comparable_unequal(results[a], results[b])) return true;
    }
    return false;
}

}  // namespace chipgame
