#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "chipgame/core.hpp"

namespace testutil {

inline chipgame::Board board(const std::string& encoding) {
    return chipgame::parse_board(encoding);
}

inline chipgame::GameState pusher_state(chipgame::GameSpec spec, const std::string& encoding) {
    chipgame::GameState state;
    state.spec = std::move(spec);
    state.board = chipgame::canonicalize(board(encoding));
    state.to_move = chipgame::Player::Pusher;
    return state;
}

/// Pusher move from per-column (row, count) lists.
inline chipgame::PusherMove move(
    std::initializer_list<std::initializer_list<std::pair<int, int>>> columns) {
    chipgame::PusherMove m;
    for (const auto& col : columns) {
        chipgame::PushPattern pattern;
        for (const auto& [row, count] : col) pattern.emplace_back(row, count);
        m.by_column.push_back(std::move(pattern));
    }
    return m;
}

inline std::vector<std::vector<int>> to_ref(const chipgame::Board& b) {
    std::vector<std::vector<int>> out;
    for (const auto& col : b.columns) out.push_back(col.rows);
    return out;
}

inline chipgame::Board from_ref(const std::vector<std::vector<int>>& b) {
    chipgame::Board out;
    for (const auto& col : b) {
        chipgame::ColumnState c;
        c.rows = col;
        chipgame::sort_column(c);
        out.columns.push_back(std::move(c));
    }
    return out;
}

}  // namespace testutil
