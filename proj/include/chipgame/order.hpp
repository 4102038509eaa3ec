#pragma once

// The domination partial order on columns, boards, and Pusher-to-move states.
// Higher states are at least as good for Pusher; the solver and verifier use
// this order to reuse classifications across positions.

#include <stdexcept>
#include <vector>

#include "chipgame/bipartite.hpp"
#include "chipgame/core.hpp"

namespace chipgame {

/// Componentwise row dominance on canonical columns. The shorter column is
/// padded with -1 (removed-chip sentinel), so a missing chip never dominates
/// a live one. Padding to any common length gives the same verdict, which
/// makes the comparison sound across columns of different initial sizes.
inline bool column_geq(const ColumnState& a, const ColumnState& b) {
    const std::size_t k = std::max(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < k; ++i) {
        const Row ra = i < a.rows.size() ? a.rows[i] : -1;
        const Row rb = i < b.rows.size() ? b.rows[i] : -1;
        if (ra < rb) return false;
    }
    return true;
}

/// B >= B' iff the helper bipartite graph with an edge for every dominating
/// column pair has a perfect matching.
inline bool board_geq(const Board& a, const Board& b) {
    const int n = a.column_count();
    if (n != b.column_count())
        throw std::invalid_argument("board_geq: mismatched column counts");
    BipartiteMatcher matcher(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (column_geq(a.columns[i], b.columns[j])) matcher.add_edge(i, j);
    return matcher.has_perfect_matching();
}

inline bool state_geq(const GameState& a, const GameState& b) {
    if (a.to_move != Player::Pusher || b.to_move != Player::Pusher)
        throw std::logic_error("state_geq is defined on Pusher-to-move states");
    return board_geq(a.board, b.board);
}

/// All rows of a board, each column padded with -1 to `pad_to` slots, sorted
/// descending. If B >= B' then signature(B) dominates signature(B')
/// componentwise, so signatures are a cheap necessary-condition filter in
/// front of the matching test.
inline std::vector<Row> board_signature(const Board& board, int pad_to) {
    std::vector<Row> sig;
    sig.reserve(board.columns.size() * static_cast<std::size_t>(pad_to));
    for (const auto& c : board.columns) {
        for (Row r : c.rows) sig.push_back(r);
        for (int i = c.chips(); i < pad_to; ++i) sig.push_back(-1);
    }
    std::sort(sig.begin(), sig.end(), std::greater<>());
    return sig;
}

inline bool signature_geq(const std::vector<Row>& a, const std::vector<Row>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

}  // namespace chipgame
