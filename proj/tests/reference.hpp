#pragma once

// Independent reference implementations used only by the test suite. These
// deliberately share no logic with the library paths they check: board
// comparison by explicit permutation search, game values by a plain minimax
// with full move enumeration, and the painting game with no dominance or
// symmetry reductions at all.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace testref {

using Column = std::vector<int>;  // chip rows, kept sorted descending
using Board = std::vector<Column>;

inline void normalize(Board& b) {
    for (auto& col : b) std::sort(col.begin(), col.end(), std::greater<>());
    std::sort(b.begin(), b.end());
}

inline std::string board_key(Board b) {
    normalize(b);
    std::string out;
    for (const auto& col : b) {
        for (int r : col) {
            out += std::to_string(r);
            out += ',';
        }
        out += '|';
    }
    return out;
}

// --- Board domination by brute force over column permutations -------------

inline bool column_geq(const Column& a, const Column& b) {
    const std::size_t k = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
        const int ra = i < a.size() ? a[i] : -1;
        const int rb = i < b.size() ? b[i] : -1;
        if (ra < rb) return false;
    }
    return true;
}

inline bool board_geq_bruteforce(const Board& a, const Board& b) {
    std::vector<int> perm(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            ok = column_geq(a[i], b[perm[i]]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// --- Plain minimax for the chip game ---------------------------------------
//
// Full move enumeration: per column and distinct row, every push count, no
// symmetry quotient, no pruning, no domination lookups. Memoized on the
// normalized board only.

class PlainMinimax {
public:
    explicit PlainMinimax(int gamma) : gamma_(gamma) {}

    // 1 when Pusher wins with best play, 0 otherwise.
    int value(Board board) {
        normalize(board);
        bool any = false;
        for (const auto& col : board)
            for (int r : col) {
                any = true;
                if (r >= gamma_) return 1;
            }
        if (!any) return 0;

        const std::string key = board_key(board);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Collect (column, row, available) cells.
        struct Cell {
            int column;
            int row;
            int available;
        };
        std::vector<Cell> cells;
        for (std::size_t c = 0; c < board.size(); ++c) {
            for (std::size_t i = 0; i < board[c].size(); ++i) {
                if (i > 0 && board[c][i] == board[c][i - 1]) {
                    ++cells.back().available;
                } else {
                    cells.push_back({static_cast<int>(c), board[c][i], 1});
                }
            }
        }

        int best = 0;
        std::vector<int> take(cells.size(), 0);
        auto enumerate = [&](auto&& self, std::size_t i, int pushed) -> void {
            if (best == 1) return;
            if (i == cells.size()) {
                if (pushed > 0 && remover_value(board, cells, take) == 1) best = 1;
                return;
            }
            for (int t = 0; t <= cells[i].available; ++t) {
                take[i] = t;
                self(self, i + 1, pushed + t);
            }
            take[i] = 0;
        };
        enumerate(enumerate, 0, 0);

        memo_.emplace(key, best);
        return best;
    }

private:
    template <typename Cells>
    int remover_value(const Board& board, const Cells& cells, const std::vector<int>& take) {
        int result = 1;
        for (std::size_t removed = 0; removed < board.size() && result == 1; ++removed) {
            Board child = board;
            // Push everything selected, capping at the threshold row.
            for (std::size_t i = 0; i < cells.size(); ++i) {
                Column& col = child[cells[i].column];
                int remaining = take[i];
                for (int& r : col) {
                    if (remaining == 0) break;
                    if (r == cells[i].row) {
                        r = std::min(cells[i].row + 1, gamma_);
                        --remaining;
                    }
                }
            }
            // Delete the pushed chips of the removed column.
            Column& col = child[removed];
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i].column != static_cast<int>(removed)) continue;
                int remaining = take[i];
                const int target = std::min(cells[i].row + 1, gamma_);
                std::erase_if(col, [&](int r) {
                    if (remaining > 0 && r == target) {
                        --remaining;
                        return true;
                    }
                    return false;
                });
            }
            result = std::min(result, value(std::move(child)));
        }
        return result;
    }

    int gamma_;
    std::unordered_map<std::string, int> memo_;
};

inline int plain_minimax_value(const std::vector<int>& sizes, int gamma) {
    Board board;
    for (int n : sizes) board.emplace_back(static_cast<std::size_t>(n), 0);
    return PlainMinimax(gamma).value(std::move(board));
}

// --- Painting game with no reductions ---------------------------------------
//
// Vertices are explicit; Lister presents any nonempty subset of unpainted
// vertices, Painter paints any subset of the presented vertices lying in a
// single part (including the empty set).

class PlainPainting {
public:
    PlainPainting(std::vector<int> part_sizes, int r) : r_(r) {
        for (std::size_t p = 0; p < part_sizes.size(); ++p)
            for (int i = 0; i < part_sizes[p]; ++i) part_of_.push_back(static_cast<int>(p));
        count_.assign(part_of_.size(), 0);
        painted_.assign(part_of_.size(), false);
    }

    bool painter_wins() { return painter_wins_state(); }

private:
    std::string key() const {
        std::string out;
        for (std::size_t v = 0; v < part_of_.size(); ++v) {
            out += painted_[v] ? "p" : std::to_string(count_[v]);
            out += ',';
        }
        return out;
    }

    bool painter_wins_state() {
        bool all_painted = true;
        for (bool p : painted_) all_painted &= p;
        if (all_painted) return true;

        const std::string k = key();
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;

        const int n = static_cast<int>(part_of_.size());
        bool painter_ok = true;
        for (std::uint32_t present = 1; present < (1u << n) && painter_ok; ++present) {
            bool legal = true;
            for (int v = 0; v < n; ++v)
                if ((present >> v & 1) && painted_[v]) legal = false;
            if (!legal) continue;

            bool some_response_wins = false;
            // Painter picks a part and any subset of the presented vertices in it.
            for (int paint_part = -1; paint_part < static_cast<int>(part_count()) &&
                                      !some_response_wins;
                 ++paint_part) {
                std::uint32_t in_part = 0;
                if (paint_part >= 0)
                    for (int v = 0; v < n; ++v)
                        if ((present >> v & 1) && part_of_[v] == paint_part)
                            in_part |= 1u << v;
                // paint_part == -1 stands for painting nothing at all.
                std::uint32_t sub = in_part;
                while (true) {
                    if (try_round(present, sub)) {
                        some_response_wins = true;
                        break;
                    }
                    if (sub == 0) break;
                    sub = (sub - 1) & in_part;
                }
            }
            if (!some_response_wins) painter_ok = false;
        }
        memo_.emplace(k, painter_ok);
        return painter_ok;
    }

    std::size_t part_count() const {
        std::size_t parts = 0;
        for (int p : part_of_) parts = std::max<std::size_t>(parts, p + 1);
        return parts;
    }

    bool try_round(std::uint32_t present, std::uint32_t paint) {
        const int n = static_cast<int>(part_of_.size());
        std::vector<int> saved_count = count_;
        std::vector<bool> saved_painted = painted_;
        bool lister_hit = false;
        for (int v = 0; v < n; ++v) {
            if (!(present >> v & 1)) continue;
            if (paint >> v & 1) {
                painted_[v] = true;
            } else {
                count_[v] += 1;
                if (count_[v] >= r_) lister_hit = true;
            }
        }
        bool result = !lister_hit && painter_wins_state();
        count_ = std::move(saved_count);
        painted_ = std::move(saved_painted);
        return result;
    }

    int r_;
    std::vector<int> part_of_;
    std::vector<int> count_;
    std::vector<bool> painted_;
    std::unordered_map<std::string, bool> memo_;
};

inline bool painter_wins_unreduced(const std::vector<int>& part_sizes, int r) {
    return PlainPainting(part_sizes, r).painter_wins();
}

// --- Generators -------------------------------------------------------------

/// All multisets of part sizes (1..max_part each) whose total is in
/// [1, max_total], as non-increasing vectors.
inline std::vector<std::vector<int>> size_profiles(int max_total, int max_part) {
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
    recurse(recurse, max_total, max_part);
    return out;
}

inline Board random_board(std::mt19937_64& rng, int max_columns, int max_chips, int max_row) {
    std::uniform_int_distribution<int> ncols(1, max_columns);
    std::uniform_int_distribution<int> nchips(0, max_chips);
    std::uniform_int_distribution<int> row(0, max_row);
    Board b(ncols(rng));
    for (auto& col : b) {
        col.resize(nchips(rng));
        for (int& r : col) r = row(rng);
        std::sort(col.begin(), col.end(), std::greater<>());
    }
    return b;
}

}  // namespace testref
