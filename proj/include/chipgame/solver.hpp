#pragma once

// Exact minimax solver for the chip game. Pusher-to-move states are memoized
// by canonical key and classified against the growing winning/losing stores
// through the domination order before being expanded, following the
// monotonicity of the game value under that order.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chipgame/closure_file.hpp"
#include "chipgame/core.hpp"
#include "chipgame/moves.hpp"
#include "chipgame/order.hpp"

namespace chipgame {

struct SolveConfig {
    bool prune_pusher = true;    // drop dominated-duplicate Pusher moves
    bool prune_remover = true;   // drop dominated Remover responses
    bool use_domination = true;  // classify against the stores before expanding
    bool compact_store = false;  // keep only minimal winning / maximal losing states
    std::uint64_t max_nodes = 0;        // 0 = unlimited
    std::uint64_t max_store_states = 0; // memory cap, in stored states; 0 = unlimited
    double max_seconds = 0;             // wall-clock cap; 0 = unlimited
    int threads = 1;
};

struct SolveStats {
    std::uint64_t nodes = 0;  // Pusher-to-move states visited
    std::uint64_t memo_hits = 0;
    std::uint64_t domination_hits = 0;
    std::uint64_t pusher_moves_pruned = 0;
    std::uint64_t remover_moves_pruned = 0;
    double wall_seconds = 0.0;
};

/// Thrown when a budget runs out. The solver never reports a value it has not
/// proved.
class InconclusiveError : public std::runtime_error {
public:
    InconclusiveError(const std::string& what, SolveStats stats)
        : std::runtime_error(what), stats(stats) {}
    SolveStats stats;
};

enum class Classification { Winning, Losing, Unknown };

/// The sets of resolved Pusher-to-move states. A query state dominating a
/// stored winning state is winning; one dominated by a stored losing state is
/// losing. With `compact` enabled only the minimal winning and maximal losing
/// states are retained, which preserves exactly this classification power.
class ClosureStore {
public:
    explicit ClosureStore(GameSpec spec, bool compact = false)
        : spec_(std::move(spec)), compact_(compact) {
        pad_ = 0;
        for (int n : spec_.sizes) pad_ = std::max(pad_, n);
    }

    const GameSpec& spec() const { return spec_; }

    struct Entry {
        Board board;
        std::string key;
        std::vector<Row> signature;
    };

    const std::vector<Entry>& winning() const { return winning_; }
    const std::vector<Entry>& losing() const { return losing_; }

    bool contains(const std::string& key) const {
        return winning_keys_.count(key) || losing_keys_.count(key);
    }

    void insert(const Board& board, GameValue value) {
        std::string key = encode_board(board);
        if (winning_keys_.count(key) || losing_keys_.count(key)) return;
        Entry entry{board, key, board_signature(board, pad_)};
        if (value == GameValue::PusherWins) {
            if (compact_) {
                for (const auto& e : winning_)
                    if (signature_geq(entry.signature, e.signature) && board_geq(board, e.board))
                        return;  // an existing entry already covers everything this one would
                std::erase_if(winning_, [&](const Entry& e) {
                    bool redundant = signature_geq(e.signature, entry.signature) &&
                                     board_geq(e.board, board);
                    if (redundant) winning_keys_.erase(e.key);
                    return redundant;
                });
            }
            winning_keys_.insert(key);
            winning_.push_back(std::move(entry));
        } else {
            if (compact_) {
                for (const auto& e : losing_)
                    if (signature_geq(e.signature, entry.signature) && board_geq(e.board, board))
                        return;
                std::erase_if(losing_, [&](const Entry& e) {
                    bool redundant = signature_geq(entry.signature, e.signature) &&
                                     board_geq(board, e.board);
                    if (redundant) losing_keys_.erase(e.key);
                    return redundant;
                });
            }
            losing_keys_.insert(key);
            losing_.push_back(std::move(entry));
        }
    }

    Classification classify(const Board& board) const {
        std::string key = encode_board(board);
        if (winning_keys_.count(key)) return Classification::Winning;
        if (losing_keys_.count(key)) return Classification::Losing;
        std::vector<Row> sig = board_signature(board, pad_);
        for (const auto& e : winning_)
            if (signature_geq(sig, e.signature) && board_geq(board, e.board))
                return Classification::Winning;
        for (const auto& e : losing_)
            if (signature_geq(e.signature, sig) && board_geq(e.board, board))
                return Classification::Losing;
        return Classification::Unknown;
    }

    ClosureFile export_closure(ClosureKind kind) const {
        ClosureFile file;
        file.kind = kind;
        file.spec = spec_;
        const auto& entries = kind == ClosureKind::Winning ? winning_ : losing_;
        for (const auto& e : entries) file.states.push_back(e.board);
        return file;
    }

    std::size_t winning_count() const { return winning_.size(); }
    std::size_t losing_count() const { return losing_.size(); }

private:
    GameSpec spec_;
    bool compact_;
    int pad_;
    std::vector<Entry> winning_;
    std::vector<Entry> losing_;
    std::unordered_set<std::string> winning_keys_;
    std::unordered_set<std::string> losing_keys_;
};

/// Monotonicity lookup: Winning if the state dominates a stored winning
/// state, Losing if it is dominated by a stored losing state. Exact-key
/// lookup first.
inline Classification classify_by_closure(const GameState& state, const ClosureStore& store) {
    if (state.to_move != Player::Pusher)
        throw std::logic_error("classify_by_closure is defined on Pusher-to-move states");
    return store.classify(canonicalize(state.board));
}

/// Drops moves that give two identical columns comparable-but-unequal
/// results; the move duplicating the dominating pattern remains.
inline std::vector<PusherMove> prune_pusher_moves(const GameState& state,
                                                  const std::vector<PusherMove>& moves) {
    std::vector<PusherMove> out;
    out.reserve(moves.size());
    for (const auto& move : moves)
        if (!has_dominated_duplicate(state, move)) out.push_back(move);
    return out;
}

/// Drops Remover moves whose resulting state dominates another move's
/// result; duplicate results collapse to the lowest column index. At least
/// one move survives.
inline std::vector<RemoverMove> prune_remover_moves(const GameState& state,
                                                    const std::vector<RemoverMove>& moves) {
    if (state.to_move != Player::Remover)
        throw std::logic_error("prune_remover_moves is defined on Remover-to-move states");
    struct Child {
        RemoverMove move;
        Board board;
        std::string key;
    };
    std::vector<Child> children;
    for (const auto& m : moves) {
        GameState child = apply_remover(state, m);
        std::string key = encode_board(child.board);
        bool seen = false;
        for (const auto& c : children)
            if (c.key == key) {
                seen = true;
                break;
            }
        if (!seen) children.push_back({m, std::move(child.board), std::move(key)});
    }
    std::vector<RemoverMove> out;
    for (std::size_t i = 0; i < children.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < children.size() && !dominated; ++j)
            dominated = i != j && children[j].key != children[i].key &&
                        board_geq(children[i].board, children[j].board);
        if (!dominated) out.push_back(children[i].move);
    }
    return out;
}

struct SolveResult {
    GameValue value = GameValue::RemoverWins;
    ClosureStore closures;
    SolveStats stats;
};

namespace detail {

class Solver {
public:
    Solver(GameSpec spec, SolveConfig cfg)
        : spec_(std::move(spec)), cfg_(cfg), store_(spec_, cfg.compact_store) {}

    SolveResult run(const GameState& root) {
        start_ = std::chrono::steady_clock::now();
        GameValue value;
        if (cfg_.threads > 1 && root.to_move == Player::Pusher &&
            terminal(root) == Outcome::Ongoing)
            value = solve_root_parallel(root);
        else
            value = solve_pusher(root);
        SolveStats stats = snapshot_stats();
        stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return SolveResult{value, std::move(store_), stats};
    }

private:
    struct ChildNode {
        RemoverMove move;
        GameState state;
        int pending_in_column = 0;
    };

    GameValue solve_pusher(const GameState& state) {
        const std::uint64_t node = nodes_.fetch_add(1, std::memory_order_relaxed);
        if (cfg_.max_nodes && node >= cfg_.max_nodes)
            throw InconclusiveError("node budget exhausted", snapshot_stats());
        if (cfg_.max_store_states || cfg_.max_seconds > 0) check_slow_budgets(node);

        switch (terminal(state)) {
        case Outcome::PusherWin:
            return record(state.board, GameValue::PusherWins);
        case Outcome::PusherLoss:
            return record(state.board, GameValue::RemoverWins);
        case Outcome::Ongoing:
            break;
        }

        const std::string key = encode_board(state.board);
        {
            std::shared_lock lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                memo_hits_.fetch_add(1, std::memory_order_relaxed);
                return it->second;
            }
        }
        if (cfg_.use_domination) {
            std::shared_lock lock(mutex_);
            Classification c = store_.classify(state.board);
            if (c != Classification::Unknown) {
                lock.unlock();
                domination_hits_.fetch_add(1, std::memory_order_relaxed);
                return record(state.board,
                              c == Classification::Winning ? GameValue::PusherWins
                                                           : GameValue::RemoverWins);
            }
        }

        for (const auto& move : ordered_pusher_moves(state)) {
            if (solve_remover(apply_pusher(state, move)) == GameValue::PusherWins)
                return record(state.board, GameValue::PusherWins);
        }
        return record(state.board, GameValue::RemoverWins);
    }

    GameValue solve_remover(const GameState& rstate) {
        for (const auto& child : ordered_remover_children(rstate))
            if (solve_pusher(child.state) == GameValue::RemoverWins)
                return GameValue::RemoverWins;
        return GameValue::PusherWins;
    }

    std::vector<PusherMove> ordered_pusher_moves(const GameState& state) {
        std::vector<PusherMove> moves = legal_pusher_moves(state);
        if (cfg_.prune_pusher) {
            std::size_t before = moves.size();
            moves = prune_pusher_moves(state, moves);
            pusher_pruned_.fetch_add(before - moves.size(), std::memory_order_relaxed);
        }
        // Big pushes first: wins tend to come from pushing aggressively.
        std::stable_sort(moves.begin(), moves.end(), [](const PusherMove& a, const PusherMove& b) {
            return a.total_pushed() > b.total_pushed();
        });
        return moves;
    }

    std::vector<ChildNode> ordered_remover_children(const GameState& rstate) {
        std::vector<ChildNode> children;
        for (const auto& [move, child] : remover_children(rstate))
            children.push_back({move, child, rstate.pending->pushed_in(move.column)});
        if (cfg_.prune_remover) {
            const std::size_t before = children.size();
            std::vector<bool> dominated(children.size(), false);
            for (std::size_t i = 0; i < children.size(); ++i)
                for (std::size_t j = 0; j < children.size() && !dominated[i]; ++j)
                    dominated[i] = i != j &&
                                   children[i].state.board != children[j].state.board &&
                                   board_geq(children[i].state.board, children[j].state.board);
            std::vector<ChildNode> kept;
            for (std::size_t i = 0; i < children.size(); ++i)
                if (!dominated[i]) kept.push_back(std::move(children[i]));
            children = std::move(kept);
            remover_pruned_.fetch_add(before - children.size(), std::memory_order_relaxed);
        }
        // Removing the column with the most freshly pushed chips first.
        std::stable_sort(children.begin(), children.end(), [](const ChildNode& a, const ChildNode& b) {
            return a.pending_in_column > b.pending_in_column;
        });
        return children;
    }

    GameValue record(const Board& board, GameValue value) {
        std::unique_lock lock(mutex_);
        memo_.emplace(encode_board(board), value);
        store_.insert(board, value);
        return value;
    }

    GameValue solve_root_parallel(const GameState& root) {
        // The root cannot be terminal: every column starts with chips at row 0.
        std::vector<PusherMove> moves = ordered_pusher_moves(root);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> pusher_wins{false};
        std::vector<std::thread> workers;
        std::exception_ptr error;
        std::mutex error_mutex;
        const int n = std::max(1, cfg_.threads);
        for (int t = 0; t < n; ++t) {
            workers.emplace_back([&] {
                try {
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= moves.size()) return;
                        if (solve_remover(apply_pusher(root, moves[i])) == GameValue::PusherWins)
                            pusher_wins.store(true);
                    }
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        if (error) std::rethrow_exception(error);
        GameValue value = pusher_wins.load() ? GameValue::PusherWins : GameValue::RemoverWins;
        return record(root.board, value);
    }

    void check_slow_budgets(std::uint64_t node) {
        if (cfg_.max_store_states) {
            std::shared_lock lock(mutex_);
            if (store_.winning_count() + store_.losing_count() >= cfg_.max_store_states)
                throw InconclusiveError("store budget exhausted", snapshot_stats());
        }
        if (cfg_.max_seconds > 0 && (node & 0xFFF) == 0) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (elapsed > cfg_.max_seconds)
                throw InconclusiveError("time budget exhausted", snapshot_stats());
        }
    }

    SolveStats snapshot_stats() const {
        SolveStats s;
        s.nodes = nodes_.load();
        s.memo_hits = memo_hits_.load();
        s.domination_hits = domination_hits_.load();
        s.pusher_moves_pruned = pusher_pruned_.load();
        s.remover_moves_pruned = remover_pruned_.load();
        return s;
    }

    GameSpec spec_;
    SolveConfig cfg_;
    ClosureStore store_;
    std::chrono::steady_clock::time_point start_;
    std::unordered_map<std::string, GameValue> memo_;
    mutable std::shared_mutex mutex_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> memo_hits_{0};
    std::atomic<std::uint64_t> domination_hits_{0};
    std::atomic<std::uint64_t> pusher_pruned_{0};
    std::atomic<std::uint64_t> remover_pruned_{0};
};

}  // namespace detail

/// Solves the game from its initial state. The returned closures contain
/// every Pusher-to-move state the search resolved; the initial state's key is
/// in the closure matching the value.
inline SolveResult evaluate(const GameSpec& spec, const SolveConfig& cfg = {}) {
    return detail::Solver(spec, cfg).run(initial_state(spec));
}

/// Solves from an arbitrary Pusher-to-move position of the given game.
inline SolveResult evaluate_state(const GameState& state, const SolveConfig& cfg = {}) {
    if (state.to_move != Player::Pusher)
        throw std::invalid_argument("evaluate_state: Pusher must be to move");
    if (state.pending)
        throw std::invalid_argument("evaluate_state: Pusher-to-move states carry no pending record");
    validate_board(state.spec, state.board);
    GameState canonical = state;
    canonical.board = canonicalize(canonical.board);
    return detail::Solver(state.spec, cfg).run(canonical);
}

/// Default search window for the paintability scan: the column count below,
/// and above it the tightest generic bound available for the size profile.
inline std::pair<Row, Row> default_gamma_bounds(const std::vector<int>& sizes) {
    const int m = static_cast<int>(sizes.size());
    bool all3 = true;
    bool only23 = true;
    int total = 0;
    int threes = 0;
    for (int n : sizes) {
        total += n;
        if (n != 3) all3 = false;
        if (n == 3) ++threes;
        if (n != 2 && n != 3) only23 = false;
    }
    Row hi;
    if (all3)
        hi = static_cast<Row>((3 * m) / 2);
    else if (only23)
        hi = static_cast<Row>(m + threes);
    else
        hi = static_cast<Row>(total);
    return {static_cast<Row>(m), std::max<Row>(hi, m)};
}

class PaintabilityRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest threshold in [lo, hi] at which Remover wins, i.e. the paintability
/// when the window contains it. The game value is monotone in the threshold,
/// so the scan stops at the first Remover win.
inline int paintability(const std::vector<int>& sizes, Row lo, Row hi,
                        const SolveConfig& cfg = {},
                        std::vector<std::pair<Row, GameValue>>* evaluations = nullptr) {
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("paintability: bad threshold range");
    for (Row gamma = lo; gamma <= hi; ++gamma) {
        GameValue v = evaluate(GameSpec(gamma, sizes), cfg).value;
        if (evaluations) evaluations->emplace_back(gamma, v);
        if (v == GameValue::RemoverWins) return gamma;
    }
    std::string msg = "paintability: Pusher still wins at every threshold in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]";
    throw PaintabilityRangeError(msg);
}

inline int paintability(const std::vector<int>& sizes, const SolveConfig& cfg = {},
                        std::vector<std::pair<Row, GameValue>>* evaluations = nullptr) {
    auto [lo, hi] = default_gamma_bounds(sizes);
    return paintability(sizes, lo, hi, cfg, evaluations);
}

}  // namespace chipgame
