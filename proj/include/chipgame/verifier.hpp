#pragma once

// Independent closure verification. Checks the self-supporting property of a
// claimed winning or losing closure directly from the game rules and the
// domination order, without trusting anything the solver did. Pusher moves
// are enumerated with the symmetry reductions of move generation only; the
// dominance filter for identical columns is deliberately not applied here.

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "chipgame/closure_file.hpp"
#include "chipgame/core.hpp"
#include "chipgame/moves.hpp"
#include "chipgame/order.hpp"

namespace chipgame {

struct VerifyOptions {
    bool scan_all = false;  // keep checking after the first bad state
    int threads = 1;
};

struct VerifyFailure {
    Board state;
    std::string reason;
    std::optional<PusherMove> unanswered_move;  // losing verification only
};

struct VerifyReport {
    bool ok = true;
    std::vector<VerifyFailure> failures;

    const VerifyFailure& first() const { return failures.front(); }
};

namespace detail {

// Membership index over the closure's states: exact key lookup plus a
// signature-filtered domination scan.
class MemberIndex {
public:
    MemberIndex(const ClosureFile& file) : threshold_(file.spec.threshold) {
        pad_ = 0;
        for (int n : file.spec.sizes) pad_ = std::max(pad_, n);
        for (const auto& board : file.states) {
            keys_.insert(encode_board(board));
            members_.push_back({board, board_signature(board, pad_)});
        }
    }

    /// Board is at or above some member of the set.
    bool dominates_member(const Board& board) const {
        if (keys_.count(encode_board(board))) return true;
        std::vector<Row> sig = board_signature(board, pad_);
        for (const auto& m : members_)
            if (signature_geq(sig, m.signature) && board_geq(board, m.board)) return true;
        return false;
    }

    /// Board is at or below some member of the set.
    bool dominated_by_member(const Board& board) const {
        if (keys_.count(encode_board(board))) return true;
        std::vector<Row> sig = board_signature(board, pad_);
        for (const auto& m : members_)
            if (signature_geq(m.signature, sig) && board_geq(m.board, board)) return true;
        return false;
    }

    Row threshold() const { return threshold_; }

private:
    struct Member {
        Board board;
        std::vector<Row> signature;
    };
    Row threshold_;
    int pad_;
    std::unordered_set<std::string> keys_;
    std::vector<Member> members_;
};

template <typename CheckState>
VerifyReport scan_states(const ClosureFile& file, const VerifyOptions& options, CheckState check) {
    VerifyReport report;
    const std::size_t count = file.states.size();
    if (options.threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            if (auto failure = check(file.states[i])) {
                report.ok = false;
                report.failures.push_back(std::move(*failure));
                if (!options.scan_all) break;
            }
        }
        return report;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{count};
    std::map<std::size_t, VerifyFailure> failures;
    std::mutex failures_mutex;
    std::vector<std::thread> workers;
    for (int t = 0; t < options.threads; ++t) {
        workers.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                if (!options.scan_all && i > first_bad.load()) continue;
                if (auto failure = check(file.states[i])) {
                    std::size_t prev = first_bad.load();
                    while (i < prev && !first_bad.compare_exchange_weak(prev, i)) {
                    }
                    std::scoped_lock lock(failures_mutex);
                    failures.emplace(i, std::move(*failure));
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (!failures.empty()) {
        report.ok = false;
        if (options.scan_all) {
            for (auto& [i, f] : failures) report.failures.push_back(std::move(f));
        } else {
            report.failures.push_back(std::move(failures.begin()->second));
        }
    }
    return report;
}

}  // namespace detail

/// A set is a winning closure when every member either already has a chip at
/// or above the threshold, or has a Pusher move for which every Remover
/// response lands at or above some member.
inline VerifyReport verify_winning(const ClosureFile& file, const VerifyOptions& options = {}) {
    if (file.kind != ClosureKind::Winning)
        throw std::invalid_argument("verify_winning: closure file is not marked winning");
    detail::MemberIndex index(file);

    auto check = [&](const Board& board) -> std::optional<VerifyFailure> {
        if (board.max_row() >= index.threshold()) return std::nullopt;
        GameState state{file.spec, board, Player::Pusher, std::nullopt};
        std::vector<PusherMove> moves = legal_pusher_moves(state);
        for (const auto& move : moves) {
            GameState rstate = apply_pusher(state, move);
            bool all_covered = true;
            for (const auto& [rmove, child] : remover_children(rstate)) {
                if (child.board.max_row() >= index.threshold()) continue;
                if (!index.dominates_member(child.board)) {
                    all_covered = false;
                    break;
                }
            }
            if (all_covered) return std::nullopt;
        }
        return VerifyFailure{board,
                             moves.empty()
                                 ? "no legal Pusher move (board has no chips)"
                                 : "no Pusher move keeps every Remover response at or above the set",
                             std::nullopt};
    };
    return detail::scan_states(file, options, check);
}

/// A set is a losing closure when no member has a chip at or above the
/// threshold and every member is either empty or, for every Pusher move, has
/// a Remover response landing at or below some member.
inline VerifyReport verify_losing(const ClosureFile& file, const VerifyOptions& options = {}) {
    if (file.kind != ClosureKind::Losing)
        throw std::invalid_argument("verify_losing: closure file is not marked losing");
    detail::MemberIndex index(file);

    auto check = [&](const Board& board) -> std::optional<VerifyFailure> {
        if (board.max_row() >= index.threshold())
            return VerifyFailure{board, "contains a chip at or above the threshold", std::nullopt};
        if (board.live_chips() == 0) return std::nullopt;
        GameState state{file.spec, board, Player::Pusher, std::nullopt};
        for (const auto& move : legal_pusher_moves(state)) {
            GameState rstate = apply_pusher(state, move);
            bool answered = false;
            for (const auto& [rmove, child] : remover_children(rstate)) {
                if (child.board.live_chips() == 0 || index.dominated_by_member(child.board)) {
                    answered = true;
                    break;
                }
            }
            if (!answered)
                return VerifyFailure{
                    board, "a Pusher move has no Remover response at or below the set", move};
        }
        return std::nullopt;
    };
    return detail::scan_states(file, options, check);
}

inline VerifyReport verify(const ClosureFile& file, const VerifyOptions& options = {}) {
    return file.kind == ClosureKind::Winning ? verify_winning(file, options)
                                             : verify_losing(file, options);
}

}  // namespace chipgame
