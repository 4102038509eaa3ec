#pragma once

// The symmetric chip game: chips carry labels 1..n, one chip per label in
// each of r columns, and the Pusher must push the same label set in every
// column. Winning it is equivalent to the Presenter winning the online
// panchromatic r-coloring game on a k-uniform hypergraph with n edges; the
// adapter at the bottom runs both games in lockstep through that translation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chipgame/core.hpp"

namespace chipgame {

/// One label's chips: all live chips of a label sit in the same row, since
/// the label is pushed in every column at once. `alive` is a bitmask over the
/// r columns; a zero mask means the label is gone.
struct LabelChips {
    Row row = 0;
    std::uint32_t alive = 0;
    bool operator==(const LabelChips&) const = default;
};

/// Indexed by label; dead labels keep their slot so that identities stay
/// stable for the hypergraph correspondence.
using SymmetricPosition = std::vector<LabelChips>;

inline SymmetricPosition symmetric_initial_position(int n, int r) {
    return SymmetricPosition(static_cast<std::size_t>(n),
                             LabelChips{0, (std::uint32_t{1} << r) - 1});
}

class SymmetricBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SymmetricSolver {
public:
    SymmetricSolver(int k, int n, int r, std::uint64_t max_nodes = 50'000'000)
        : k_(k), n_(n), r_(r), max_nodes_(max_nodes) {
        if (k < 1 || n < 1 || r < 1)
            throw std::invalid_argument("symmetric game: need k, n, r >= 1");
        if (r > 6)
            throw std::invalid_argument("symmetric game: column count too large for exact search");
        build_permutations();
    }

    GameValue evaluate() { return value(symmetric_initial_position(n_, r_)); }

    /// Value with Pusher to move.
    GameValue value(const SymmetricPosition& position) {
        bool any_alive = false;
        for (const auto& label : position) {
            if (label.alive) {
                any_alive = true;
                if (label.row >= k_) return GameValue::PusherWins;
            }
        }
        if (!any_alive) return GameValue::RemoverWins;

        const std::string key = canonical_key(position);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++nodes_ > max_nodes_)
            throw SymmetricBudgetError("symmetric game: node budget exhausted");

        GameValue result = GameValue::RemoverWins;
        for_each_push(position, [&](const std::vector<int>& labels) {
            if (result == GameValue::PusherWins) return;
            if (remover_has_no_escape(position, labels)) result = GameValue::PusherWins;
        });
        memo_.emplace(key, result);
        return result;
    }

    /// A label set whose push wins against every removal, if one exists.
    std::optional<std::vector<int>> winning_push(const SymmetricPosition& position) {
        std::optional<std::vector<int>> found;
        for_each_push(position, [&](const std::vector<int>& labels) {
            if (!found && remover_has_no_escape(position, labels)) found = labels;
        });
        return found;
    }

    /// A column whose removal keeps Pusher losing, if one exists.
    std::optional<int> refuting_removal(const SymmetricPosition& position,
                                        const std::vector<int>& pushed) {
        for (int c = 0; c < r_; ++c)
            if (value(apply_symmetric_round(position, pushed, c)) == GameValue::RemoverWins)
                return c;
        return std::nullopt;
    }

    static SymmetricPosition apply_symmetric_round(const SymmetricPosition& position,
                                                   const std::vector<int>& pushed, int column) {
        SymmetricPosition next = position;
        for (int label : pushed) {
            next[label].row += 1;
            next[label].alive &= ~(std::uint32_t{1} << column);
        }
        return next;
    }

private:
    void build_permutations() {
        std::vector<int> perm(r_);
        for (int i = 0; i < r_; ++i) perm[i] = i;
        do {
            permutations_.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm) const {
        std::uint32_t out = 0;
        for (int i = 0; i < r_; ++i)
            if (mask & (std::uint32_t{1} << i)) out |= std::uint32_t{1} << perm[i];
        return out;
    }

    // Live labels up to label interchangeability and column relabeling.
    std::string canonical_key(const SymmetricPosition& position) const {
        std::string best;
        std::vector<std::pair<Row, std::uint32_t>> transformed;
        for (const auto& perm : permutations_) {
            transformed.clear();
            for (const auto& label : position)
                if (label.alive) transformed.emplace_back(label.row, apply_perm(label.alive, perm));
            std::sort(transformed.begin(), transformed.end());
            std::string key;
            for (const auto& [row, mask] : transformed) {
                key += std::to_string(row);
                key += ':';
                key += std::to_string(mask);
                key += ',';
            }
            if (best.empty() || key < best) best = std::move(key);
        }
        return best;
    }

    // Enumerates pushes up to interchangeability of labels with equal
    // (row, alive) state: per group, how many of its labels to push.
    template <typename Visit>
    void for_each_push(const SymmetricPosition& position, Visit visit) {
        std::map<std::pair<Row, std::uint32_t>, std::vector<int>> groups;
        for (std::size_t i = 0; i < position.size(); ++i)
            if (position[i].alive)
                groups[{position[i].row, position[i].alive}].push_back(static_cast<int>(i));

        std::vector<const std::vector<int>*> group_labels;
        for (const auto& [state, labels] : groups) group_labels.push_back(&labels);

        std::vector<int> selected;
        auto recurse = [&](auto&& self, std::size_t g) -> void {
            if (g == group_labels.size()) {
                if (!selected.empty()) visit(selected);
                return;
            }
            self(self, g + 1);  // take none from this group
            std::size_t added = 0;
            for (std::size_t t = 0; t < group_labels[g]->size(); ++t) {
                selected.push_back((*group_labels[g])[t]);
                ++added;
                self(self, g + 1);
            }
            while (added--) selected.pop_back();
        };
        recurse(recurse, 0);
    }

    bool remover_has_no_escape(const SymmetricPosition& position, const std::vector<int>& pushed) {
        for (int c = 0; c < r_; ++c)
            if (value(apply_symmetric_round(position, pushed, c)) == GameValue::RemoverWins)
                return false;
        return true;
    }

    int k_;
    int n_;
    int r_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<int>> permutations_;
    std::unordered_map<std::string, GameValue> memo_;
};

/// Exact value of the symmetric (k, n*r) chip game.
inline GameValue symmetric_evaluate(int k, int n, int r, std::uint64_t max_nodes = 50'000'000) {
    return SymmetricSolver(k, n, r, max_nodes).evaluate();
}

// ---------------------------------------------------------------------------
// Online panchromatic coloring, run in lockstep with the symmetric chip game.

/// Returns the label set to push. Receives the current position.
using SymmetricPusherStrategy = std::function<std::vector<int>(const SymmetricPosition&)>;

/// Returns the column to remove. Receives the position after the push and the
/// pushed label set.
using SymmetricRemoverStrategy =
    std::function<int(const SymmetricPosition&, const std::vector<int>& pushed)>;

enum class PancolorWinner { Presenter, Colorer };

struct PancolorRound {
    std::vector<int> presented_edges;  // hyperedges of the new vertex = pushed labels
    int color = 0;                     // Colorer's color = removed column
    std::string line;
};

struct PancolorTranscript {
    std::vector<PancolorRound> rounds;
    std::optional<PancolorWinner> winner;
    bool correspondence_ok = true;
    std::string diagnosis;

    std::string text() const {
        std::string out;
        for (const auto& r : rounds) {
            out += r.line;
            out += '\n';
        }
        if (!diagnosis.empty()) {
            out += diagnosis;
            out += '\n';
        }
        return out;
    }
};

/// Plays the online panchromatic r-coloring game on a k-uniform hypergraph
/// with n edges, with the Presenter driven by a symmetric-chip-game Pusher
/// strategy and the Colorer by a Remover strategy. Each presented vertex is
/// the pushed label set; each color is the removed column. The round-by-round
/// correspondence (chip alive in column i at row t, iff its edge lacks color
/// i and has been presented t times) is asserted every round.
inline PancolorTranscript play_pancoloring_game(int k, int n, int r,
                                                const SymmetricPusherStrategy& pusher,
                                                const SymmetricRemoverStrategy& remover) {
    PancolorTranscript transcript;
    SymmetricPosition position = symmetric_initial_position(n, r);
    std::vector<int> presented_count(n, 0);            // vertices per hyperedge
    std::vector<std::uint32_t> edge_colors(n, 0);      // colors present per hyperedge

    auto fail = [&](std::string why) {
        transcript.correspondence_ok = false;
        transcript.diagnosis = std::move(why);
        return transcript;
    };

    const int max_rounds = k * n * r + 1;
    for (int round = 1; round <= max_rounds; ++round) {
        std::vector<int> pushed = pusher(position);
        std::sort(pushed.begin(), pushed.end());
        if (pushed.empty())
            return fail("round " + std::to_string(round) + ": Pusher strategy pushed nothing");
        for (std::size_t i = 0; i < pushed.size(); ++i) {
            int label = pushed[i];
            if (label < 0 || label >= n || !position[label].alive)
                return fail("round " + std::to_string(round) +
                            ": Pusher strategy pushed a dead or unknown label");
            if (i > 0 && pushed[i] == pushed[i - 1])
                return fail("round " + std::to_string(round) +
                            ": Pusher strategy pushed a label twice");
            if (presented_count[label] >= k)
                return fail("round " + std::to_string(round) +
                            ": Presenter added a vertex to a full hyperedge");
        }

        // Presenter introduces one vertex, a member of every pushed edge.
        for (int label : pushed) presented_count[label] += 1;

        SymmetricPosition after_push = position;
        for (int label : pushed) after_push[label].row += 1;

        int color = remover(after_push, pushed);
        if (color < 0 || color >= r)
            return fail("round " + std::to_string(round) +
                        ": Remover strategy chose an invalid column");
        for (int label : pushed) edge_colors[label] |= std::uint32_t{1} << color;
        position = SymmetricSolver::apply_symmetric_round(position, pushed, color);

        PancolorRound record;
        record.presented_edges = pushed;
        record.color = color;
        record.line = "round " + std::to_string(round) + ": vertex in edges {";
        for (std::size_t i = 0; i < pushed.size(); ++i) {
            if (i) record.line += ',';
            record.line += std::to_string(pushed[i] + 1);
        }
        record.line += "} colored " + std::to_string(color + 1);
        transcript.rounds.push_back(std::move(record));

        // Both game states must tell the same story.
        for (int label = 0; label < n; ++label) {
            for (int c = 0; c < r; ++c) {
                const bool chip_alive = position[label].alive & (std::uint32_t{1} << c);
                const bool color_missing = !(edge_colors[label] & (std::uint32_t{1} << c));
                if (chip_alive != color_missing)
                    return fail("round " + std::to_string(round) +
                                ": chip/color correspondence broke for edge " +
                                std::to_string(label + 1));
            }
            if (position[label].alive && position[label].row != presented_count[label])
                return fail("round " + std::to_string(round) +
                            ": chip row disagrees with presentation count for edge " +
                            std::to_string(label + 1));
        }

        bool pusher_won = false;
        bool any_alive = false;
        for (int label = 0; label < n; ++label) {
            if (position[label].alive) {
                any_alive = true;
                if (position[label].row >= k) pusher_won = true;
            }
        }
        if (pusher_won) {
            // A full hyperedge is missing a color.
            transcript.winner = PancolorWinner::Presenter;
            return transcript;
        }
        if (!any_alive) {
            // Every hyperedge carries every color: the coloring is panchromatic.
            transcript.winner = PancolorWinner::Colorer;
            return transcript;
        }
    }
    return fail("game exceeded its round bound");
}

/// Pusher strategy backed by the exact solver: plays a winning push while one
/// exists, otherwise pushes everything alive.
inline SymmetricPusherStrategy optimal_pusher_strategy(int k, int n, int r,
                                                       std::uint64_t max_nodes = 50'000'000) {
    auto solver = std::make_shared<SymmetricSolver>(k, n, r, max_nodes);
    return [solver](const SymmetricPosition& position) {
        if (auto push = solver->winning_push(position)) return *push;
        std::vector<int> all;
        for (std::size_t i = 0; i < position.size(); ++i)
            if (position[i].alive) all.push_back(static_cast<int>(i));
        return all;
    };
}

/// Remover strategy backed by the exact solver: plays a refuting removal
/// while one exists, otherwise removes the column with the most pushed chips.
inline SymmetricRemoverStrategy optimal_remover_strategy(int k, int n, int r,
                                                         std::uint64_t max_nodes = 50'000'000) {
    auto solver = std::make_shared<SymmetricSolver>(k, n, r, max_nodes);
    return [solver, r](const SymmetricPosition& after_push, const std::vector<int>& pushed) {
        // The strategy sees the position after the push; undo it to query.
        SymmetricPosition before = after_push;
        for (int label : pushed) before[label].row -= 1;
        if (auto column = solver->refuting_removal(before, pushed)) return *column;
        std::vector<int> count(r, 0);
        for (int label : pushed)
            for (int c = 0; c < r; ++c)
                if (after_push[label].alive & (std::uint32_t{1} << c)) ++count[c];
        return static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    };
}

}  // namespace chipgame
