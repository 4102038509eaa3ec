#pragma once

// Brute-force solver for the on-line list coloring game (Lister vs Painter)
// on small complete multipartite graphs. This is a test oracle: it plays the
// vertex game directly and shares no machinery with the chip game solver.

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace chipgame {

struct MultipartiteGraph {
    std::vector<int> part_sizes;

    MultipartiteGraph() = default;
    explicit MultipartiteGraph(std::vector<int> sizes) : part_sizes(std::move(sizes)) {
        if (part_sizes.empty())
            throw std::invalid_argument("multipartite graph needs at least one part");
        for (int n : part_sizes)
            if (n < 1) throw std::invalid_argument("part sizes must be >= 1");
    }

    int parts() const { return static_cast<int>(part_sizes.size()); }
    int vertices() const {
        int t = 0;
        for (int n : part_sizes) t += n;
        return t;
    }
};

/// Position in the painting game. Painted vertices are dropped; what remains
/// is, per part, the multiset of times each unpainted vertex has been
/// presented. Vertices of a part with equal counts are interchangeable.
struct PaintState {
    std::vector<std::vector<int>> unpainted_counts;  // per part, ascending
    int threshold = 0;
};

namespace oracle_detail {

using Part = std::vector<int>;
using State = std::vector<Part>;

inline State canonical(State s) {
    for (auto& part : s) std::sort(part.begin(), part.end());
    std::erase_if(s, [](const Part& p) { return p.empty(); });
    std::sort(s.begin(), s.end());
    return s;
}

inline std::string key(const State& s) {
    std::string out;
    for (const auto& part : s) {
        for (int c : part) {
            out += std::to_string(c);
            out += ',';
        }
        out += '|';
    }
    return out;
}

// (count value, vertices with that count) runs for one part.
inline std::vector<std::pair<int, int>> groups(const Part& part) {
    std::vector<std::pair<int, int>> out;
    for (int c : part) {
        if (!out.empty() && out.back().first == c)
            ++out.back().second;
        else
            out.emplace_back(c, 1);
    }
    return out;
}

class Solver {
public:
    explicit Solver(int threshold) : r_(threshold) {}

    bool painter_wins(const State& canon) {
        if (canon.empty()) return true;
        auto it = memo_.find(key(canon));
        if (it != memo_.end()) return it->second;

        // Lister presents some of each count-group; takes[p][g] vertices from
        // group g of part p.
        std::vector<std::vector<std::pair<int, int>>> part_groups;
        for (const auto& part : canon) part_groups.push_back(groups(part));
        std::vector<std::vector<int>> takes(canon.size());
        for (std::size_t p = 0; p < canon.size(); ++p)
            takes[p].assign(part_groups[p].size(), 0);

        bool painter_ok = true;
        auto enumerate = [&](auto&& self, std::size_t p, std::size_t g, int presented) -> void {
            if (!painter_ok) return;
            if (p == canon.size()) {
                if (presented > 0 && !painter_answers(canon, part_groups, takes))
                    painter_ok = false;
                return;
            }
            if (g == part_groups[p].size()) {
                self(self, p + 1, 0, presented);
                return;
            }
            for (int t = 0; t <= part_groups[p][g].second; ++t) {
                takes[p][g] = t;
                self(self, p, g + 1, presented + t);
                if (!painter_ok) return;
            }
            takes[p][g] = 0;
        };
        enumerate(enumerate, 0, 0, 0);

        memo_.emplace(key(canon), painter_ok);
        return painter_ok;
    }

private:
    // Painter picks one part and paints everything presented there; painting
    // a smaller subset of that part is never better. Returns whether some
    // choice survives the end-of-round checks and wins the continuation.
    bool painter_answers(const State& state,
                         const std::vector<std::vector<std::pair<int, int>>>& part_groups,
                         const std::vector<std::vector<int>>& takes) {
        for (std::size_t paint = 0; paint < state.size(); ++paint) {
            bool any_presented = false;
            for (int t : takes[paint]) any_presented |= t > 0;
            if (!any_presented) continue;

            State next;
            bool lister_hit = false;
            for (std::size_t p = 0; p < state.size() && !lister_hit; ++p) {
                Part out;
                for (std::size_t g = 0; g < part_groups[p].size(); ++g) {
                    const auto [value, size] = part_groups[p][g];
                    const int taken = takes[p][g];
                    for (int i = 0; i < size - taken; ++i) out.push_back(value);
                    if (p != paint) {
                        if (taken > 0 && value + 1 >= r_) {
                            lister_hit = true;
                            break;
                        }
                        for (int i = 0; i < taken; ++i) out.push_back(value + 1);
                    }
                }
                if (!out.empty()) next.push_back(std::move(out));
            }
            if (lister_hit) continue;  // an unpainted vertex reached the threshold
            if (painter_wins(canonical(std::move(next)))) return true;
        }
        return false;
    }

    int r_;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace oracle_detail

inline PaintState initial_paint_state(const MultipartiteGraph& graph, int r) {
    PaintState state;
    state.threshold = r;
    for (int n : graph.part_sizes)
        state.unpainted_counts.emplace_back(static_cast<std::size_t>(n), 0);
    return state;
}

/// Whether Painter wins from an arbitrary position. Refuses instances above
/// `max_vertices` (full minimax over Lister subsets).
inline bool painter_wins_from(const PaintState& state, int max_vertices = 7) {
    if (state.threshold < 1)
        throw std::invalid_argument("painter_wins: threshold must be >= 1");
    int vertices = 0;
    for (const auto& part : state.unpainted_counts) vertices += static_cast<int>(part.size());
    if (vertices > max_vertices)
        throw std::invalid_argument("painter_wins: instance too large (" +
                                    std::to_string(vertices) + " vertices, limit " +
                                    std::to_string(max_vertices) + ")");
    return oracle_detail::Solver(state.threshold)
        .painter_wins(oracle_detail::canonical(state.unpainted_counts));
}

/// Whether Painter has a winning strategy with threshold r.
inline bool painter_wins(const MultipartiteGraph& graph, int r, int max_vertices = 7) {
    return painter_wins_from(initial_paint_state(graph, r), max_vertices);
}

/// Smallest threshold at which Painter wins, searched upward from the part
/// count (the chromatic number of a complete multipartite graph).
inline int paintability_direct(const MultipartiteGraph& graph, int max_vertices = 7) {
    for (int r = graph.parts(); r <= graph.vertices(); ++r)
        if (painter_wins(graph, r, max_vertices)) return r;
    throw std::logic_error("paintability_direct: no threshold up to the vertex count worked");
}

}  // namespace chipgame
