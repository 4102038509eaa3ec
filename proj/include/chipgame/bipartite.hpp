#pragma once

// Hopcroft-Karp maximum matching on a bipartite graph, O(E * sqrt(V)).
// Used by the board domination test, which reduces "B >= B'" to a perfect
// matching question on a helper graph.

#include <limits>
#include <vector>

namespace chipgame {

class BipartiteMatcher {
public:
    BipartiteMatcher(int left_count, int right_count)
        : left_(left_count), right_(right_count), adj_(left_count) {}

    void add_edge(int u, int v) { adj_[u].push_back(v); }

    /// Size of a maximum matching.
    int max_matching() {
        match_left_.assign(left_, kFree);
        match_right_.assign(right_, kFree);
        int matched = 0;
        while (bfs_layers()) {
            for (int u = 0; u < left_; ++u)
                if (match_left_[u] == kFree && augment(u)) ++matched;
        }
        return matched;
    }

    bool has_perfect_matching() {
        return left_ == right_ && max_matching() == left_;
    }

private:
    static constexpr int kFree = -1;
    static constexpr int kInf = std::numeric_limits<int>::max();

    // Layers free left vertices at distance 0 and alternates matched/unmatched
    // edges; returns whether any augmenting path exists.
    bool bfs_layers() {
        dist_.assign(left_, kInf);
        queue_.clear();
        for (int u = 0; u < left_; ++u) {
            if (match_left_[u] == kFree) {
                dist_[u] = 0;
                queue_.push_back(u);
            }
        }
        bool reachable_free = false;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            int u = queue_[head];
            for (int v : adj_[u]) {
                int w = match_right_[v];
                if (w == kFree) {
                    reachable_free = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    queue_.push_back(w);
                }
            }
        }
        return reachable_free;
    }

    bool augment(int u) {
        for (int v : adj_[u]) {
            int w = match_right_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && augment(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    int left_;
    int right_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> dist_;
    std::vector<int> queue_;
};

}  // namespace chipgame
