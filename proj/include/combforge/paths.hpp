#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace combforge {

struct PathSearchResult {
    bool found = false;
    int index = -1;        // which pair was connected
    std::vector<int> path; // x_i .. y_i with exactly lengths[index] edges
    std::uint64_t attempts = 0;
};

// Connects some pair (x_i, y_i) by a path of exactly lengths[i] edges whose
// internal vertices lie in U. Randomized DFS with distance pruning: a vertex
// is entered only if y_i is still reachable within the remaining edge budget
// (exactness of the length is then up to the search, not the pruning).
// Round-robin over pairs, 50 * k_i attempts per pair; completeness is not
// attempted, callers retry with fresh randomness per the surrounding
// constructions.
inline PathSearchResult find_path_of_length(const Graph& g,
                                            const std::vector<std::pair<int, int>>& pairs,
                                            const std::vector<int>& u_set,
                                            const std::vector<int>& lengths, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (pairs.empty() || pairs.size() != lengths.size())
        throw std::invalid_argument("find_path_of_length: pairs/lengths mismatch");
    std::vector<char> in_u(n, 0), is_end(n, 0);
    for (int v : u_set) {
        if (v < 0 || v >= n || in_u[v]) throw std::invalid_argument("find_path_of_length: bad U");
        in_u[v] = 1;
    }
    for (auto [x, y] : pairs) {
        for (int e : {x, y}) {
            if (e < 0 || e >= n || in_u[e] || is_end[e])
                throw std::invalid_argument("find_path_of_length: pairs must be disjoint from U and each other");
            is_end[e] = 1;
        }
    }
    for (int k : lengths)
        if (k < 1) throw std::invalid_argument("find_path_of_length: lengths must be >= 1");

    Rng rng(seed);
    PathSearchResult res;
    const int m = static_cast<int>(pairs.size());
    std::vector<std::uint64_t> budget(m);
    for (int i = 0; i < m; ++i) budget[i] = 50ULL * lengths[i];

    // Per-pair BFS distances to y_i over U (plus the endpoints).
    std::vector<std::vector<int>> dist(m);
    for (int i = 0; i < m; ++i) {
        auto& d = dist[i];
        d.assign(n, -1);
        std::vector<int> queue{pairs[i].second};
        d[pairs[i].second] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int w : g.neighbors(queue[h]))
                if (d[w] == -1 && (in_u[w] || w == pairs[i].first)) {
                    d[w] = d[queue[h]] + 1;
                    queue.push_back(w);
                }
    }

    std::vector<int> stamp(n, 0);
    int epoch = 0;
    std::vector<int> path, cand;
    bool any_left = true;
    while (any_left) {
        any_left = false;
        for (int i = 0; i < m; ++i) {
            if (budget[i] == 0) continue;
            any_left = true;
            --budget[i];
            ++res.attempts;
            const auto [x, y] = pairs[i];
            const int k = lengths[i];
            if (dist[i][x] == -1 || dist[i][x] > k) {
                budget[i] = 0;
                continue;
            }
            ++epoch;
            path.assign(1, x);
            stamp[x] = epoch;
            std::uint64_t expansions = 8ULL * k + 32;
            // Depth-first with random child order; gives up when the attempt's
            // expansion allowance runs out.
            std::vector<std::vector<int>> frontier(1);
            {
                auto& f = frontier.back();
                for (int w : g.neighbors(x))
                    if ((in_u[w] || (w == y && k == 1)) && dist[i][w] != -1 && dist[i][w] <= k - 1)
                        f.push_back(w);
                rng.shuffle(f);
            }
            while (!frontier.empty() && expansions > 0) {
                auto& f = frontier.back();
                if (f.empty()) {
                    frontier.pop_back();
                    stamp[path.back()] = 0;
                    path.pop_back();
                    continue;
                }
                const int v = f.back();
                f.pop_back();
                if (stamp[v] == epoch) continue;
                --expansions;
                const int used = static_cast<int>(path.size()); // edges after stepping to v
                if (v == y) {
                    if (used == k) {
                        path.push_back(v);
                        res.found = true;
                        res.index = i;
                        res.path = path;
                        return res;
                    }
                    continue;
                }
                path.push_back(v);
                stamp[v] = epoch;
                const int remaining = k - used;
                frontier.emplace_back();
                auto& nf = frontier.back();
                for (int w : g.neighbors(v)) {
                    if (w == y) {
                        if (remaining == 1) nf.push_back(w);
                        continue;
                    }
                    if (in_u[w] && stamp[w] != epoch && dist[i][w] != -1 && dist[i][w] <= remaining - 1)
                        nf.push_back(w);
                }
                rng.shuffle(nf);
            }
            for (std::size_t j = 1; j < path.size(); ++j) stamp[path[j]] = 0;
        }
    }
    return res;
}

// Checks that p is a path in g: distinct vertices, consecutive edges.
inline bool is_path_of(const Graph& g, const std::vector<int>& p) {
    if (p.empty()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : p) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

} // namespace combforge
