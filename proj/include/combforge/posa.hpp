#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace combforge {

struct PosaResult {
    bool found = false;
    std::vector<int> cycle; // n distinct vertices; consecutive and wrap edges exist
    std::uint64_t rotations = 0;
    int restarts_used = 0;
};

inline bool is_cycle_of(const Graph& g, const std::vector<int>& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.size()) != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : c) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(c[i], c[(i + 1) % n])) return false;
    return true;
}

// Pósa-style rotation-extension heuristic. Grows a path by random extension;
// when stuck, either absorbs the path through a closing edge (re-rooting the
// cycle at a vertex with an outside neighbour) or performs a random rotation
// at the head. The expander hypothesis of the surrounding constructions makes
// this succeed with high probability; the cycle is validated before return.
inline PosaResult posa_hamilton_cycle(const Graph& g, std::uint64_t seed, int restarts = 12,
                                      std::uint64_t rotation_budget = 0) {
    const int n = g.vertex_count();
    PosaResult res;
    if (n < 3) return res;
    if (rotation_budget == 0) rotation_budget = 400ULL * n;
    Rng rng(seed);
    std::vector<char> in_path(n, 0);
    std::vector<int> path, cand;
    for (int attempt = 0; attempt < restarts; ++attempt) {
        res.restarts_used = attempt + 1;
        std::fill(in_path.begin(), in_path.end(), 0);
        path.assign(1, rng.below_int(n));
        in_path[path[0]] = 1;
        std::uint64_t left = rotation_budget;
        std::uint64_t stale = 0; // rotations since the path last grew
        while (left > 0) {
            const int h = path.back();
            cand.clear();
            for (int w : g.neighbors(h))
                if (!in_path[w]) cand.push_back(w);
            if (!cand.empty()) {
                const int w = cand[rng.below_int(static_cast<int>(cand.size()))];
                path.push_back(w);
                in_path[w] = 1;
                stale = 0;
                continue;
            }
            if (static_cast<int>(path.size()) == n && g.has_edge(h, path.front())) {
                res.found = true;
                res.cycle = path;
                res.rotations += rotation_budget - left;
                if (!is_cycle_of(g, res.cycle)) throw std::logic_error("posa_hamilton_cycle: invalid cycle");
                return res;
            }
            --left;
            ++res.rotations;
            if (++stale > 4ULL * static_cast<std::uint64_t>(n) + 64) break; // restart; rotations stopped helping
            // Absorb through a closing edge: re-root the would-be cycle at a
            // vertex whose successor has an outside neighbour.
            if (g.has_edge(h, path.front()) && static_cast<int>(path.size()) < n) {
                int cut = -1;
                for (std::size_t i = 0; i < path.size(); ++i) {
                    bool outside = false;
                    for (int w : g.neighbors(path[i]))
                        if (!in_path[w]) {
                            outside = true;
                            break;
                        }
                    if (outside) {
                        cut = static_cast<int>(i);
                        break;
                    }
                }
                if (cut == -1) break; // the component of the path is exhausted; restart
                // Close the cycle and break it so path[cut] becomes the head.
                std::rotate(path.begin(), path.begin() + cut + 1, path.end());
                stale = 0;
                continue;
            }
            // Random rotation: pick a path neighbour of the head, reverse the
            // tail beyond it.
            cand.clear();
            for (int w : g.neighbors(h)) cand.push_back(w);
            if (cand.empty()) break;
            const int pivot = cand[rng.below_int(static_cast<int>(cand.size()))];
            int pos = -1;
            for (std::size_t i = 0; i + 2 < path.size(); ++i)
                if (path[i] == pivot) {
                    pos = static_cast<int>(i);
                    break;
                }
            if (pos == -1) continue;
            std::reverse(path.begin() + pos + 1, path.end());
        }
    }
    return res;
}

} // namespace combforge
