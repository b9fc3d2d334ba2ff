#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace combforge {

namespace detail {

struct BipartiteResult {
    std::vector<int> match_left;  // per left vertex, matched right vertex or -1
    std::vector<int> match_right; // per right vertex, matched left vertex or -1
    std::vector<int> violator;    // left set with |N(S)| < |S|; empty if left-perfect
};

// Maximum bipartite matching by BFS augmenting paths, processing left
// vertices in ascending order (deterministic matchings). If some left vertex
// ends unmatched, the left vertices reachable by alternating paths from the
// unmatched ones form a maximum-deficiency Hall violator.
inline BipartiteResult bipartite_max_matching(int n_left, int n_right,
                                              const std::vector<std::vector<int>>& adj) {
    BipartiteResult res;
    res.match_left.assign(n_left, -1);
    res.match_right.assign(n_right, -1);
    std::vector<int> via(n_right);
    for (int s = 0; s < n_left; ++s) {
        std::fill(via.begin(), via.end(), -1);
        std::vector<int> queue{s};
        int free_right = -1;
        for (std::size_t h = 0; h < queue.size() && free_right == -1; ++h) {
            for (int r : adj[queue[h]]) {
                if (via[r] != -1) continue;
                via[r] = queue[h];
                if (res.match_right[r] == -1) {
                    free_right = r;
                    break;
                }
                queue.push_back(res.match_right[r]);
            }
        }
        if (free_right == -1) continue;
        for (int r = free_right; r != -1;) {
            const int l = via[r];
            const int next = res.match_left[l];
            res.match_left[l] = r;
            res.match_right[r] = l;
            r = next;
        }
    }
    std::vector<char> seen_l(n_left, 0), seen_r(n_right, 0);
    std::vector<int> queue;
    for (int l = 0; l < n_left; ++l)
        if (res.match_left[l] == -1) {
            seen_l[l] = 1;
            queue.push_back(l);
        }
    if (queue.empty()) return res;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int r : adj[queue[h]])
            if (!seen_r[r]) {
                seen_r[r] = 1;
                const int l = res.match_right[r]; // matched, else the matching weren't maximum
                if (l != -1 && !seen_l[l]) {
                    seen_l[l] = 1;
                    queue.push_back(l);
                }
            }
    for (int l = 0; l < n_left; ++l)
        if (seen_l[l]) res.violator.push_back(l);
    return res;
}

} // namespace detail

// Graph on two families of vertex sets of a base graph; (i,j) is an edge iff
// some base edge runs between left[i] and right[j]. A left set may coincide
// with or overlap a right set when the caller flags it; base edges lying
// entirely inside such an overlap do not count.
struct GroupedGraph {
    const Graph* base = nullptr;
    std::vector<std::vector<int>> left, right; // sorted vertex sets
    std::vector<std::vector<int>> adj;         // per left index, sorted right indices

    bool has_edge(int i, int j) const {
        return std::binary_search(adj[i].begin(), adj[i].end(), j);
    }

    // A base edge realizing grouped edge (i,j): lexicographically first
    // (u, v) with u in left[i], v in right[j].
    std::pair<int, int> witness(int i, int j) const {
        for (int u : left[i])
            for (int v : right[j])
                if (u != v && base->has_edge(u, v)) {
                    const bool u_both = std::binary_search(right[j].begin(), right[j].end(), u);
                    const bool v_both = std::binary_search(left[i].begin(), left[i].end(), v);
                    if (u_both && v_both) continue;
                    return {u, v};
                }
        throw std::logic_error("GroupedGraph::witness: no base edge for grouped edge");
    }
};

inline GroupedGraph grouped_graph(const Graph& g, std::vector<std::vector<int>> left,
                                  std::vector<std::vector<int>> right, bool allow_overlap = false) {
    const int n = g.vertex_count();
    GroupedGraph h;
    h.base = &g;
    auto check_family = [&](std::vector<std::vector<int>>& fam, std::vector<int>& of, const char* side) {
        of.assign(n, -1);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            auto& set = fam[i];
            if (set.empty()) throw std::invalid_argument(std::string("grouped_graph: empty set in ") + side);
            std::sort(set.begin(), set.end());
            for (int v : set) {
                if (v < 0 || v >= n) throw std::invalid_argument(std::string("grouped_graph: vertex out of range in ") + side);
                if (of[v] != -1) throw std::invalid_argument(std::string("grouped_graph: sets overlap inside ") + side);
                of[v] = static_cast<int>(i);
            }
        }
    };
    std::vector<int> left_of, right_of;
    check_family(left, left_of, "left family");
    check_family(right, right_of, "right family");
    if (!allow_overlap) {
        for (int v = 0; v < n; ++v)
            if (left_of[v] != -1 && right_of[v] != -1)
                throw std::invalid_argument("grouped_graph: left/right overlap without the overlap flag");
    }
    h.adj.assign(left.size(), {});
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (int u : left[i])
            for (int w : g.neighbors(u)) {
                const int j = right_of[w];
                if (j == -1) continue;
                // Both endpoints inside the overlap of left[i] and right[j]:
                // not an edge between the classes.
                if (right_of[u] == j && left_of[w] == static_cast<int>(i)) continue;
                h.adj[i].push_back(j);
            }
        auto& a = h.adj[i];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    h.left = std::move(left);
    h.right = std::move(right);
    return h;
}

struct Matching {
    std::vector<int> match_left; // per left index, right index or -1
    std::vector<int> violator;   // left indices with |N(violator)| < |violator|; empty if left-perfect
    int size = 0;
};

inline Matching max_matching(const GroupedGraph& h) {
    auto res = detail::bipartite_max_matching(static_cast<int>(h.left.size()),
                                              static_cast<int>(h.right.size()), h.adj);
    Matching m;
    m.match_left = std::move(res.match_left);
    m.violator = std::move(res.violator);
    for (int r : m.match_left) m.size += r != -1;
    return m;
}

struct DMatching {
    std::vector<std::vector<int>> sets; // per A index, its d private B-neighbors, sorted
    std::vector<int> violator;          // A-vertices whose cloned demand violates Hall; empty on success
};

// d private B-neighbors for every a in A, pairwise disjoint across A.
// Realized by cloning each a d times in a bipartite instance against the
// vertices of B.
inline DMatching d_matching(const Graph& g, const std::vector<int>& a_set,
                            const std::vector<int>& b_set, int d) {
    if (d < 1) throw std::invalid_argument("d_matching: need d >= 1");
    const int n = g.vertex_count();
    std::vector<int> b_index(n, -1);
    for (std::size_t j = 0; j < b_set.size(); ++j) {
        const int v = b_set[j];
        if (v < 0 || v >= n || b_index[v] != -1) throw std::invalid_argument("d_matching: bad B");
        b_index[v] = static_cast<int>(j);
    }
    for (int v : a_set)
        if (v < 0 || v >= n || b_index[v] != -1) throw std::invalid_argument("d_matching: A must be disjoint from B");

    const int na = static_cast<int>(a_set.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(na) * d);
    for (int i = 0; i < na; ++i) {
        std::vector<int> nbrs;
        for (int w : g.neighbors(a_set[i]))
            if (b_index[w] != -1) nbrs.push_back(b_index[w]);
        std::sort(nbrs.begin(), nbrs.end());
        for (int c = 0; c < d; ++c) adj[static_cast<std::size_t>(i) * d + c] = nbrs;
    }
    auto res = detail::bipartite_max_matching(na * d, static_cast<int>(b_set.size()), adj);
    DMatching out;
    if (!res.violator.empty()) {
        for (int clone : res.violator) out.violator.push_back(a_set[clone / d]);
        std::sort(out.violator.begin(), out.violator.end());
        out.violator.erase(std::unique(out.violator.begin(), out.violator.end()), out.violator.end());
        return out;
    }
    out.sets.assign(na, {});
    for (int i = 0; i < na; ++i) {
        for (int c = 0; c < d; ++c) out.sets[i].push_back(b_set[res.match_left[static_cast<std::size_t>(i) * d + c]]);
        std::sort(out.sets[i].begin(), out.sets[i].end());
    }
    return out;
}

} // namespace combforge
