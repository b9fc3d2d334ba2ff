#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace combforge {

// A validated tree. root is an optional distinguished vertex (used as the
// anchor by the embedding pipelines); -1 means unset.
struct Tree {
    Graph g;
    int root = -1;

    int n() const { return g.vertex_count(); }
};

inline bool is_tree_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || g.edge_count() != n - 1) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int w : g.neighbors(queue[h]))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return static_cast<int>(queue.size()) == n;
}

inline Tree tree_from_graph(Graph g, int root = -1) {
    if (!is_tree_graph(g)) throw std::invalid_argument("tree_from_graph: graph is not a tree");
    if (root < -1 || root >= g.vertex_count()) throw std::invalid_argument("tree_from_graph: root out of range");
    return Tree{std::move(g), root};
}

// Comb_{n,k}: spine path on n/k vertices, each carrying a pendant path of k-1
// further vertices. Canonical labels: spine 0..n/k-1; the column at spine
// vertex i occupies n/k + i(k-1) .. n/k + (i+1)(k-1) - 1, chained outward.
inline Tree make_comb(int n, int k) {
    if (k < 1) throw std::invalid_argument("make_comb: need k >= 1");
    if (n < 1 || n % k != 0) throw std::invalid_argument("make_comb: k must divide n");
    const int spine = n / k;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    if (k > 1) {
        for (int i = 0; i < spine; ++i) {
            const int base = spine + i * (k - 1);
            edges.emplace_back(i, base);
            for (int j = 0; j + 2 < k; ++j) edges.emplace_back(base + j, base + j + 1);
        }
    }
    return Tree{Graph::from_edges(n, std::move(edges)), 0};
}

struct BarePath {
    std::vector<int> verts; // leaf-first for teeth
    bool is_tooth = false;
};

// Teeth of edge count len: from each leaf, walk exactly len edges, requiring
// every vertex strictly between the leaf and the stopping point to have
// degree 2; the far endpoint may have any degree. A path both of whose ends
// are leaves is reported once, oriented from its smaller leaf. Ordered by
// leaf label. Teeth from different leaves may share a far endpoint; callers
// that need disjoint teeth filter greedily.
inline std::vector<BarePath> find_teeth(const Graph& t, int len) {
    if (len < 1) throw std::invalid_argument("find_teeth: need len >= 1");
    const int n = t.vertex_count();
    std::vector<BarePath> out;
    for (int leaf = 0; leaf < n; ++leaf) {
        if (t.degree(leaf) != 1) continue;
        std::vector<int> path{leaf};
        int prev = leaf, cur = t.neighbors(leaf)[0];
        bool ok = true;
        for (int step = 1; step < len; ++step) {
            if (t.degree(cur) != 2) {
                ok = false;
                break;
            }
            auto nb = t.neighbors(cur);
            const int next = nb[0] == prev ? nb[1] : nb[0];
            path.push_back(cur);
            prev = cur;
            cur = next;
        }
        if (!ok) continue;
        path.push_back(cur);
        if (t.degree(cur) == 1 && cur < leaf) continue; // mirror of a tooth reported earlier
        out.push_back(BarePath{std::move(path), true});
    }
    return out;
}

inline bool is_bare_path_of(const Graph& t, const std::vector<int>& p) {
    if (p.size() < 2) return false;
    std::vector<char> seen(t.vertex_count(), 0);
    for (int v : p) {
        if (v < 0 || v >= t.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!t.has_edge(p[i], p[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (t.degree(p[i]) != 2) return false;
    return true;
}

struct BarePathRemoval {
    Graph remaining;                        // original labels; dropped vertices are isolated
    std::vector<int> deleted;               // vertices isolated by the removal, sorted
    std::vector<std::vector<int>> attachments; // per path, its surviving endpoints in path order
};

// Removes each path's edges and drops the vertices that become isolated.
// Paths must be bare paths of t, pairwise disjoint except possibly at shared
// (non-interior) endpoints. Each removed path keeps at least one endpoint in
// the remaining forest; those endpoints are the re-insertion points, so
// adding the removed edges back reconstructs t label-for-label.
inline BarePathRemoval remove_bare_paths(const Graph& t, const std::vector<BarePath>& paths) {
    const int n = t.vertex_count();
    std::vector<char> interior_use(n, 0), endpoint_use(n, 0);
    std::vector<int> removed_deg(n, 0);
    std::vector<std::pair<int, int>> removed_edges;
    for (const auto& bp : paths) {
        const auto& p = bp.verts;
        if (!is_bare_path_of(t, p)) throw std::invalid_argument("remove_bare_paths: not a bare path of the tree");
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (interior_use[p[i]] || endpoint_use[p[i]])
                throw std::invalid_argument("remove_bare_paths: paths overlap at an interior vertex");
            interior_use[p[i]] = 1;
        }
        for (int e : {p.front(), p.back()}) {
            if (interior_use[e]) throw std::invalid_argument("remove_bare_paths: paths overlap at an interior vertex");
            endpoint_use[e] = 1;
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            removed_edges.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
            ++removed_deg[p[i]];
            ++removed_deg[p[i + 1]];
        }
    }
    std::sort(removed_edges.begin(), removed_edges.end());
    if (std::adjacent_find(removed_edges.begin(), removed_edges.end()) != removed_edges.end())
        throw std::invalid_argument("remove_bare_paths: paths overlap at an edge");

    BarePathRemoval out;
    for (int v = 0; v < n; ++v)
        if (removed_deg[v] == t.degree(v) && t.degree(v) > 0) out.deleted.push_back(v);
    std::vector<char> gone(n, 0);
    for (int v : out.deleted) gone[v] = 1;
    for (const auto& bp : paths) {
        std::vector<int> att;
        for (int e : {bp.verts.front(), bp.verts.back()})
            if (!gone[e]) att.push_back(e);
        if (att.empty()) throw std::invalid_argument("remove_bare_paths: path removal leaves no attachment vertex");
        out.attachments.push_back(std::move(att));
    }
    std::vector<std::pair<int, int>> keep;
    keep.reserve(t.edge_count() - removed_edges.size());
    for (auto e : t.edges())
        if (!std::binary_search(removed_edges.begin(), removed_edges.end(), e)) keep.push_back(e);
    out.remaining = Graph::from_edges(n, std::move(keep));
    return out;
}

// Random tree by seeded uniform attachment: vertex v joins a uniformly random
// earlier vertex with spare degree. Not the uniform distribution on labeled
// trees; a cheap seeded source of varied shapes for tests and experiments.
// max_deg = 0 means unbounded.
inline Tree make_random_tree(int n, std::uint64_t seed, int max_deg = 0) {
    if (n < 1) throw std::invalid_argument("make_random_tree: need n >= 1");
    if (max_deg < 0 || max_deg == 1) throw std::invalid_argument("make_random_tree: max_deg must be 0 or >= 2");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> deg(n, 0), eligible{0};
    for (int v = 1; v < n; ++v) {
        if (eligible.empty()) throw std::invalid_argument("make_random_tree: degree bound too tight");
        const int pick = rng.below_int(static_cast<int>(eligible.size()));
        const int u = eligible[pick];
        edges.emplace_back(std::min(u, v), std::max(u, v));
        if (++deg[u] == max_deg) {
            eligible[pick] = eligible.back();
            eligible.pop_back();
        }
        deg[v] = 1;
        if (max_deg == 0 || deg[v] < max_deg) eligible.push_back(v);
    }
    return Tree{Graph::from_edges(n, std::move(edges)), 0};
}

// Tree files reuse the graph format with the header tag "tree", which makes
// the reader validate connectivity and acyclicity.
inline void write_tree(std::ostream& os, const Tree& t) {
    os << t.g.vertex_count() << ' ' << t.g.edge_count() << " tree\n";
    for (auto [u, v] : t.g.edges()) os << u << ' ' << v << '\n';
}

inline Tree read_tree(std::istream& is) {
    std::string tag;
    Graph g = read_graph(is, &tag);
    if (!tag.empty() && tag != "tree") throw std::invalid_argument("format: unknown header tag '" + tag + "'");
    return tree_from_graph(std::move(g));
}

} // namespace combforge
