#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace combforge {

// Immutable simple graph on vertices 0..n-1. Edges are kept as a sorted list
// of (u,v) with u < v plus a CSR adjacency structure; both are built once at
// construction and never mutated, so graphs can be shared freely across
// threads.
class Graph {
public:
    Graph() = default;

    // Normalizes edge orientation to u < v, sorts, and rejects loops,
    // duplicates and out-of-range endpoints.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("graph: loop edge " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("graph: duplicate edge");
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.build_adjacency();
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }

    int degree(int v) const { return off_[v + 1] - off_[v]; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        if (degree(u) > degree(v)) std::swap(u, v);
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // Induced subgraph on `verts` with vertices relabeled 0..k-1 in the order
    // given; old_of_new receives the label map back into this graph.
    Graph induced(const std::vector<int>& verts, std::vector<int>* old_of_new = nullptr) const {
        std::vector<int> new_of_old(n_, -1);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
            int v = verts[i];
            if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
            if (new_of_old[v] != -1) throw std::invalid_argument("induced: duplicate vertex");
            new_of_old[v] = i;
        }
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : edges_)
            if (new_of_old[u] != -1 && new_of_old[v] != -1)
                es.emplace_back(new_of_old[u], new_of_old[v]);
        if (old_of_new) *old_of_new = verts;
        return from_edges(static_cast<int>(verts.size()), std::move(es));
    }

    // Per-vertex neighbor bitmasks; only valid for n <= 64. Used by the exact
    // small-n enumeration paths of the checkers.
    std::vector<std::uint64_t> neighbor_masks() const {
        if (n_ > 64) throw std::logic_error("neighbor_masks: n > 64");
        std::vector<std::uint64_t> m(n_, 0);
        for (auto [u, v] : edges_) {
            m[u] |= 1ULL << v;
            m[v] |= 1ULL << u;
        }
        return m;
    }

private:
    void build_adjacency() {
        off_.assign(n_ + 1, 0);
        for (auto [u, v] : edges_) {
            ++off_[u + 1];
            ++off_[v + 1];
        }
        for (int i = 0; i < n_; ++i) off_[i + 1] += off_[i];
        adj_.resize(edges_.size() * 2);
        std::vector<int> cur(off_.begin(), off_.end() - 1);
        for (auto [u, v] : edges_) {
            adj_[cur[u]++] = v;
            adj_[cur[v]++] = u;
        }
        // Edge list is sorted, so each adjacency run comes out sorted too
        // except for the low endpoints; sort each run to be safe.
        for (int v = 0; v < n_; ++v)
            std::sort(adj_.begin() + off_[v], adj_.begin() + off_[v + 1]);
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> off_{0};
    std::vector<int> adj_;
};

inline Graph union_graphs(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("union_graphs: vertex counts differ");
    std::vector<std::pair<int, int>> es;
    es.reserve(a.edge_count() + b.edge_count());
    std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                   std::back_inserter(es));
    return Graph::from_edges(a.vertex_count(), std::move(es));
}

// --- set utilities used throughout the checkers and pipelines ---

// N(A) = (union of neighborhoods of A) minus A, as a sorted vector.
inline std::vector<int> neighborhood(const Graph& g, const std::vector<int>& a) {
    std::vector<char> in_a(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : a) in_a[v] = 1;
    std::vector<int> out;
    for (int v : a)
        for (int w : g.neighbors(v))
            if (!in_a[w] && !seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

// d_G(A,B) = sum over a in A of |N(a) ∩ B|. A and B may overlap; edges inside
// the overlap are counted from both sides, matching the definition.
inline long long directed_degree(const Graph& g, const std::vector<int>& a,
                                 const std::vector<int>& b) {
    std::vector<char> in_b(g.vertex_count(), 0);
    for (int v : b) in_b[v] = 1;
    long long total = 0;
    for (int v : a)
        for (int w : g.neighbors(v))
            if (in_b[w]) ++total;
    return total;
}

// Number of edges with one endpoint in A and the other in B, for disjoint A,B.
inline long long crossing_edges(const Graph& g, const std::vector<int>& a,
                                const std::vector<int>& b) {
    return directed_degree(g, a, b);
}

// --- text format ---
//
// Graphs are serialized as:
//   line 1:  "n m"
//   then m lines "u v" with 0 <= u < v < n, sorted lexicographically
// every line LF-terminated. Readers reject any violation.

inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

namespace detail {

inline std::vector<long long> parse_int_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument(std::string("format: missing ") + what);
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t j = i;
        bool neg = line[j] == '-';
        if (neg) ++j;
        std::size_t digits = 0;
        while (j < line.size() && line[j] >= '0' && line[j] <= '9') {
            ++j;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument(std::string("format: bad token in ") + what);
        out.push_back(std::stoll(line.substr(i, j - i)));
        i = j;
    }
    return out;
}

} // namespace detail

// Reads the documented graph format; also used by the tree reader. If
// header_tag is non-null and the header carries a third textual token, the tag
// is stored there ("tree" is the only recognized value at call sites).
inline Graph read_graph(std::istream& is, std::string* header_tag = nullptr) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("format: empty input");
    long long n = -1, m = -1;
    {
        std::string tag;
        std::size_t sp1 = line.find(' ');
        if (sp1 == std::string::npos) throw std::invalid_argument("format: bad header");
        std::size_t sp2 = line.find(' ', sp1 + 1);
        std::string a = line.substr(0, sp1);
        std::string b = sp2 == std::string::npos ? line.substr(sp1 + 1)
                                                 : line.substr(sp1 + 1, sp2 - sp1 - 1);
        if (sp2 != std::string::npos) tag = line.substr(sp2 + 1);
        try {
            n = std::stoll(a);
            m = std::stoll(b);
        } catch (...) {
            throw std::invalid_argument("format: bad header");
        }
        if (header_tag) *header_tag = tag;
        else if (!tag.empty())
            throw std::invalid_argument("format: unexpected header tag");
    }
    if (n < 0 || m < 0) throw std::invalid_argument("format: negative header counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::pair<long long, long long> prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        auto nums = detail::parse_int_line(is, "edge line");
        if (nums.size() != 2) throw std::invalid_argument("format: edge line needs two fields");
        long long u = nums[0], v = nums[1];
        if (u < 0 || v <= u || v >= n) throw std::invalid_argument("format: edge endpoints must satisfy 0 <= u < v < n");
        std::pair<long long, long long> cur{u, v};
        if (!(prev < cur)) throw std::invalid_argument("format: edges must be sorted and distinct");
        prev = cur;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (std::getline(is, line) && !line.empty())
        throw std::invalid_argument("format: trailing content after edge list");
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

} // namespace combforge
