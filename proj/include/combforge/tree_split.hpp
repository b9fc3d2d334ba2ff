#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "tree.hpp"

namespace combforge {

// Two subtrees covering the tree and sharing exactly one vertex.
struct TreeDivide {
    std::vector<int> s1, s2; // sorted vertex sets, both containing shared
    int shared = -1;
};

struct TreeSplit {
    std::vector<int> s_verts, t1_verts, t2_verts; // sorted; t_i sets contain their t_i
    int t1 = -1, t2 = -1;                         // the S∩T1 and S∩T2 vertices
    int k = 0;                                    // induction depth used
    double beta = 1.0;                            // guaranteed L-fraction 6^{-k}
};

namespace detail {

// Vertex minimizing the largest component of t - v; smallest label on ties.
inline int tree_centroid(const Graph& t) {
    const int n = t.vertex_count();
    std::vector<int> order, parent(n, -1), below(n, 1);
    order.reserve(n);
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int w : t.neighbors(order[h]))
            if (w != parent[order[h]]) {
                parent[w] = order[h];
                order.push_back(w);
            }
    for (std::size_t i = order.size(); i-- > 1;) below[parent[order[i]]] += below[order[i]];
    int best = 0, best_max = n;
    for (int v = 0; v < n; ++v) {
        int worst = n - below[v];
        for (int w : t.neighbors(v))
            if (w != parent[v]) worst = std::max(worst, below[w]);
        if (worst < best_max) {
            best = v;
            best_max = worst;
        }
    }
    return best;
}

// Connected components of t - v, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> components_without(const Graph& t, int v) {
    const int n = t.vertex_count();
    std::vector<char> seen(n, 0);
    seen[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (int w : t.neighbors(comp[h]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace detail

// Splits a tree into two covering subtrees sharing one vertex, both of size
// >= |t|/3. Starts from a centroid packing and runs the local improvements of
// the existence proof to a fixed point: if the shared vertex has a single
// neighbour on the larger side, shift it across; otherwise move the branch of
// the larger side that best narrows the size gap. At a fixed point every
// branch of the larger side has size >= the gap, which forces the 1/3 bound.
inline TreeDivide divide_tree(const Graph& t) {
    const int n = t.vertex_count();
    if (n < 2 || !is_tree_graph(t)) throw std::invalid_argument("divide_tree: need a tree with >= 2 vertices");

    int shared = detail::tree_centroid(t);
    // side[] is meaningful for every vertex except the current shared one.
    std::vector<char> side(n, 0);
    int size1 = 1, size2 = 1; // both count the shared vertex
    {
        auto comps = detail::components_without(t, shared);
        std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a[0] < b[0];
        });
        for (const auto& comp : comps) {
            const char tgt = size2 < size1;
            for (int v : comp) side[v] = tgt;
            (tgt ? size2 : size1) += static_cast<int>(comp.size());
        }
    }

    while (true) {
        const char big = size2 > size1;
        const int diff = std::abs(size1 - size2);
        if (diff <= 1) break;
        std::vector<int> nbrs_in_big;
        for (int w : t.neighbors(shared))
            if (side[w] == big) nbrs_in_big.push_back(w);
        if (nbrs_in_big.size() == 1) {
            // Shift the shared vertex across; its old role passes to x.
            side[shared] = !big;
            shared = nbrs_in_big[0];
            (big ? size2 : size1) -= 1;
            (big ? size1 : size2) += 1;
            continue;
        }
        // Branches of the big side at the shared vertex.
        std::vector<char> seen(n, 0);
        seen[shared] = 1;
        std::vector<int> best_branch;
        int best_gap = diff;
        for (int s : nbrs_in_big) {
            std::vector<int> branch{s};
            seen[s] = 1;
            for (std::size_t h = 0; h < branch.size(); ++h)
                for (int w : t.neighbors(branch[h]))
                    if (!seen[w] && side[w] == big) {
                        seen[w] = 1;
                        branch.push_back(w);
                    }
            const int gap = std::abs(diff - 2 * static_cast<int>(branch.size()));
            std::sort(branch.begin(), branch.end());
            if (gap < best_gap || (gap == best_gap && !best_branch.empty() && branch[0] < best_branch[0])) {
                best_gap = gap;
                best_branch = std::move(branch);
            }
        }
        if (best_gap >= diff) break; // fixed point
        for (int v : best_branch) side[v] = !big;
        (big ? size2 : size1) -= static_cast<int>(best_branch.size());
        (big ? size1 : size2) += static_cast<int>(best_branch.size());
    }

    TreeDivide out;
    out.shared = shared;
    for (int v = 0; v < n; ++v) {
        if (v == shared) continue;
        (side[v] ? out.s2 : out.s1).push_back(v);
    }
    out.s1.push_back(shared);
    out.s2.push_back(shared);
    std::sort(out.s1.begin(), out.s1.end());
    std::sort(out.s2.begin(), out.s2.end());
    if (3 * std::min(out.s1.size(), out.s2.size()) < static_cast<std::size_t>(n))
        throw std::logic_error("divide_tree: fixed point below the 1/3 bound");
    return out;
}

// Induction depth for a target fraction eps. (3/4)^k <= eps suffices for the
// guarantee (the construction achieves |S| <= (3/4)^k n exactly at threshold
// values like eps = 3/4).
inline int split_depth(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("split_depth: need eps > 0");
    int k = 0;
    while (std::pow(0.75, k) > eps + 1e-12) {
        ++k;
        if (k > 200) throw std::invalid_argument("split_depth: eps too small");
    }
    return k;
}

inline int split_min_size(double eps) {
    const int k = split_depth(eps);
    return k == 0 ? 2 : static_cast<int>(std::ceil(12.0 * std::pow(4.0 / 3.0, k) - 1e-9));
}

namespace detail {

// Pieces that are not the core get merged wherever they share vertices; the
// result must be at most two components, each meeting the core in exactly one
// vertex (guaranteed by the splitting argument, asserted here).
struct MergedPieces {
    std::vector<std::vector<int>> comps; // sorted vertex sets
    std::vector<int> attach;             // per component, its vertex in the core
};

inline MergedPieces merge_pieces(int n, const std::vector<std::vector<int>>& pieces,
                                 const std::vector<int>& core) {
    std::vector<int> pid(pieces.size());
    std::iota(pid.begin(), pid.end(), 0);
    std::vector<int> root = pid;
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (int v : pieces[i]) {
            if (owner[v] == -1) owner[v] = static_cast<int>(i);
            else root[find(static_cast<int>(i))] = find(owner[v]);
        }
    std::vector<std::vector<int>> grouped(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        auto& dst = grouped[find(static_cast<int>(i))];
        dst.insert(dst.end(), pieces[i].begin(), pieces[i].end());
    }
    std::vector<char> in_core(n, 0);
    for (int v : core) in_core[v] = 1;
    MergedPieces out;
    for (auto& comp : grouped) {
        if (comp.empty()) continue;
        std::sort(comp.begin(), comp.end());
        comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
        int attach = -1, hits = 0;
        for (int v : comp)
            if (in_core[v]) {
                ++hits;
                attach = v;
            }
        if (hits != 1) throw std::logic_error("split_tree: piece meets the core in " + std::to_string(hits) + " vertices");
        out.comps.push_back(std::move(comp));
        out.attach.push_back(attach);
    }
    if (out.comps.size() > 2) throw std::logic_error("split_tree: more than two merged pieces");
    std::vector<std::size_t> idx(out.comps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return out.comps[a][0] < out.comps[b][0]; });
    MergedPieces sorted;
    for (std::size_t i : idx) {
        sorted.comps.push_back(std::move(out.comps[i]));
        sorted.attach.push_back(out.attach[i]);
    }
    return sorted;
}

} // namespace detail

// Finds subtrees S, T1, T2 covering t with |S| <= eps*|t|, |S ∩ L| >=
// 6^{-k}|L|, T1 and T2 disjoint and each meeting S in one vertex. Follows the
// existence proof: repeatedly divide the current S, keep the L-richer half,
// and when the three special vertices t1, t2, s all lie in the kept half,
// split it three ways at the meet of their pairwise paths first.
inline TreeSplit split_tree(const Graph& t, const std::vector<int>& l_set, double eps) {
    const int n = t.vertex_count();
    if (!is_tree_graph(t)) throw std::invalid_argument("split_tree: not a tree");
    const int k = split_depth(eps);
    const int n0 = split_min_size(eps);
    if (n < n0)
        throw std::invalid_argument("split_tree: need |t| >= " + std::to_string(n0) + " for eps = " + std::to_string(eps));
    std::vector<char> in_l(n, 0);
    for (int v : l_set) {
        if (v < 0 || v >= n) throw std::invalid_argument("split_tree: L out of range");
        in_l[v] = 1;
    }
    auto l_count = [&](const std::vector<int>& set) {
        int c = 0;
        for (int v : set) c += in_l[v];
        return c;
    };

    TreeSplit cur;
    cur.k = k;
    cur.beta = std::pow(6.0, -k);
    cur.s_verts.resize(n);
    std::iota(cur.s_verts.begin(), cur.s_verts.end(), 0);
    cur.t1 = 0;
    cur.t2 = 1;
    cur.t1_verts = {0};
    cur.t2_verts = {1};

    for (int lvl = 1; lvl <= k; ++lvl) {
        const double target = std::pow(0.75, lvl) * n;
        if (static_cast<double>(cur.s_verts.size()) <= target + 1e-9) continue;

        // Divide the current core in its own labeling, then map back.
        std::vector<int> old_of_new;
        const Graph sg = t.induced(cur.s_verts, &old_of_new);
        TreeDivide dv = divide_tree(sg);
        for (auto* half : {&dv.s1, &dv.s2}) {
            for (int& v : *half) v = old_of_new[v];
            std::sort(half->begin(), half->end());
        }
        const int s_shared = old_of_new[dv.shared];

        const bool first_richer = l_count(dv.s1) >= l_count(dv.s2);
        std::vector<int> chosen = first_richer ? dv.s1 : dv.s2;
        std::vector<int> other = first_richer ? dv.s2 : dv.s1;

        std::vector<std::vector<int>> pieces{std::move(other), cur.t1_verts, cur.t2_verts};

        auto contains = [](const std::vector<int>& set, int v) {
            return std::binary_search(set.begin(), set.end(), v);
        };
        const bool three_way = contains(chosen, cur.t1) && contains(chosen, cur.t2) &&
                               s_shared != cur.t1 && s_shared != cur.t2;
        std::vector<int> core;
        if (three_way) {
            // Meet u of the pairwise t1,t2,s paths inside the chosen half.
            std::vector<int> c_old;
            const Graph cg = t.induced(chosen, &c_old);
            std::vector<int> new_of_old(n, -1);
            for (std::size_t i = 0; i < c_old.size(); ++i) new_of_old[c_old[i]] = static_cast<int>(i);
            const int a = new_of_old[cur.t1], b = new_of_old[cur.t2], c = new_of_old[s_shared];
            std::vector<int> parent(cg.vertex_count(), -1), order{a};
            parent[a] = a;
            for (std::size_t h = 0; h < order.size(); ++h)
                for (int w : cg.neighbors(order[h]))
                    if (parent[w] == -1) {
                        parent[w] = order[h];
                        order.push_back(w);
                    }
            std::vector<char> on_ab(cg.vertex_count(), 0);
            for (int v = b; ; v = parent[v]) {
                on_ab[v] = 1;
                if (v == a) break;
            }
            int u = c;
            while (!on_ab[u]) u = parent[u];

            // Three subtrees of the chosen half intersecting only on u; spare
            // components of chosen - u go with the s-tree.
            std::vector<std::vector<int>> parts(3, std::vector<int>{u});
            auto comps = detail::components_without(cg, u);
            for (const auto& comp : comps) {
                int tgt = 2;
                if (std::binary_search(comp.begin(), comp.end(), a)) tgt = 0;
                else if (std::binary_search(comp.begin(), comp.end(), b)) tgt = 1;
                parts[tgt].insert(parts[tgt].end(), comp.begin(), comp.end());
            }
            for (auto& part : parts) {
                for (int& v : part) v = c_old[v];
                std::sort(part.begin(), part.end());
            }
            int best = 0, best_l = -1;
            for (int i = 0; i < 3; ++i)
                if (l_count(parts[i]) > best_l) {
                    best_l = l_count(parts[i]);
                    best = i;
                }
            core = std::move(parts[best]);
            for (int i = 0; i < 3; ++i)
                if (i != best) pieces.push_back(std::move(parts[i]));
        } else {
            core = std::move(chosen);
        }

        auto merged = detail::merge_pieces(n, pieces, core);
        cur.s_verts = std::move(core);
        if (merged.comps.empty()) throw std::logic_error("split_tree: no outer pieces");
        cur.t1_verts = std::move(merged.comps[0]);
        cur.t1 = merged.attach[0];
        if (merged.comps.size() == 2) {
            cur.t2_verts = std::move(merged.comps[1]);
            cur.t2 = merged.attach[1];
        } else {
            // Pad with a single-vertex subtree of the core.
            int x = -1;
            for (int v : cur.s_verts)
                if (v != cur.t1) {
                    x = v;
                    break;
                }
            if (x == -1) throw std::logic_error("split_tree: core too small to pad");
            cur.t2_verts = {x};
            cur.t2 = x;
        }
    }
    return cur;
}

struct SpineSplit {
    TreeSplit split;
    std::vector<BarePath> teeth; // teeth of t of the given length surviving inside S
};

// Splits off a small subtree S keeping at least beta*l - 1 of t's length-k
// teeth: teeth fully inside S and avoiding the connection vertices t1, t2
// remain teeth of S usable independently of T1 and T2.
inline SpineSplit split_spines(const Graph& t, int tooth_len, double eps) {
    const auto all_teeth = find_teeth(t, tooth_len);
    std::vector<int> leaves;
    for (const auto& bp : all_teeth) leaves.push_back(bp.verts.front());
    SpineSplit out;
    out.split = split_tree(t, leaves, eps);
    std::vector<char> in_s(t.vertex_count(), 0);
    for (int v : out.split.s_verts) in_s[v] = 1;
    for (const auto& bp : all_teeth) {
        bool keep = true;
        for (int v : bp.verts)
            if (!in_s[v] || v == out.split.t1 || v == out.split.t2) {
                keep = false;
                break;
            }
        if (keep) out.teeth.push_back(bp);
    }
    return out;
}

} // namespace combforge
