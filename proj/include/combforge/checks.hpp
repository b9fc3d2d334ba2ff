#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "report.hpp"
#include "rng.hpp"

namespace combforge {

// Shared policy knobs for the checkers. Sampled refutation uses a fixed
// documented base seed (overridable) so that every checker stays a pure
// function of its inputs: same graph and parameters, same verdict, whether
// run once or many times.
struct CheckOptions {
    std::uint64_t trials = 2000;
    std::uint64_t seed = 0;           // 0 -> derived from kCheckSeedBase
    bool allow_out_of_regime = false; // lets check_density proceed when abp < 32n
};

inline constexpr std::uint64_t kCheckSeedBase = 0xC0B1F0E5EED00001ULL;
// Exact enumeration is used whenever the number of set pairs to scan stays
// within this budget; beyond it the checkers fall back to seeded randomized
// refutation, and any "holds" verdict is labeled sampled.
inline constexpr double kExactPairBudget = 1e6;

namespace detail {

inline double comb_count(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > 1e18) return 1e18;
    }
    return r;
}

// Size-k subsets of `universe` in lexicographic order; fn returns true to
// stop early. Returns whether a call stopped the scan.
template <class F>
bool for_each_combo(const std::vector<int>& universe, int k, F&& fn) {
    const int n = static_cast<int>(universe.size());
    if (k <= 0 || k > n) return false;
    std::vector<int> idx(k), cur(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (int i = 0; i < k; ++i) cur[i] = universe[idx[i]];
        if (fn(cur)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Partial Fisher-Yates: leaves k distinct entries in perm[0..k).
inline void sample_distinct(Rng& rng, std::vector<int>& perm, int k) {
    const int n = static_cast<int>(perm.size());
    for (int i = 0; i < k; ++i) std::swap(perm[i], perm[i + rng.below_int(n - i)]);
}

// |N(set)| with set excluded, via stamp buffer (values stamped with `epoch`).
inline int nbr_size(const Graph& g, const std::vector<int>& set, std::vector<int>& stamp,
                    int& epoch) {
    ++epoch;
    for (int v : set) stamp[v] = epoch;
    int count = 0;
    for (int v : set)
        for (int w : g.neighbors(v))
            if (stamp[w] != epoch) {
                stamp[w] = epoch;
                ++count;
            }
    return count;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Pairwise-edge property: every two disjoint m-sets of vertices are joined by
// at least one edge.
// ---------------------------------------------------------------------------
inline PropertyReport check_pairwise_edge(const Graph& g, int m, const CheckOptions& opts = {}) {
    const int n = g.vertex_count();
    if (m < 1 || 2 * m > n) throw std::invalid_argument("check_pairwise_edge: need 1 <= m <= n/2");
    PropertyReport rep;
    rep.property = "pairwise-edge";
    rep.bound = 1.0;
    rep.detail = "m=" + std::to_string(m);

    if (m == 1) {
        // Every two singletons joined means the graph is complete.
        rep.mode = CheckMode::Exact;
        for (int u = 0; u < n; ++u) {
            if (g.degree(u) == n - 1) continue;
            std::vector<char> adj(n, 0);
            adj[u] = 1;
            for (int w : g.neighbors(u)) adj[w] = 1;
            for (int v = 0; v < n; ++v)
                if (!adj[v]) {
                    rep.holds = false;
                    rep.quantity = 0.0;
                    rep.witness = {{u}, {v}};
                    return rep;
                }
        }
        return rep;
    }

    const double pairs = detail::comb_count(n, m) * detail::comb_count(n - m, m);
    if (pairs <= kExactPairBudget) {
        // Exact scan; m >= 2 within the budget forces n <= 64, so bitmask
        // adjacency applies.
        rep.mode = CheckMode::Exact;
        const auto nbr = g.neighbor_masks();
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        bool stopped = detail::for_each_combo(all, m, [&](const std::vector<int>& a) {
            std::uint64_t amask = 0;
            for (int v : a) amask |= 1ULL << v;
            // Unordered pairs: only scan B with min(B) > min(A).
            std::vector<int> rest;
            for (int v = a[0] + 1; v < n; ++v)
                if (!(amask >> v & 1)) rest.push_back(v);
            return detail::for_each_combo(rest, m, [&](const std::vector<int>& b) {
                std::uint64_t bmask = 0;
                for (int v : b) bmask |= 1ULL << v;
                for (int v : a)
                    if (nbr[v] & bmask) return false;
                rep.holds = false;
                rep.quantity = 0.0;
                rep.witness = {a, b};
                return true;
            });
        });
        (void)stopped;
        return rep;
    }

    // Randomized refutation only; a positive verdict is labeled sampled.
    rep.mode = CheckMode::Sampled;
    rep.trials = opts.trials;
    Rng rng(opts.seed ? opts.seed : derive_seed(kCheckSeedBase, 1, static_cast<std::uint64_t>(n)));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> in_b(n, 0);
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        detail::sample_distinct(rng, perm, 2 * m);
        std::vector<int> a(perm.begin(), perm.begin() + m);
        std::vector<int> b(perm.begin() + m, perm.begin() + 2 * m);
        for (int v : b) in_b[v] = 1;
        bool crossed = false;
        for (int v : a) {
            for (int w : g.neighbors(v))
                if (in_b[w]) {
                    crossed = true;
                    break;
                }
            if (crossed) break;
        }
        for (int v : b) in_b[v] = 0;
        if (!crossed) {
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a[0] > b[0]) std::swap(a, b);
            if (crossing_edges(g, a, b) != 0) throw std::logic_error("pairwise witness failed re-check");
            rep.holds = false;
            rep.quantity = 0.0;
            rep.witness = {a, b};
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Density window: every disjoint A,B with |A| = a, |B| = b spans between
// abp/2 and 3abp/2 crossing edges. Precondition abp >= 32n unless the caller
// overrides, in which case the report is marked out of regime.
// ---------------------------------------------------------------------------
inline PropertyReport check_density(const Graph& g, int a, int b, double p,
                                    const CheckOptions& opts = {}) {
    const int n = g.vertex_count();
    if (a < 1 || b < 1 || a + b > n) throw std::invalid_argument("check_density: need a,b >= 1 and a+b <= n");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("check_density: p outside (0,1]");
    const double abp = static_cast<double>(a) * b * p;
    PropertyReport rep;
    rep.property = "density";
    rep.detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " window=[" +
                 std::to_string(abp / 2) + "," + std::to_string(3 * abp / 2) + "]";
    if (abp < 32.0 * n) {
        if (!opts.allow_out_of_regime)
            throw std::invalid_argument("check_density: abp < 32n; pass the override to proceed out of regime");
        rep.out_of_regime = true;
    }
    const double lo = abp / 2, hi = 3 * abp / 2;

    auto judge = [&](const std::vector<int>& av, const std::vector<int>& bv, long long cnt) {
        if (cnt < lo || cnt > hi) {
            rep.holds = false;
            rep.quantity = static_cast<double>(cnt);
            rep.bound = cnt < lo ? lo : hi;
            rep.witness = {av, bv};
            return true;
        }
        return false;
    };

    const double pairs = detail::comb_count(n, a) * detail::comb_count(n - a, b);
    if (pairs <= kExactPairBudget) {
        rep.mode = CheckMode::Exact;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::vector<char> in_b(n, 0);
        detail::for_each_combo(all, a, [&](const std::vector<int>& av) {
            std::vector<char> in_a(n, 0);
            for (int v : av) in_a[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in_a[v] && (a != b || v > av[0])) rest.push_back(v);
            return detail::for_each_combo(rest, b, [&](const std::vector<int>& bv) {
                for (int v : bv) in_b[v] = 1;
                long long cnt = 0;
                for (int v : av)
                    for (int w : g.neighbors(v)) cnt += in_b[w];
                for (int v : bv) in_b[v] = 0;
                return judge(av, bv, cnt);
            });
        });
        return rep;
    }

    rep.mode = CheckMode::Sampled;
    rep.trials = opts.trials;
    Rng rng(opts.seed ? opts.seed : derive_seed(kCheckSeedBase, 2, static_cast<std::uint64_t>(n)));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> in_b(n, 0);
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        detail::sample_distinct(rng, perm, a + b);
        std::vector<int> av(perm.begin(), perm.begin() + a);
        std::vector<int> bv(perm.begin() + a, perm.begin() + a + b);
        std::sort(av.begin(), av.end());
        std::sort(bv.begin(), bv.end());
        for (int v : bv) in_b[v] = 1;
        long long cnt = 0;
        for (int v : av)
            for (int w : g.neighbors(v)) cnt += in_b[w];
        for (int v : bv) in_b[v] = 0;
        if (judge(av, bv, cnt)) {
            if (crossing_edges(g, av, bv) != cnt) throw std::logic_error("density witness failed re-check");
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// (n,d)-expander: (1) |N(X)| >= d|X| for every X with 1 <= |X| < ceil(n/2d),
// and (2) every two disjoint sets of size exactly ceil(n/2d) are joined by an
// edge. Exact up to n = 20; beyond that condition (1) is exact for |X| <= 3
// (a failing set that small forces every member into a low-degree candidate
// pool, so the pruned scan stays exact) and refutation is randomized for the
// rest.
// ---------------------------------------------------------------------------
inline PropertyReport check_expander(const Graph& g, double d, const CheckOptions& opts = {}) {
    const int n = g.vertex_count();
    if (!(d > 0.0)) throw std::invalid_argument("check_expander: need d > 0");
    const int s = static_cast<int>(std::ceil(n / (2.0 * d)));
    PropertyReport rep;
    rep.property = "expander";
    rep.detail = "d=" + std::to_string(d) + " boundary_size=" + std::to_string(s);

    auto fail_cond1 = [&](const std::vector<int>& x, int nbrs) {
        rep.holds = false;
        rep.quantity = nbrs;
        rep.bound = d * static_cast<double>(x.size());
        rep.witness = {x};
        rep.detail += " violated=neighbourhood";
    };
    auto fail_cond2 = [&](std::vector<int> x, std::vector<int> y) {
        if (x[0] > y[0]) std::swap(x, y);
        rep.holds = false;
        rep.quantity = 0.0;
        rep.bound = 1.0;
        rep.witness = {x, y};
        rep.detail += " violated=joined-pair";
    };

    if (n <= 20) {
        rep.mode = CheckMode::Exact;
        const auto nbr = g.neighbor_masks();
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (int len = 1; len < s && rep.holds; ++len) {
            detail::for_each_combo(all, len, [&](const std::vector<int>& x) {
                std::uint64_t xmask = 0, u = 0;
                for (int v : x) xmask |= 1ULL << v;
                for (int v : x) u |= nbr[v];
                const int cnt = std::popcount(u & ~xmask);
                if (cnt < d * len) {
                    fail_cond1(x, cnt);
                    return true;
                }
                return false;
            });
        }
        if (rep.holds && 2 * s <= n) {
            detail::for_each_combo(all, s, [&](const std::vector<int>& x) {
                std::uint64_t xmask = 0;
                for (int v : x) xmask |= 1ULL << v;
                std::vector<int> rest;
                for (int v = x[0] + 1; v < n; ++v)
                    if (!(xmask >> v & 1)) rest.push_back(v);
                return detail::for_each_combo(rest, s, [&](const std::vector<int>& y) {
                    std::uint64_t ymask = 0;
                    for (int v : y) ymask |= 1ULL << v;
                    for (int v : x)
                        if (nbr[v] & ymask) return false;
                    fail_cond2(x, y);
                    return true;
                });
            });
        } else if (2 * s > n) {
            rep.detail += " joined-pair=vacuous";
        }
        return rep;
    }

    rep.mode = CheckMode::Sampled;
    rep.trials = opts.trials;
    std::vector<int> stamp(n, 0);
    int epoch = 0;

    // Condition (1), |X| = 1.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < d) {
            fail_cond1({v}, g.degree(v));
            return rep;
        }
    // |X| = 2: both members of a violating pair have degree < 2d+1.
    if (s > 2) {
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) < 2 * d + 1) cand.push_back(v);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                std::vector<int> x{cand[i], cand[j]};
                const int cnt = detail::nbr_size(g, x, stamp, epoch);
                if (cnt < 2 * d) {
                    fail_cond1(x, cnt);
                    return rep;
                }
            }
    }
    // |X| = 3: every member of a violating triple has degree < 3d+2 and every
    // contained pair has |N| < 3d+1.
    if (s > 3) {
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) < 3 * d + 2) cand.push_back(v);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                std::vector<int> pair{cand[i], cand[j]};
                if (detail::nbr_size(g, pair, stamp, epoch) >= 3 * d + 1) continue;
                for (int w : cand) {
                    if (w == cand[i] || w == cand[j]) continue;
                    std::vector<int> x{cand[i], cand[j], w};
                    std::sort(x.begin(), x.end());
                    const int cnt = detail::nbr_size(g, x, stamp, epoch);
                    if (cnt < 3 * d) {
                        fail_cond1(x, cnt);
                        return rep;
                    }
                }
            }
    }
    rep.detail += " sizes<=3=exact";

    Rng rng(opts.seed ? opts.seed : derive_seed(kCheckSeedBase, 3, static_cast<std::uint64_t>(n)));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Condition (1), sizes 4..s-1, randomized refutation.
    if (s > 4) {
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            const int len = 4 + rng.below_int(s - 4);
            detail::sample_distinct(rng, perm, len);
            std::vector<int> x(perm.begin(), perm.begin() + len);
            const int cnt = detail::nbr_size(g, x, stamp, epoch);
            if (cnt < d * len) {
                std::sort(x.begin(), x.end());
                fail_cond1(x, cnt);
                return rep;
            }
        }
    }
    // Condition (2), randomized refutation.
    if (2 * s <= n) {
        std::vector<char> in_y(n, 0);
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            detail::sample_distinct(rng, perm, 2 * s);
            std::vector<int> x(perm.begin(), perm.begin() + s);
            std::vector<int> y(perm.begin() + s, perm.begin() + 2 * s);
            for (int v : y) in_y[v] = 1;
            bool crossed = false;
            for (int v : x) {
                for (int w : g.neighbors(v))
                    if (in_y[w]) {
                        crossed = true;
                        break;
                    }
                if (crossed) break;
            }
            for (int v : y) in_y[v] = 0;
            if (!crossed) {
                std::sort(x.begin(), x.end());
                std::sort(y.begin(), y.end());
                if (crossing_edges(g, x, y) != 0) throw std::logic_error("expander witness failed re-check");
                fail_cond2(x, y);
                return rep;
            }
        }
    } else {
        rep.detail += " joined-pair=vacuous";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// (d,D,r)-property: there is no pair A,B with |A| <= r, |B| <= d|A| and
// d_G(A,B) >= D|A|. For fixed A the best B is the floor(d|A|) vertices with
// most neighbours in A, so scanning greedy B sets is exact. Exact enumeration
// of A up to n = 18; randomized A plus degree-concentration probes beyond.
// ---------------------------------------------------------------------------
inline PropertyReport check_ddr(const Graph& g, double d, double D, int r,
                                const CheckOptions& opts = {}) {
    const int n = g.vertex_count();
    if (!(d > 0.0) || !(D > 0.0) || r < 1) throw std::invalid_argument("check_ddr: need d,D > 0 and r >= 1");
    const int rcap = std::min(r, n);
    PropertyReport rep;
    rep.property = "ddr";
    rep.detail = "d=" + std::to_string(d) + " D=" + std::to_string(D) + " r=" + std::to_string(r);

    std::vector<int> deg_into(n, 0);
    std::vector<int> order(n);
    // Evaluates greedy B for the given A; returns true when a violation was
    // recorded.
    auto probe = [&](const std::vector<int>& a) {
        const int t = static_cast<int>(std::floor(d * static_cast<double>(a.size())));
        if (t < 1) return false;
        std::fill(deg_into.begin(), deg_into.end(), 0);
        for (int v : a)
            for (int w : g.neighbors(v)) ++deg_into[w];
        std::iota(order.begin(), order.end(), 0);
        const int take = std::min(t, n);
        std::partial_sort(order.begin(), order.begin() + take, order.end(), [&](int x, int y) {
            if (deg_into[x] != deg_into[y]) return deg_into[x] > deg_into[y];
            return x < y;
        });
        long long q = 0;
        for (int i = 0; i < take; ++i) q += deg_into[order[i]];
        if (static_cast<double>(q) >= D * static_cast<double>(a.size())) {
            std::vector<int> b(order.begin(), order.begin() + take);
            std::sort(b.begin(), b.end());
            rep.holds = false;
            rep.quantity = static_cast<double>(q);
            rep.bound = D * static_cast<double>(a.size());
            rep.witness = {a, b};
            return true;
        }
        return false;
    };

    if (n <= 18) {
        rep.mode = CheckMode::Exact;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (int len = 1; len <= rcap && rep.holds; ++len)
            detail::for_each_combo(all, len, [&](const std::vector<int>& a) { return probe(a); });
        return rep;
    }

    rep.mode = CheckMode::Sampled;
    rep.trials = opts.trials;
    // Deterministic probes first: prefixes of the global degree order, the
    // natural shape for degree-concentration violations.
    std::vector<int> bydeg(n);
    std::iota(bydeg.begin(), bydeg.end(), 0);
    std::sort(bydeg.begin(), bydeg.end(), [&](int x, int y) {
        if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
        return x < y;
    });
    for (int len = 1; len <= rcap; ++len) {
        std::vector<int> a(bydeg.begin(), bydeg.begin() + len);
        std::sort(a.begin(), a.end());
        if (probe(a)) return rep;
    }
    Rng rng(opts.seed ? opts.seed : derive_seed(kCheckSeedBase, 4, static_cast<std::uint64_t>(n)));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        const int len = 1 + rng.below_int(rcap);
        detail::sample_distinct(rng, perm, len);
        std::vector<int> a(perm.begin(), perm.begin() + len);
        std::sort(a.begin(), a.end());
        if (probe(a)) return rep;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Degree conditions: max degree at most max_deg, and every vertex has at
// least eta_log_n neighbours outside U. Always exact.
// ---------------------------------------------------------------------------
inline PropertyReport check_degree_conditions(const Graph& g, const std::vector<int>& u_set,
                                              double eta_log_n, double max_deg) {
    const int n = g.vertex_count();
    PropertyReport rep;
    rep.property = "degree-conditions";
    rep.mode = CheckMode::Exact;
    rep.detail = "min_outside=" + std::to_string(eta_log_n) + " max_deg=" + std::to_string(max_deg);
    std::vector<char> in_u(n, 0);
    for (int v : u_set) {
        if (v < 0 || v >= n) throw std::invalid_argument("check_degree_conditions: U out of range");
        if (in_u[v]) throw std::invalid_argument("check_degree_conditions: duplicate in U");
        in_u[v] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > max_deg) {
            rep.holds = false;
            rep.quantity = g.degree(v);
            rep.bound = max_deg;
            rep.witness = {{v}};
            rep.detail += " violated=max-degree";
            return rep;
        }
        int outside = 0;
        for (int w : g.neighbors(v)) outside += !in_u[w];
        if (outside < eta_log_n) {
            rep.holds = false;
            rep.quantity = outside;
            rep.bound = eta_log_n;
            rep.witness = {{v}};
            rep.detail += " violated=outside-degree";
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Small-set expansion into A: every U with |U| <= |A|/2d has
// |N(U) ∩ A| >= d|U|. Same exact/sampled regime as check_expander.
// ---------------------------------------------------------------------------
inline PropertyReport check_small_set_expansion_into(const Graph& g, const std::vector<int>& a_set,
                                                     double d, const CheckOptions& opts = {}) {
    const int n = g.vertex_count();
    if (!(d > 0.0)) throw std::invalid_argument("check_small_set_expansion_into: need d > 0");
    if (a_set.empty()) throw std::invalid_argument("check_small_set_expansion_into: A empty");
    std::vector<char> in_a(n, 0);
    for (int v : a_set) {
        if (v < 0 || v >= n) throw std::invalid_argument("check_small_set_expansion_into: A out of range");
        if (in_a[v]) throw std::invalid_argument("check_small_set_expansion_into: duplicate in A");
        in_a[v] = 1;
    }
    const int cap = static_cast<int>(std::floor(a_set.size() / (2.0 * d)));
    PropertyReport rep;
    rep.property = "small-set-expansion";
    rep.detail = "d=" + std::to_string(d) + " max_set=" + std::to_string(cap);
    if (cap < 1) {
        rep.mode = CheckMode::Exact;
        rep.detail += " vacuous";
        return rep;
    }

    std::vector<int> stamp(n, 0);
    int epoch = 0;
    auto nbr_in_a = [&](const std::vector<int>& u) {
        ++epoch;
        for (int v : u) stamp[v] = epoch;
        int count = 0;
        for (int v : u)
            for (int w : g.neighbors(v))
                if (stamp[w] != epoch) {
                    stamp[w] = epoch;
                    count += in_a[w];
                }
        return count;
    };
    auto fail = [&](const std::vector<int>& u, int cnt) {
        rep.holds = false;
        rep.quantity = cnt;
        rep.bound = d * static_cast<double>(u.size());
        rep.witness = {u};
    };

    if (n <= 20) {
        rep.mode = CheckMode::Exact;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (int len = 1; len <= cap && rep.holds; ++len) {
            detail::for_each_combo(all, len, [&](const std::vector<int>& u) {
                const int cnt = nbr_in_a(u);
                if (cnt < d * len) {
                    fail(u, cnt);
                    return true;
                }
                return false;
            });
        }
        return rep;
    }

    rep.mode = CheckMode::Sampled;
    rep.trials = opts.trials;
    auto deg_into_a = [&](int v) {
        int c = 0;
        for (int w : g.neighbors(v)) c += in_a[w];
        return c;
    };
    // Sizes 1..3 exact via the low-A-degree candidate pool: a violating set of
    // size L has |N(u,A)| < dL + L - 1 for each member.
    for (int v = 0; v < n; ++v)
        if (deg_into_a(v) < d) {
            fail({v}, deg_into_a(v));
            return rep;
        }
    std::vector<int> cand;
    const int upper = std::min(cap, 3);
    for (int v = 0; v < n; ++v)
        if (deg_into_a(v) < d * upper + upper - 1) cand.push_back(v);
    if (cap >= 2) {
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                std::vector<int> u{cand[i], cand[j]};
                const int cnt = nbr_in_a(u);
                if (cnt < 2 * d) {
                    fail(u, cnt);
                    return rep;
                }
                if (cap >= 3 && cnt < 3 * d + 1) {
                    for (int w : cand) {
                        if (w == cand[i] || w == cand[j]) continue;
                        std::vector<int> u3{cand[i], cand[j], w};
                        std::sort(u3.begin(), u3.end());
                        const int c3 = nbr_in_a(u3);
                        if (c3 < 3 * d) {
                            fail(u3, c3);
                            return rep;
                        }
                    }
                }
            }
    }
    rep.detail += " sizes<=3=exact";
    if (cap > 3) {
        Rng rng(opts.seed ? opts.seed : derive_seed(kCheckSeedBase, 5, static_cast<std::uint64_t>(n)));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            const int len = 4 + rng.below_int(cap - 3);
            detail::sample_distinct(rng, perm, len);
            std::vector<int> u(perm.begin(), perm.begin() + len);
            const int cnt = nbr_in_a(u);
            if (cnt < d * len) {
                std::sort(u.begin(), u.end());
                fail(u, cnt);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace combforge
