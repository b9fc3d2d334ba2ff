#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace combforge {

// G(n,p) sampler. Pair iteration order is row-major over i < j (i outer
// ascending, j inner ascending) and exactly one uniform draw is spent per
// pair, taken or not; this is the documented contract that makes samples
// reproducible. No skip-sampling: simplicity over speed at desk scale, and
// the first optimization target if larger n is ever needed.
inline Graph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t* draws_out = nullptr) {
    if (n < 0) throw std::invalid_argument("sample_gnp: negative n");
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < p) edges.emplace_back(i, j);
    if (draws_out) *draws_out += rng.draws();
    return Graph::from_edges(n, std::move(edges));
}

// Multi-round exposure: round r is an independent G(n, p_r) drawn with the
// sub-seed derive_seed(seed, r). The composite graph is the union of all
// rounds, equal in distribution to G(n, 1 - prod(1 - p_r)).
struct ExposureSchedule {
    std::vector<double> round_p;
    std::uint64_t seed = 0;

    double composite_p() const {
        double q = 1.0;
        for (double p : round_p) q *= 1.0 - p;
        return 1.0 - q;
    }
};

struct Exposure {
    std::vector<Graph> rounds;
    Graph composite;
};

inline Exposure expose(int n, const ExposureSchedule& sched, std::uint64_t* draws_out = nullptr) {
    Exposure ex;
    ex.composite = Graph::from_edges(n, {});
    for (std::size_t r = 0; r < sched.round_p.size(); ++r) {
        Graph g = sample_gnp(n, sched.round_p[r], derive_seed(sched.seed, r), draws_out);
        ex.composite = union_graphs(ex.composite, g);
        ex.rounds.push_back(std::move(g));
    }
    return ex;
}

} // namespace combforge
