#ifndef PHYTA_PHYSARUM_SP_HPP
#define PHYTA_PHYSARUM_SP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "phyta/laplacian.hpp"
#include "phyta/network.hpp"

namespace phyta {

struct SPConfig {
    double d0 = 1.0;
    double dt = 0.01;
    double eps = 1e-6;
    int max_iters = 100000;
};

/// Per-edge tube conductivities for the shortest-path dynamic.
struct SPState {
    std::vector<double> conductivity;
    int iteration = 0;
};

SPState sp_init(std::size_t edge_count, double d0);

/// One semi-implicit step: solve pressures with weights D/L, then
/// D' = (D + dt*|Q|) / (1 + dt).
SPState sp_step(const SPState& state, const std::vector<std::pair<int, int>>& edges,
                const std::vector<int>& nodes, const std::vector<double>& lengths, int source,
                int sink, double i0, double dt);

struct SPRunResult {
    std::vector<int> path_nodes;             // source..sink when is_path
    std::vector<std::size_t> path_links;
    std::vector<std::size_t> threshold_links;  // edges with D > 0.5 * i0
    bool converged = false;
    bool is_path = false;
    int iterations = 0;
};

/// Iterates sp_step until the largest conductivity change drops below eps
/// (or max_iters) and reads the surviving edges off against 0.5 * i0.
/// Equal-length shortest paths leave is_path false rather than throwing.
SPRunResult sp_run(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& nodes,
                   const std::vector<double>& lengths, int source, int sink, double i0,
                   const SPConfig& config);

/// Network-facing wrapper using per-link lengths; throws NoConvergence when
/// the surviving edges do not form a source-sink path.
Path sp_run_network(const Network& net, const std::vector<double>& lengths, int source, int sink,
                    double i0, const SPConfig& config);

}  // namespace phyta

#endif
