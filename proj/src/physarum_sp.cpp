#include "phyta/physarum_sp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace phyta {

SPState sp_init(std::size_t edge_count, double d0) {
    if (!(d0 > 0.0)) {
        throw ParameterOutOfRange("sp_init: d0 must be > 0");
    }
    SPState state;
    state.conductivity.assign(edge_count, d0);
    return state;
}

SPState sp_step(const SPState& state, const std::vector<std::pair<int, int>>& edges,
                const std::vector<int>& nodes, const std::vector<double>& lengths, int source,
                int sink, double i0, double dt) {
    if (edges.size() != lengths.size() || edges.size() != state.conductivity.size()) {
        throw ValidationError("sp_step: edges, lengths and conductivities must align");
    }
    if (!(i0 > 0.0) || !(dt > 0.0)) {
        throw ParameterOutOfRange("sp_step: i0 and dt must be > 0");
    }
    std::vector<double> weights(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!(lengths[e] > 0.0)) {
            throw ParameterOutOfRange("sp_step: lengths must be > 0");
        }
        weights[e] = std::max(state.conductivity[e] / lengths[e], kWeightFloor);
    }

    const PoissonSystem system = assemble(edges, weights, nodes, source, sink, i0);
    const PressureField pressures = solve_grounded(system);
    const std::vector<double> flux = edge_flux(edges, system.weights, pressures);

    SPState next = state;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        next.conductivity[e] =
            std::max((state.conductivity[e] + dt * std::abs(flux[e])) / (1.0 + dt), kWeightFloor);
    }
    next.iteration = state.iteration + 1;
    return next;
}

namespace {

// Checks whether the given edges form a simple source-sink path covering all
// of them; fills the node sequence when they do.
bool extract_path(const std::vector<std::pair<int, int>>& edges,
                  const std::vector<std::size_t>& selected, int source, int sink,
                  std::vector<int>& path_nodes, std::vector<std::size_t>& path_links) {
    path_nodes.clear();
    path_links.clear();
    if (selected.empty()) {
        return false;
    }
    std::map<int, std::vector<std::pair<int, std::size_t>>> adj;
    for (std::size_t idx : selected) {
        const auto [a, b] = edges[idx];
        adj[a].emplace_back(b, idx);
        adj[b].emplace_back(a, idx);
    }
    if (adj[source].size() != 1 || adj[sink].size() != 1) {
        return false;
    }
    for (const auto& [node, nbrs] : adj) {
        if (node != source && node != sink && nbrs.size() != 2) {
            return false;
        }
    }
    path_nodes.push_back(source);
    int prev = -1;
    int cur = source;
    while (cur != sink) {
        bool advanced = false;
        for (const auto& [nbr, idx] : adj[cur]) {
            if (nbr != prev) {
                path_links.push_back(idx);
                path_nodes.push_back(nbr);
                prev = cur;
                cur = nbr;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            return false;
        }
    }
    if (path_links.size() != selected.size()) {
        return false;  // surviving edges include branches off the walk
    }
    return true;
}

}  // namespace

SPRunResult sp_run(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& nodes,
                   const std::vector<double>& lengths, int source, int sink, double i0,
                   const SPConfig& config) {
    SPState state = sp_init(edges.size(), config.d0);
    SPRunResult result;
    for (int n = 0; n < config.max_iters; ++n) {
        SPState next = sp_step(state, edges, nodes, lengths, source, sink, i0, config.dt);
        double delta = 0.0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            delta = std::max(delta, std::abs(next.conductivity[e] - state.conductivity[e]));
        }
        state = std::move(next);
        if (delta < config.eps) {
            result.converged = true;
            break;
        }
    }
    result.iterations = state.iteration;

    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (state.conductivity[e] > 0.5 * i0) {
            result.threshold_links.push_back(e);
        }
    }
    result.is_path =
        extract_path(edges, result.threshold_links, source, sink, result.path_nodes, result.path_links);
    return result;
}

Path sp_run_network(const Network& net, const std::vector<double>& lengths, int source, int sink,
                    double i0, const SPConfig& config) {
    if (lengths.size() != net.links().size()) {
        throw ValidationError("sp_run_network: one length per link required");
    }
    const SPRunResult result =
        sp_run(net.edge_list(), net.nodes(), lengths, source, sink, i0, config);
    if (!result.is_path) {
        throw NoConvergence("sp_run_network: surviving links do not form a source-sink path (" +
                            std::to_string(result.threshold_links.size()) +
                            " links above threshold after " + std::to_string(result.iterations) +
                            " iterations)");
    }
    Path path;
    path.nodes = result.path_nodes;
    path.links = result.path_links;
    return path;
}

}  // namespace phyta
