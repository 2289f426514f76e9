#include "phyta/frank_wolfe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <utility>

namespace phyta {

namespace {

void validate_fw_config(const FWConfig& config) {
    if (!(config.bpr_alpha >= 0.0)) {
        throw ParameterOutOfRange("bpr-alpha must be >= 0");
    }
    if (!(config.bpr_beta > 0.0)) {
        throw ParameterOutOfRange("bpr-beta must be > 0");
    }
    if (config.max_iters < 0) {
        throw ParameterOutOfRange("iterations must be >= 0");
    }
    if (!(config.rel_gap_tol > 0.0)) {
        throw ParameterOutOfRange("eps must be > 0");
    }
    if (config.line_search_iters < 1) {
        throw ParameterOutOfRange("line_search_iters must be >= 1");
    }
}

double directional_derivative(const Network& net, const FlowVector& x, const FlowVector& dir,
                              double theta, double bpr_alpha, double bpr_beta) {
    double deriv = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) {
        const double z = x[a] + theta * dir[a];
        const double c = bpr_cost(net.links()[a], std::abs(z), bpr_alpha, bpr_beta);
        const double sign = (z > 0.0) - (z < 0.0);
        deriv += c * sign * dir[a];
    }
    return deriv;
}

}  // namespace

double beckmann_objective(const Network& net, const FlowVector& flows, double bpr_alpha,
                          double bpr_beta) {
    if (flows.size() != net.links().size()) {
        throw ValidationError("beckmann_objective: one flow per link required");
    }
    double total = 0.0;
    for (std::size_t a = 0; a < flows.size(); ++a) {
        const Link& link = net.links()[a];
        const double x = std::abs(flows[a]);
        total += link.c0 * (x + bpr_alpha * std::pow(x, bpr_beta + 1.0) /
                                    ((bpr_beta + 1.0) * std::pow(link.u, bpr_beta)));
    }
    return total;
}

std::vector<double> crisp_link_costs(const Network& net, const FlowVector& flows, double bpr_alpha,
                                     double bpr_beta) {
    if (flows.size() != net.links().size()) {
        throw ValidationError("crisp_link_costs: one flow per link required");
    }
    std::vector<double> costs(flows.size());
    for (std::size_t a = 0; a < flows.size(); ++a) {
        costs[a] = bpr_cost(net.links()[a], std::abs(flows[a]), bpr_alpha, bpr_beta);
    }
    return costs;
}

Path min_cost_path(const Network& net, const std::vector<double>& costs, int o, int d) {
    if (costs.size() != net.links().size()) {
        throw ValidationError("min_cost_path: one cost per link required");
    }
    for (double c : costs) {
        if (!(c > 0.0)) {
            throw ParameterOutOfRange("min_cost_path: link costs must be > 0");
        }
    }
    if (!net.has_node(o) || !net.has_node(d)) {
        throw ValidationError("min_cost_path: endpoints must be network nodes");
    }
    if (o == d) {
        Path trivial;
        trivial.nodes.push_back(o);
        return trivial;
    }

    // Dijkstra from the destination: dist[v] = cheapest v -> d cost.
    const double inf = std::numeric_limits<double>::infinity();
    std::map<int, double> dist;
    for (int n : net.nodes()) {
        dist[n] = inf;
    }
    dist[d] = 0.0;
    using QueueItem = std::pair<double, int>;
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
    queue.push({0.0, d});
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > dist[u]) {
            continue;
        }
        for (const auto& [nbr, idx] : net.neighbors(u)) {
            const double alt = du + costs[idx];
            if (alt < dist[nbr]) {
                dist[nbr] = alt;
                queue.push({alt, nbr});
            }
        }
    }
    if (!(dist[o] < inf)) {
        throw NoPathExists("min_cost_path: no path from " + std::to_string(o) + " to " +
                           std::to_string(d));
    }

    // Greedy descent on the distance labels; scanning neighbors in ascending
    // id order makes the strict '<' keep the smallest node on ties.
    Path path;
    path.nodes.push_back(o);
    int cur = o;
    while (cur != d) {
        double best = inf;
        int best_node = 0;
        std::size_t best_link = 0;
        for (const auto& [nbr, idx] : net.neighbors(cur)) {
            const double through = costs[idx] + dist[nbr];
            if (through < best) {
                best = through;
                best_node = nbr;
                best_link = idx;
            }
        }
        path.nodes.push_back(best_node);
        path.links.push_back(best_link);
        cur = best_node;
    }
    return path;
}

AONResult all_or_nothing(const Network& net, const std::vector<double>& costs) {
    AONResult result;
    result.flows = net.zero_flows();
    result.per_od_flows.assign(net.demands().size(), net.zero_flows());
    for (std::size_t k = 0; k < net.demands().size(); ++k) {
        const ODDemand& od = net.demands()[k];
        const Path path = min_cost_path(net, costs, od.o, od.d);
        for (std::size_t step = 0; step < path.links.size(); ++step) {
            const std::size_t idx = path.links[step];
            const double signed_q = (net.links()[idx].i == path.nodes[step]) ? od.q : -od.q;
            result.flows[idx] += signed_q;
            result.per_od_flows[k][idx] += signed_q;
            result.total_cost += od.q * costs[idx];
        }
    }
    return result;
}

FWResult fw_solve(const Network& net, const FWConfig& config) {
    validate_fw_config(config);

    FWResult res;
    const std::vector<double> free_costs =
        crisp_link_costs(net, net.zero_flows(), config.bpr_alpha, config.bpr_beta);
    AONResult aon = all_or_nothing(net, free_costs);
    res.flows = std::move(aon.flows);
    res.per_od_flows = std::move(aon.per_od_flows);
    res.objective_trace.push_back(
        beckmann_objective(net, res.flows, config.bpr_alpha, config.bpr_beta));

    auto evaluate = [&](std::vector<double>& costs, AONResult& target) {
        costs = crisp_link_costs(net, res.flows, config.bpr_alpha, config.bpr_beta);
        target = all_or_nothing(net, costs);
        double tstt = 0.0;
        for (std::size_t a = 0; a < res.flows.size(); ++a) {
            tstt += costs[a] * std::abs(res.flows[a]);
        }
        return tstt > 0.0 ? (tstt - target.total_cost) / tstt : 0.0;
    };

    std::vector<double> costs;
    double gap = evaluate(costs, aon);
    while (res.iterations < config.max_iters && gap >= config.rel_gap_tol) {
        FlowVector dir(res.flows.size());
        for (std::size_t a = 0; a < dir.size(); ++a) {
            dir[a] = aon.flows[a] - res.flows[a];
        }
        double lo = 0.0;
        double hi = 1.0;
        if (directional_derivative(net, res.flows, dir, 1.0, config.bpr_alpha, config.bpr_beta) <=
            0.0) {
            lo = 1.0;
        } else {
            for (int k = 0; k < config.line_search_iters; ++k) {
                const double mid = 0.5 * (lo + hi);
                if (directional_derivative(net, res.flows, dir, mid, config.bpr_alpha,
                                           config.bpr_beta) < 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        }
        const double theta = lo;
        for (std::size_t a = 0; a < res.flows.size(); ++a) {
            res.flows[a] += theta * dir[a];
        }
        for (std::size_t k = 0; k < res.per_od_flows.size(); ++k) {
            for (std::size_t a = 0; a < res.flows.size(); ++a) {
                res.per_od_flows[k][a] += theta * (aon.per_od_flows[k][a] - res.per_od_flows[k][a]);
            }
        }
        ++res.iterations;
        res.objective_trace.push_back(
            beckmann_objective(net, res.flows, config.bpr_alpha, config.bpr_beta));
        gap = evaluate(costs, aon);
    }

    res.converged = gap < config.rel_gap_tol;
    res.rel_gap = gap;
    res.objective = res.objective_trace.back();
    for (std::size_t k = 0; k < net.demands().size(); ++k) {
        for (PathReport& report : decompose_flow(net, net.demands()[k], res.per_od_flows[k])) {
            double path_cost = 0.0;
            for (std::size_t idx : make_path(net, report.nodes).links) {
                path_cost += costs[idx];
            }
            report.cost = TriangularFuzzy::crisp(path_cost);
            res.paths.push_back(std::move(report));
        }
    }
    res.wardrop_gap = wardrop_gap(net.demands(), res.paths);
    return res;
}

}  // namespace phyta
