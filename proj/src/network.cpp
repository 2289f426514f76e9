#include "phyta/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace phyta {

namespace {

void validate_flow_size(const Network& net, const FlowVector& flows, const char* what) {
    if (flows.size() != net.links().size()) {
        throw ValidationError(std::string(what) + ": flow vector size does not match link count");
    }
}

}  // namespace

Network::Network(std::vector<int> nodes, std::vector<Link> links, std::vector<ODDemand> demands)
    : nodes_(std::move(nodes)), links_(std::move(links)), demands_(std::move(demands)) {
    std::sort(nodes_.begin(), nodes_.end());
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
        throw ValidationError("duplicate node id");
    }

    std::set<std::pair<int, int>> seen;
    for (std::size_t idx = 0; idx < links_.size(); ++idx) {
        const Link& l = links_[idx];
        const std::string tag = "link " + std::to_string(l.i) + "-" + std::to_string(l.j);
        if (!has_node(l.i) || !has_node(l.j)) {
            throw ValidationError(tag + ": endpoint is not a declared node");
        }
        if (l.i == l.j) {
            throw ValidationError(tag + ": self-loops are not allowed");
        }
        if (!(l.c0 >= 0.0)) {
            throw ValidationError(tag + ": free-flow cost must be >= 0");
        }
        if (!(l.u > 0.0)) {
            throw ValidationError(tag + ": capacity must be > 0");
        }
        auto key = std::minmax(l.i, l.j);
        if (!seen.insert(key).second) {
            throw ValidationError(tag + ": duplicate link for this node pair");
        }
        adjacency_[l.i].emplace_back(l.j, idx);
        adjacency_[l.j].emplace_back(l.i, idx);
    }
    for (auto& [node, nbrs] : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }

    for (const ODDemand& od : demands_) {
        const std::string tag = "demand " + std::to_string(od.o) + "->" + std::to_string(od.d);
        if (!has_node(od.o) || !has_node(od.d)) {
            throw ValidationError(tag + ": endpoint is not a declared node");
        }
        if (od.o == od.d) {
            throw ValidationError(tag + ": origin equals destination");
        }
        if (!(od.q > 0.0)) {
            throw ValidationError(tag + ": trips must be > 0");
        }
        // routability: BFS from the origin
        std::set<int> visited{od.o};
        std::vector<int> frontier{od.o};
        while (!frontier.empty() && !visited.count(od.d)) {
            int v = frontier.back();
            frontier.pop_back();
            for (const auto& [nbr, link_idx] : neighbors(v)) {
                (void)link_idx;
                if (visited.insert(nbr).second) {
                    frontier.push_back(nbr);
                }
            }
        }
        if (!visited.count(od.d)) {
            throw ValidationError(tag + ": no path connects origin and destination");
        }
    }
}

bool Network::has_node(int id) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::optional<std::size_t> Network::find_link(int a, int b) const {
    auto it = adjacency_.find(a);
    if (it == adjacency_.end()) {
        return std::nullopt;
    }
    for (const auto& [nbr, idx] : it->second) {
        if (nbr == b) {
            return idx;
        }
    }
    return std::nullopt;
}

const std::vector<std::pair<int, std::size_t>>& Network::neighbors(int node) const {
    static const std::vector<std::pair<int, std::size_t>> kEmpty;
    auto it = adjacency_.find(node);
    return it == adjacency_.end() ? kEmpty : it->second;
}

std::vector<std::pair<int, int>> Network::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(links_.size());
    for (const Link& l : links_) {
        edges.emplace_back(l.i, l.j);
    }
    return edges;
}

double bpr_cost(const Link& link, double x, double alpha, double beta) {
    if (x < 0.0) {
        throw NegativeFlow("bpr_cost: flow must be >= 0");
    }
    return link.c0 * (1.0 + alpha * std::pow(x / link.u, beta));
}

TriangularFuzzy fuzzy_link_cost(const Link& link, double x, double alpha_l, double alpha_r,
                                double bpr_alpha, double bpr_beta) {
    if (!(alpha_l >= 0.0 && alpha_l < 1.0)) {
        throw ParameterOutOfRange("fuzzy_link_cost: alpha_l must lie in [0, 1)");
    }
    if (!(alpha_r >= 0.0)) {
        throw ParameterOutOfRange("fuzzy_link_cost: alpha_r must be >= 0");
    }
    return {bpr_cost(link, (1.0 - alpha_l) * x, bpr_alpha, bpr_beta),
            bpr_cost(link, x, bpr_alpha, bpr_beta),
            bpr_cost(link, (1.0 + alpha_r) * x, bpr_alpha, bpr_beta)};
}

TriangularFuzzy fuzzy_path_cost(const Network& net, const Path& path, const FlowVector& flows,
                                double alpha_l, double alpha_r, double bpr_alpha, double bpr_beta) {
    validate_flow_size(net, flows, "fuzzy_path_cost");
    TriangularFuzzy total;
    for (std::size_t idx : path.links) {
        if (idx >= net.links().size()) {
            throw PathNotInNetwork("fuzzy_path_cost: link index out of range");
        }
        total = tri_add(total, fuzzy_link_cost(net.links()[idx], flows[idx], alpha_l, alpha_r,
                                               bpr_alpha, bpr_beta));
    }
    return total;
}

Path make_path(const Network& net, const std::vector<int>& node_sequence) {
    Path path;
    path.nodes = node_sequence;
    std::set<int> seen(node_sequence.begin(), node_sequence.end());
    if (seen.size() != node_sequence.size()) {
        throw PathNotInNetwork("make_path: node sequence repeats a node");
    }
    for (std::size_t k = 0; k + 1 < node_sequence.size(); ++k) {
        auto idx = net.find_link(node_sequence[k], node_sequence[k + 1]);
        if (!idx) {
            throw PathNotInNetwork("make_path: no link between " + std::to_string(node_sequence[k]) +
                                   " and " + std::to_string(node_sequence[k + 1]));
        }
        path.links.push_back(*idx);
    }
    return path;
}

std::vector<Path> enumerate_paths(const Network& net, const ODDemand& od, int max_hops) {
    if (max_hops < 1) {
        throw ParameterOutOfRange("enumerate_paths: max_hops must be >= 1");
    }
    if (!net.has_node(od.o) || !net.has_node(od.d) || od.o == od.d) {
        throw ValidationError("enumerate_paths: invalid od pair");
    }

    std::vector<Path> out;
    std::vector<int> stack_nodes{od.o};
    std::vector<std::size_t> stack_links;
    std::set<int> on_path{od.o};

    // neighbors() is ascending, so depth-first emission is lexicographic
    auto dfs = [&](auto&& self, int node) -> void {
        if (node == od.d) {
            out.push_back(Path{stack_nodes, stack_links});
            return;
        }
        if (static_cast<int>(stack_links.size()) >= max_hops) {
            return;
        }
        for (const auto& [nbr, idx] : net.neighbors(node)) {
            if (on_path.count(nbr)) {
                continue;
            }
            stack_nodes.push_back(nbr);
            stack_links.push_back(idx);
            on_path.insert(nbr);
            self(self, nbr);
            on_path.erase(nbr);
            stack_links.pop_back();
            stack_nodes.pop_back();
        }
    };
    dfs(dfs, od.o);

    if (out.empty()) {
        throw NoPathExists("enumerate_paths: no path from " + std::to_string(od.o) + " to " +
                           std::to_string(od.d) + " within " + std::to_string(max_hops) + " hops");
    }
    return out;
}

std::vector<Path> enumerate_paths(const Network& net, const ODDemand& od) {
    return enumerate_paths(net, od, static_cast<int>(net.nodes().size()) - 1);
}

ConservationReport conservation_report(const Network& net, const FlowVector& signed_flows,
                                       const std::map<int, double>& injections) {
    validate_flow_size(net, signed_flows, "conservation_report");
    std::map<int, double> net_out;
    for (int n : net.nodes()) {
        net_out[n] = 0.0;
    }
    for (std::size_t idx = 0; idx < net.links().size(); ++idx) {
        const Link& l = net.links()[idx];
        net_out[l.i] += signed_flows[idx];
        net_out[l.j] -= signed_flows[idx];
    }
    ConservationReport report;
    for (const auto& [node, out] : net_out) {
        double expected = 0.0;
        if (auto it = injections.find(node); it != injections.end()) {
            expected = it->second;
        }
        const double violation = std::abs(out - expected);
        if (violation > report.max_violation) {
            report.max_violation = violation;
            report.worst_node = node;
        }
    }
    return report;
}

double check_conservation(const Network& net,
                          const std::vector<std::pair<ODDemand, FlowVector>>& per_od_flows) {
    double worst = 0.0;
    for (const auto& [od, flows] : per_od_flows) {
        const std::map<int, double> inj{{od.o, od.q}, {od.d, -od.q}};
        worst = std::max(worst, conservation_report(net, flows, inj).max_violation);
    }
    return worst;
}

}  // namespace phyta
