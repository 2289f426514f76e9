#include "phyta/laplacian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace phyta {

double PressureField::at(int node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node) {
        return 0.0;
    }
    return p[static_cast<std::size_t>(it - nodes.begin())];
}

PoissonSystem assemble(const std::vector<std::pair<int, int>>& edges,
                       const std::vector<double>& weights, const std::vector<int>& nodes,
                       int source, int sink, double q) {
    if (edges.size() != weights.size()) {
        throw ValidationError("assemble: one weight per edge required");
    }
    if (source == sink) {
        throw ValidationError("assemble: source and sink must differ");
    }
    if (!(q > 0.0)) {
        throw ParameterOutOfRange("assemble: injection must be > 0");
    }
    for (double w : weights) {
        if (!(w > 0.0)) {
            throw ParameterOutOfRange("assemble: weights must be > 0");
        }
    }

    // component of the source over all edges (every weight is positive)
    std::map<int, std::vector<int>> adj;
    for (int n : nodes) {
        adj[n];
    }
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<int, bool> reached;
    std::vector<int> frontier{source};
    reached[source] = true;
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int nbr : adj[v]) {
            if (!reached[nbr]) {
                reached[nbr] = true;
                frontier.push_back(nbr);
            }
        }
    }
    if (!reached[sink]) {
        throw DisconnectedSourceSink("assemble: sink " + std::to_string(sink) +
                                     " is not reachable from source " + std::to_string(source));
    }

    PoissonSystem system;
    for (const auto& [node, in] : reached) {
        if (in) {
            system.nodes.push_back(node);
        }
    }
    system.edges = edges;
    system.weights = weights;
    for (double& w : system.weights) {
        w = std::max(w, kWeightFloor);
    }
    system.source = source;
    system.sink = sink;
    system.q = q;
    return system;
}

PressureField solve_grounded(const PoissonSystem& system) {
    const std::size_t n = system.nodes.size();
    std::map<int, std::size_t> row_of;
    for (std::size_t k = 0; k < n; ++k) {
        row_of[system.nodes[k]] = k;
    }

    // rows: sum_i w_ij (p_i - p_j) = b_j, with b = -q at the source and
    // +q at the sink; the sink row is replaced by the ground constraint
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    for (std::size_t e = 0; e < system.edges.size(); ++e) {
        const auto [u, v] = system.edges[e];
        auto iu = row_of.find(u);
        auto iv = row_of.find(v);
        if (iu == row_of.end() || iv == row_of.end()) {
            continue;  // edge outside the solved component
        }
        const double w = system.weights[e];
        a(iu->second, iv->second) += w;
        a(iu->second, iu->second) -= w;
        a(iv->second, iu->second) += w;
        a(iv->second, iv->second) -= w;
    }
    b(row_of.at(system.source)) = -system.q;
    b(row_of.at(system.sink)) = system.q;

    const std::size_t ground = row_of.at(system.sink);
    Eigen::MatrixXd grounded = a;
    Eigen::VectorXd rhs = b;
    grounded.row(ground).setZero();
    grounded(ground, ground) = 1.0;
    rhs(ground) = 0.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(grounded);
    if (!lu.isInvertible()) {
        throw SingularSystem("solve_grounded: grounded system is singular");
    }
    Eigen::VectorXd p = lu.solve(rhs);
    // one refinement step; weight floors can leave the system badly scaled
    p += lu.solve(rhs - grounded * p);

    PressureField field;
    field.nodes = system.nodes;
    field.p.assign(p.data(), p.data() + n);
    return field;
}

std::vector<double> edge_flux(const std::vector<std::pair<int, int>>& edges,
                              const std::vector<double>& weights, const PressureField& pressures) {
    if (edges.size() != weights.size()) {
        throw ValidationError("edge_flux: one weight per edge required");
    }
    std::vector<double> flux(edges.size(), 0.0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        flux[e] = weights[e] * (pressures.at(edges[e].first) - pressures.at(edges[e].second));
    }
    return flux;
}

}  // namespace phyta
