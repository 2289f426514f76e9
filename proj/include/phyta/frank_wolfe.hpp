#ifndef PHYTA_FRANK_WOLFE_HPP
#define PHYTA_FRANK_WOLFE_HPP

#include <vector>

#include "phyta/fue.hpp"
#include "phyta/network.hpp"

namespace phyta {

struct FWConfig {
    double bpr_alpha = 0.15;
    double bpr_beta = 4.0;
    int max_iters = 100;
    double rel_gap_tol = 1e-4;
    int line_search_iters = 64;
};

struct FWResult {
    FlowVector flows;                      // signed, positive = i -> j
    std::vector<FlowVector> per_od_flows;  // aligned with Network::demands(), signed
    std::vector<PathReport> paths;         // decomposition at the final flows, crisp costs
    double objective = 0.0;
    double rel_gap = 0.0;
    double wardrop_gap = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> objective_trace;  // objective after every flow update
};

/// Beckmann objective: sum over links of the BPR integral from 0 to |x|,
/// in closed form c0*(|x| + alpha*|x|^(beta+1) / ((beta+1)*u^beta)).
double beckmann_objective(const Network& net, const FlowVector& flows, double bpr_alpha = 0.15,
                          double bpr_beta = 4.0);

/// Crisp BPR costs evaluated at |x| per link.
std::vector<double> crisp_link_costs(const Network& net, const FlowVector& flows,
                                     double bpr_alpha = 0.15, double bpr_beta = 4.0);

/// Minimum-cost o-d path under the given positive link costs. Ties are broken
/// toward the smaller next node id, so the result is deterministic and
/// lexicographically smallest among the optimal continuations.
Path min_cost_path(const Network& net, const std::vector<double>& costs, int o, int d);

struct AONResult {
    FlowVector flows;                      // signed
    std::vector<FlowVector> per_od_flows;  // signed
    double total_cost = 0.0;               // sum of q * minimum path cost
};

/// Routes each demand fully onto its current minimum-cost path.
AONResult all_or_nothing(const Network& net, const std::vector<double>& costs);

FWResult fw_solve(const Network& net, const FWConfig& config);

}  // namespace phyta

#endif
