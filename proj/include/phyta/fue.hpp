#ifndef PHYTA_FUE_HPP
#define PHYTA_FUE_HPP

#include <cstddef>
#include <vector>

#include "phyta/fuzzy.hpp"
#include "phyta/laplacian.hpp"
#include "phyta/network.hpp"

namespace phyta {

struct SolverConfig {
    double alpha_l = 0.2;  // left spread of fuzzy link costs
    double alpha_r = 0.2;  // right spread
    double dt = 1.0;
    int max_iters = 100;
    double eps = 1e-4;  // stop when flows move less than this
    double d0 = 1.0;    // initial conductivity
    double bpr_alpha = 0.15;
    double bpr_beta = 4.0;
    bool record_trace = false;
};

/// Pressures of the three grounded systems solved with edge weights
/// D/c_left, D/c_mid, D/c_right. The triple is kept raw: it need not be
/// ordered, and the fuzzy division that consumes it sorts afterwards.
struct PressureTriple {
    double l = 0.0;
    double m = 0.0;
    double r = 0.0;
};

struct FuzzyPressureField {
    std::vector<int> nodes;  // sorted
    std::vector<PressureTriple> p;

    PressureTriple at(int node) const;
};

/// Pressures and middle-system flux for a single OD pair.
struct ODSolve {
    FuzzyPressureField pressures;
    FlowVector mid_flux;  // signed, Kirchhoff-exact for this OD
};

struct SolverState {
    std::vector<double> conductivity;   // per link
    FlowVector flow;                    // distance-based flux x, drives the dynamics
    std::vector<FlowVector> od_flux;    // per demand: signed middle-system flux
    int iteration = 0;
};

struct TraceRow {
    int iteration = 0;
    int link_i = 0;
    int link_j = 0;
    double flow = 0.0;
    double conductivity = 0.0;
};

struct PathReport {
    int o = 0;
    int d = 0;
    std::vector<int> nodes;
    double flow = 0.0;
    TriangularFuzzy cost;
};

struct AssignmentResult {
    FlowVector flows;                      // per link, sum of per-OD magnitudes
    std::vector<FlowVector> per_od_flows;  // aligned with Network::demands(), signed
    std::vector<PathReport> paths;
    double wardrop_gap = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<TraceRow> trace;
};

void validate_config(const SolverConfig& config);

SolverState init_state(const Network& net, const SolverConfig& config);

/// Triangular link costs at the given flows:
/// (c(x(1-alpha_l)), c(x), c(x(1+alpha_r))) with the configured BPR curve.
std::vector<TriangularFuzzy> fuzzy_link_costs(const Network& net, const FlowVector& x,
                                              const SolverConfig& config);

/// Solves the three grounded systems for one OD pair (injection q at the
/// origin, ground at the destination) and the middle-system edge flux.
ODSolve solve_od(const Network& net, const std::vector<double>& conductivity,
                 const std::vector<TriangularFuzzy>& costs, const ODDemand& od);

/// Componentwise sum of per-OD pressure fields over identical node sets.
FuzzyPressureField aggregate_pressures(const std::vector<FuzzyPressureField>& fields);

/// Distance-based flux of one link: D * Dis(p_i / c, p_j / c) with the fuzzy
/// division applied to the raw triples and each quotient sorted.
double dis_flux(const PressureTriple& pi, const PressureTriple& pj, const TriangularFuzzy& cost,
                double conductivity);

/// dis_flux applied across the network for a global pressure field.
FlowVector compute_link_flow(const Network& net, const std::vector<double>& conductivity,
                             const FuzzyPressureField& global,
                             const std::vector<TriangularFuzzy>& costs);

/// Semi-implicit relaxation D' = (D + dt * x) / (1 + dt), floored.
std::vector<double> update_conductivity(const std::vector<double>& conductivity,
                                        const FlowVector& x, double dt);

/// One sweep: costs from state.flow, per-OD solves on state.conductivity,
/// global pressures, distance flux, conductivity relaxation.
SolverState fue_step(const Network& net, const SolverState& state, const SolverConfig& config);

/// Splits one OD's signed link flux into simple path flows. The flux of a
/// grounded solve is acyclic, so peeling bottleneck paths terminates.
std::vector<PathReport> decompose_flow(const Network& net, const ODDemand& od,
                                       const FlowVector& signed_flux);

/// Largest relative spread of centroid-defuzzified path costs among the
/// used paths (flow > 0.5% of demand) of any OD pair.
double wardrop_gap(const std::vector<ODDemand>& demands, const std::vector<PathReport>& paths);

AssignmentResult fue_run(const Network& net, const SolverConfig& config);

}  // namespace phyta

#endif
