#include "phyta/fue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace phyta {

PressureTriple FuzzyPressureField::at(int node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node) {
        return {};
    }
    return p[static_cast<std::size_t>(it - nodes.begin())];
}

void validate_config(const SolverConfig& config) {
    if (!(config.alpha_l >= 0.0 && config.alpha_l < 1.0)) {
        throw ParameterOutOfRange("alpha_l must lie in [0, 1)");
    }
    if (!(config.alpha_r >= 0.0)) {
        throw ParameterOutOfRange("alpha_r must be >= 0");
    }
    if (!(config.dt > 0.0)) {
        throw ParameterOutOfRange("dt must be > 0");
    }
    if (config.max_iters < 0) {
        throw ParameterOutOfRange("iterations must be >= 0");
    }
    if (!(config.eps > 0.0)) {
        throw ParameterOutOfRange("eps must be > 0");
    }
    if (!(config.d0 > 0.0)) {
        throw ParameterOutOfRange("d0 must be > 0");
    }
    if (!(config.bpr_alpha >= 0.0)) {
        throw ParameterOutOfRange("bpr-alpha must be >= 0");
    }
    if (!(config.bpr_beta > 0.0)) {
        throw ParameterOutOfRange("bpr-beta must be > 0");
    }
}

SolverState init_state(const Network& net, const SolverConfig& config) {
    validate_config(config);
    SolverState state;
    state.conductivity.assign(net.links().size(), config.d0);
    state.flow = net.zero_flows();
    state.od_flux.assign(net.demands().size(), net.zero_flows());
    return state;
}

std::vector<TriangularFuzzy> fuzzy_link_costs(const Network& net, const FlowVector& x,
                                              const SolverConfig& config) {
    if (x.size() != net.links().size()) {
        throw ValidationError("fuzzy_link_costs: one flow per link required");
    }
    std::vector<TriangularFuzzy> costs;
    costs.reserve(net.links().size());
    for (std::size_t a = 0; a < net.links().size(); ++a) {
        costs.push_back(fuzzy_link_cost(net.links()[a], x[a], config.alpha_l, config.alpha_r,
                                        config.bpr_alpha, config.bpr_beta));
    }
    return costs;
}

ODSolve solve_od(const Network& net, const std::vector<double>& conductivity,
                 const std::vector<TriangularFuzzy>& costs, const ODDemand& od) {
    const std::size_t m = net.links().size();
    if (conductivity.size() != m || costs.size() != m) {
        throw ValidationError("solve_od: conductivities and costs must cover every link");
    }
    const auto edges = net.edge_list();

    std::vector<double> w_l(m), w_m(m), w_r(m);
    for (std::size_t a = 0; a < m; ++a) {
        if (!(costs[a].a1 > 0.0)) {
            throw ParameterOutOfRange("solve_od: link costs must be positive");
        }
        w_l[a] = conductivity[a] / costs[a].a1;
        w_m[a] = conductivity[a] / costs[a].a2;
        w_r[a] = conductivity[a] / costs[a].a3;
    }

    const PoissonSystem sys_m = assemble(edges, w_m, net.nodes(), od.o, od.d, od.q);
    const PressureField p_l = solve_grounded(assemble(edges, w_l, net.nodes(), od.o, od.d, od.q));
    const PressureField p_m = solve_grounded(sys_m);
    const PressureField p_r = solve_grounded(assemble(edges, w_r, net.nodes(), od.o, od.d, od.q));

    ODSolve out;
    out.pressures.nodes = net.nodes();
    out.pressures.p.reserve(net.nodes().size());
    for (int node : net.nodes()) {
        out.pressures.p.push_back({p_l.at(node), p_m.at(node), p_r.at(node)});
    }
    out.mid_flux = edge_flux(edges, sys_m.weights, p_m);
    return out;
}

FuzzyPressureField aggregate_pressures(const std::vector<FuzzyPressureField>& fields) {
    FuzzyPressureField total;
    if (fields.empty()) {
        return total;
    }
    total.nodes = fields.front().nodes;
    total.p.assign(total.nodes.size(), {});
    for (const FuzzyPressureField& field : fields) {
        if (field.nodes != total.nodes) {
            throw MismatchedNodeSets("aggregate_pressures: fields cover different node sets");
        }
        for (std::size_t k = 0; k < total.p.size(); ++k) {
            total.p[k].l += field.p[k].l;
            total.p[k].m += field.p[k].m;
            total.p[k].r += field.p[k].r;
        }
    }
    return total;
}

double dis_flux(const PressureTriple& pi, const PressureTriple& pj, const TriangularFuzzy& cost,
                double conductivity) {
    if (!(cost.a1 > 0.0)) {
        throw DivisionBySupportContainingZero("dis_flux: cost support must be positive");
    }
    // Each pressure component belongs to the system solved with the matching
    // cost component, so scale componentwise: the resulting triples differ by
    // (Q_l, Q_m, Q_r)/D and dis_tri blends the three per-system fluxes.
    // Cross-dividing the triples instead inflates loaded links by ~20% and
    // drifts the equilibrium well away from the published flow patterns.
    const TriangularFuzzy qi = TriangularFuzzy::sorted(pi.l / cost.a1, pi.m / cost.a2, pi.r / cost.a3);
    const TriangularFuzzy qj = TriangularFuzzy::sorted(pj.l / cost.a1, pj.m / cost.a2, pj.r / cost.a3);
    return conductivity * dis_tri(qi, qj);
}

FlowVector compute_link_flow(const Network& net, const std::vector<double>& conductivity,
                             const FuzzyPressureField& global,
                             const std::vector<TriangularFuzzy>& costs) {
    const std::size_t m = net.links().size();
    if (conductivity.size() != m || costs.size() != m) {
        throw ValidationError("compute_link_flow: conductivities and costs must cover every link");
    }
    FlowVector x(m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        const Link& link = net.links()[a];
        x[a] = dis_flux(global.at(link.i), global.at(link.j), costs[a], conductivity[a]);
    }
    return x;
}

std::vector<double> update_conductivity(const std::vector<double>& conductivity,
                                        const FlowVector& x, double dt) {
    if (conductivity.size() != x.size()) {
        throw ValidationError("update_conductivity: one flow per conductivity required");
    }
    if (!(dt > 0.0)) {
        throw ParameterOutOfRange("update_conductivity: dt must be > 0");
    }
    std::vector<double> next(conductivity.size());
    for (std::size_t a = 0; a < conductivity.size(); ++a) {
        if (x[a] < 0.0) {
            throw NegativeFlow("update_conductivity: flows must be >= 0");
        }
        next[a] = std::max((conductivity[a] + dt * x[a]) / (1.0 + dt), kWeightFloor);
    }
    return next;
}

SolverState fue_step(const Network& net, const SolverState& state, const SolverConfig& config) {
    validate_config(config);
    const std::size_t m = net.links().size();
    if (state.conductivity.size() != m || state.flow.size() != m) {
        throw ValidationError("fue_step: state does not match the network");
    }

    const std::vector<TriangularFuzzy> costs = fuzzy_link_costs(net, state.flow, config);

    SolverState next;
    next.iteration = state.iteration + 1;
    next.od_flux.reserve(net.demands().size());
    std::vector<FuzzyPressureField> fields;
    fields.reserve(net.demands().size());
    for (const ODDemand& od : net.demands()) {
        ODSolve od_solve = solve_od(net, state.conductivity, costs, od);
        fields.push_back(std::move(od_solve.pressures));
        next.od_flux.push_back(std::move(od_solve.mid_flux));
    }
    const FuzzyPressureField global = aggregate_pressures(fields);

    next.flow = compute_link_flow(net, state.conductivity, global, costs);
    next.conductivity = update_conductivity(state.conductivity, next.flow, config.dt);
    return next;
}

std::vector<PathReport> decompose_flow(const Network& net, const ODDemand& od,
                                       const FlowVector& signed_flux) {
    if (signed_flux.size() != net.links().size()) {
        throw ValidationError("decompose_flow: one flux per link required");
    }
    const double tol = std::max(1e-9 * od.q, 1e-12);
    FlowVector residual = signed_flux;
    std::vector<PathReport> out;

    // Peel bottleneck paths. The flux field comes from a grounded solve, so
    // following its direction strictly descends in pressure and cannot cycle;
    // every peel zeroes its bottleneck link exactly.
    while (out.size() <= net.links().size()) {
        std::vector<int> walk{od.o};
        std::vector<std::size_t> walk_links;
        int cur = od.o;
        while (cur != od.d) {
            bool advanced = false;
            for (const auto& [nbr, idx] : net.neighbors(cur)) {
                const double f = residual[idx];
                const bool leaves = (net.links()[idx].i == cur) ? f > tol : f < -tol;
                // revisits can only arise for blended (non-potential) fields;
                // skipping them keeps the walk simple and termination certain
                if (leaves && std::find(walk.begin(), walk.end(), nbr) == walk.end()) {
                    walk.push_back(nbr);
                    walk_links.push_back(idx);
                    cur = nbr;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                break;
            }
        }
        if (cur != od.d || walk_links.empty()) {
            break;
        }
        double bottleneck = std::numeric_limits<double>::infinity();
        for (std::size_t idx : walk_links) {
            bottleneck = std::min(bottleneck, std::abs(residual[idx]));
        }
        for (std::size_t k = 0; k < walk_links.size(); ++k) {
            const std::size_t idx = walk_links[k];
            residual[idx] -= (net.links()[idx].i == walk[k]) ? bottleneck : -bottleneck;
        }
        PathReport report;
        report.o = od.o;
        report.d = od.d;
        report.nodes = std::move(walk);
        report.flow = bottleneck;
        out.push_back(std::move(report));
    }
    return out;
}

double wardrop_gap(const std::vector<ODDemand>& demands, const std::vector<PathReport>& paths) {
    double worst = 0.0;
    for (const ODDemand& od : demands) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (const PathReport& path : paths) {
            if (path.o != od.o || path.d != od.d || path.flow <= 0.005 * od.q) {
                continue;
            }
            const double c = defuzzify_centroid(path.cost);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (std::isfinite(lo) && lo > 0.0) {
            worst = std::max(worst, (hi - lo) / lo);
        }
    }
    return worst;
}

AssignmentResult fue_run(const Network& net, const SolverConfig& config) {
    validate_config(config);
    for (const Link& link : net.links()) {
        if (!(link.c0 > 0.0)) {
            throw ParameterOutOfRange("fue_run: free-flow costs must be > 0");
        }
    }

    SolverState state = init_state(net, config);
    AssignmentResult res;
    for (int n = 0; n < config.max_iters; ++n) {
        SolverState next = fue_step(net, state, config);
        double delta = 0.0;
        for (std::size_t a = 0; a < next.flow.size(); ++a) {
            delta = std::max(delta, std::abs(next.flow[a] - state.flow[a]));
        }
        state = std::move(next);
        if (config.record_trace) {
            for (std::size_t a = 0; a < net.links().size(); ++a) {
                double reported = 0.0;
                for (const FlowVector& od_flux : state.od_flux) {
                    reported += std::abs(od_flux[a]);
                }
                res.trace.push_back({state.iteration, net.links()[a].i, net.links()[a].j, reported,
                                     state.conductivity[a]});
            }
        }
        if (delta < config.eps) {
            res.converged = true;
            break;
        }
    }

    res.iterations = state.iteration;
    res.per_od_flows = state.od_flux;
    res.flows = net.zero_flows();
    for (const FlowVector& od_flux : state.od_flux) {
        for (std::size_t a = 0; a < od_flux.size(); ++a) {
            res.flows[a] += std::abs(od_flux[a]);
        }
    }
    for (std::size_t k = 0; k < net.demands().size(); ++k) {
        for (PathReport& report : decompose_flow(net, net.demands()[k], state.od_flux[k])) {
            const Path path = make_path(net, report.nodes);
            report.cost = fuzzy_path_cost(net, path, res.flows, config.alpha_l, config.alpha_r,
                                          config.bpr_alpha, config.bpr_beta);
            res.paths.push_back(std::move(report));
        }
    }
    res.wardrop_gap = wardrop_gap(net.demands(), res.paths);
    return res;
}

}  // namespace phyta
