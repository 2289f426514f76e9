#ifndef PHYTA_IO_HPP
#define PHYTA_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "phyta/frank_wolfe.hpp"
#include "phyta/fue.hpp"
#include "phyta/network.hpp"

namespace phyta {

/// Per-OD block of a report: the demand plus its signed link flows, ordered
/// like RunReport::links.
struct ODFlowReport {
    int o = 0;
    int d = 0;
    double q = 0.0;
    FlowVector flows;
};

/// Path row of a report: node sequence, fuzzy cost, centroid, carried flow.
struct PathCostReport {
    std::vector<int> nodes;
    TriangularFuzzy triplet;
    double centroid = 0.0;
    double flow = 0.0;
};

/// Assembled run output with links sorted by (i, j) for stable emission.
struct RunReport {
    std::vector<Link> links;
    FlowVector flows;
    std::vector<ODFlowReport> per_od_flows;
    std::vector<PathCostReport> path_costs;
    double wardrop_gap = 0.0;
    int iterations = 0;
    bool converged = false;
    double wall_ms = 0.0;
    std::optional<double> objective;  // crisp baseline only
    std::optional<double> rel_gap;    // crisp baseline only
};

RunReport make_report(const Network& net, const AssignmentResult& result, double wall_ms);
RunReport make_report(const Network& net, const FWResult& result, double wall_ms);

std::string report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);

/// CSV with header iteration,link_i,link_j,flow,conductivity; rows sorted by
/// (iteration, i, j).
std::string trace_to_csv(const std::vector<TraceRow>& trace);

Network network_from_json(const std::string& text, const std::string& context);
std::string network_to_json(const Network& net);

Network load_network(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace phyta

#endif
