#include "phyta/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace phyta {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.10g", v);
    return buffer;
}

// permutation of link indices ordered by (i, j); reports never use raw order
std::vector<std::size_t> sorted_order(const std::vector<Link>& links) {
    std::vector<std::size_t> order(links.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair{links[a].i, links[a].j} < std::pair{links[b].i, links[b].j};
    });
    return order;
}

RunReport base_report(const Network& net) {
    RunReport report;
    const auto order = sorted_order(net.links());
    report.links.reserve(order.size());
    for (std::size_t idx : order) {
        report.links.push_back(net.links()[idx]);
    }
    return report;
}

void fill_flows(const Network& net, const FlowVector& flows,
                const std::vector<FlowVector>& per_od, RunReport& report) {
    const auto order = sorted_order(net.links());
    report.flows.reserve(order.size());
    for (std::size_t idx : order) {
        report.flows.push_back(flows[idx]);
    }
    for (std::size_t k = 0; k < net.demands().size(); ++k) {
        ODFlowReport od;
        od.o = net.demands()[k].o;
        od.d = net.demands()[k].d;
        od.q = net.demands()[k].q;
        od.flows.reserve(order.size());
        for (std::size_t idx : order) {
            od.flows.push_back(per_od[k][idx]);
        }
        report.per_od_flows.push_back(std::move(od));
    }
}

void fill_paths(const std::vector<PathReport>& paths, RunReport& report) {
    for (const PathReport& path : paths) {
        PathCostReport row;
        row.nodes = path.nodes;
        row.triplet = path.cost;
        row.centroid = defuzzify_centroid(path.cost);
        row.flow = path.flow;
        report.path_costs.push_back(std::move(row));
    }
}

std::string path_label(const std::vector<int>& nodes) {
    std::string label;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k) {
            label += "-";
        }
        label += std::to_string(nodes[k]);
    }
    return label;
}

int require_int(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(where + ": missing or non-integer field '" + key + "'");
    }
    return j[key].get<int>();
}

double require_number(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ParseError(where + ": missing or non-numeric field '" + key + "'");
    }
    return j[key].get<double>();
}

}  // namespace

RunReport make_report(const Network& net, const AssignmentResult& result, double wall_ms) {
    RunReport report = base_report(net);
    fill_flows(net, result.flows, result.per_od_flows, report);
    fill_paths(result.paths, report);
    report.wardrop_gap = result.wardrop_gap;
    report.iterations = result.iterations;
    report.converged = result.converged;
    report.wall_ms = wall_ms;
    return report;
}

RunReport make_report(const Network& net, const FWResult& result, double wall_ms) {
    RunReport report = base_report(net);
    FlowVector magnitudes(result.flows.size());
    for (std::size_t a = 0; a < result.flows.size(); ++a) {
        magnitudes[a] = std::abs(result.flows[a]);
    }
    fill_flows(net, magnitudes, result.per_od_flows, report);
    fill_paths(result.paths, report);
    report.wardrop_gap = result.wardrop_gap;
    report.iterations = result.iterations;
    report.converged = result.converged;
    report.wall_ms = wall_ms;
    report.objective = result.objective;
    report.rel_gap = result.rel_gap;
    return report;
}

std::string report_to_json(const RunReport& report) {
    json j;
    j["flows"] = json::array();
    for (std::size_t a = 0; a < report.links.size(); ++a) {
        j["flows"].push_back(
            {{"i", report.links[a].i}, {"j", report.links[a].j}, {"flow", report.flows[a]}});
    }
    j["per_od_flows"] = json::array();
    for (const ODFlowReport& od : report.per_od_flows) {
        json rows = json::array();
        for (std::size_t a = 0; a < report.links.size(); ++a) {
            rows.push_back(
                {{"i", report.links[a].i}, {"j", report.links[a].j}, {"flow", od.flows[a]}});
        }
        j["per_od_flows"].push_back(
            {{"o", od.o}, {"d", od.d}, {"q", od.q}, {"flows", std::move(rows)}});
    }
    j["path_costs"] = json::array();
    for (const PathCostReport& row : report.path_costs) {
        j["path_costs"].push_back({{"path", row.nodes},
                                   {"triplet", {row.triplet.a1, row.triplet.a2, row.triplet.a3}},
                                   {"centroid", row.centroid},
                                   {"flow", row.flow}});
    }
    j["wardrop_gap"] = report.wardrop_gap;
    j["iterations"] = report.iterations;
    j["converged"] = report.converged;
    j["wall_time_ms"] = report.wall_ms;
    if (report.objective) {
        j["objective"] = *report.objective;
    }
    if (report.rel_gap) {
        j["rel_gap"] = *report.rel_gap;
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const RunReport& report) {
    std::ostringstream out;
    out << "link flows\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %-10s %14s\n", "link", "flow");
    out << line;
    for (std::size_t a = 0; a < report.links.size(); ++a) {
        const std::string name =
            "(" + std::to_string(report.links[a].i) + "," + std::to_string(report.links[a].j) + ")";
        std::snprintf(line, sizeof(line), "  %-10s %14.4f\n", name.c_str(), report.flows[a]);
        out << line;
    }
    if (!report.path_costs.empty()) {
        out << "path costs\n";
        std::snprintf(line, sizeof(line), "  %-18s %12s %34s %12s\n", "path", "flow", "cost",
                      "centroid");
        out << line;
        for (const PathCostReport& row : report.path_costs) {
            const std::string triplet = "(" + fmt(row.triplet.a1) + ", " + fmt(row.triplet.a2) +
                                        ", " + fmt(row.triplet.a3) + ")";
            std::snprintf(line, sizeof(line), "  %-18s %12.4f %34s %12.4f\n",
                          path_label(row.nodes).c_str(), row.flow, triplet.c_str(), row.centroid);
            out << line;
        }
    }
    out << "wardrop gap: " << fmt(report.wardrop_gap) << "\n";
    out << "iterations: " << report.iterations << (report.converged ? " (converged)" : "") << "\n";
    if (report.objective) {
        out << "objective: " << fmt(*report.objective) << "\n";
    }
    if (report.rel_gap) {
        out << "relative gap: " << fmt(*report.rel_gap) << "\n";
    }
    std::snprintf(line, sizeof(line), "wall time: %.1f ms\n", report.wall_ms);
    out << line;
    return out.str();
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::vector<std::size_t> order(trace.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tuple{trace[a].iteration, trace[a].link_i, trace[a].link_j} <
               std::tuple{trace[b].iteration, trace[b].link_i, trace[b].link_j};
    });
    std::string csv = "iteration,link_i,link_j,flow,conductivity\n";
    for (std::size_t idx : order) {
        const TraceRow& row = trace[idx];
        csv += std::to_string(row.iteration);
        csv += ",";
        csv += std::to_string(row.link_i);
        csv += ",";
        csv += std::to_string(row.link_j);
        csv += ",";
        csv += fmt(row.flow);
        csv += ",";
        csv += fmt(row.conductivity);
        csv += "\n";
    }
    return csv;
}

Network network_from_json(const std::string& text, const std::string& context) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(context + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ParseError(context + ": top level must be an object");
    }
    for (const char* key : {"nodes", "links", "demands"}) {
        if (!j.contains(key) || !j[key].is_array()) {
            throw ParseError(context + ": missing array field '" + key + "'");
        }
    }

    std::vector<int> nodes;
    for (std::size_t k = 0; k < j["nodes"].size(); ++k) {
        if (!j["nodes"][k].is_number_integer()) {
            throw ParseError(context + ": nodes[" + std::to_string(k) + "] must be an integer");
        }
        nodes.push_back(j["nodes"][k].get<int>());
    }
    std::vector<Link> links;
    for (std::size_t k = 0; k < j["links"].size(); ++k) {
        const std::string where = context + ": links[" + std::to_string(k) + "]";
        const json& row = j["links"][k];
        links.push_back({require_int(row, where, "i"), require_int(row, where, "j"),
                         require_number(row, where, "c0"), require_number(row, where, "u")});
    }
    std::vector<ODDemand> demands;
    for (std::size_t k = 0; k < j["demands"].size(); ++k) {
        const std::string where = context + ": demands[" + std::to_string(k) + "]";
        const json& row = j["demands"][k];
        demands.push_back({require_int(row, where, "o"), require_int(row, where, "d"),
                           require_number(row, where, "q")});
    }
    try {
        return Network(std::move(nodes), std::move(links), std::move(demands));
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    }
}

std::string network_to_json(const Network& net) {
    json j;
    j["nodes"] = net.nodes();
    j["links"] = json::array();
    for (const Link& link : net.links()) {
        j["links"].push_back({{"i", link.i}, {"j", link.j}, {"c0", link.c0}, {"u", link.u}});
    }
    j["demands"] = json::array();
    for (const ODDemand& od : net.demands()) {
        j["demands"].push_back({{"o", od.o}, {"d", od.d}, {"q", od.q}});
    }
    return j.dump(2) + "\n";
}

Network load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return network_from_json(buffer.str(), path);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError(path + ": cannot open for writing");
    }
    out << content;
}

}  // namespace phyta
