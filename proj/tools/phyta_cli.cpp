#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "phyta/fixtures.hpp"
#include "phyta/frank_wolfe.hpp"
#include "phyta/fue.hpp"
#include "phyta/io.hpp"
#include "phyta/physarum_sp.hpp"

namespace {

using nlohmann::json;

struct Args {
    std::string network_path;
    std::string fixture;
    std::string out_dir = ".";
    double alpha_l = 0.2;
    double alpha_r = 0.2;
    double dt = 1.0;
    int iterations = 100;
    double eps = 1e-4;
    double bpr_alpha = 0.15;
    double bpr_beta = 4.0;
    bool trace = false;
};

void add_common(CLI::App* cmd, Args& args) {
    auto* net = cmd->add_option("--network", args.network_path, "network JSON file");
    auto* fix = cmd->add_option("--fixture", args.fixture, "built-in network (ramazani4, ghatee13)");
    net->excludes(fix);
    fix->excludes(net);
    cmd->add_option("--alpha-l", args.alpha_l, "left spread of fuzzy link costs")
        ->capture_default_str();
    cmd->add_option("--alpha-r", args.alpha_r, "right spread of fuzzy link costs")
        ->capture_default_str();
    cmd->add_option("--dt", args.dt, "conductivity relaxation step")->capture_default_str();
    cmd->add_option("--iterations", args.iterations, "iteration budget")->capture_default_str();
    cmd->add_option("--eps", args.eps, "stopping tolerance")->capture_default_str();
    cmd->add_option("--bpr-alpha", args.bpr_alpha, "BPR alpha")->capture_default_str();
    cmd->add_option("--bpr-beta", args.bpr_beta, "BPR beta")->capture_default_str();
    cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
    cmd->add_flag("--trace", args.trace, "also write per-iteration trace.csv");
}

phyta::Network load(const Args& args) {
    if (!args.fixture.empty()) {
        return phyta::load_fixture(args.fixture);
    }
    if (!args.network_path.empty()) {
        return phyta::load_network(args.network_path);
    }
    throw phyta::ValidationError("one of --network or --fixture is required");
}

std::filesystem::path ensure_out_dir(const Args& args) {
    std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw phyta::ValidationError(args.out_dir + ": cannot create output directory");
    }
    return dir;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int run_fuzzy_assign(const Args& args) {
    const phyta::Network net = load(args);
    phyta::SolverConfig cfg;
    cfg.alpha_l = args.alpha_l;
    cfg.alpha_r = args.alpha_r;
    cfg.dt = args.dt;
    cfg.max_iters = args.iterations;
    cfg.eps = args.eps;
    cfg.bpr_alpha = args.bpr_alpha;
    cfg.bpr_beta = args.bpr_beta;
    cfg.record_trace = args.trace;

    const auto start = std::chrono::steady_clock::now();
    const phyta::AssignmentResult result = phyta::fue_run(net, cfg);
    const phyta::RunReport report = phyta::make_report(net, result, elapsed_ms(start));

    const auto dir = ensure_out_dir(args);
    phyta::write_file((dir / "report.json").string(), phyta::report_to_json(report));
    const std::string text = phyta::report_to_text(report);
    phyta::write_file((dir / "report.txt").string(), text);
    if (args.trace) {
        phyta::write_file((dir / "trace.csv").string(), phyta::trace_to_csv(result.trace));
    }
    std::cout << text;
    return 0;
}

int run_crisp_assign(const Args& args) {
    const phyta::Network net = load(args);
    phyta::FWConfig cfg;
    cfg.bpr_alpha = args.bpr_alpha;
    cfg.bpr_beta = args.bpr_beta;
    cfg.max_iters = args.iterations;
    cfg.rel_gap_tol = args.eps;

    const auto start = std::chrono::steady_clock::now();
    const phyta::FWResult result = phyta::fw_solve(net, cfg);
    const phyta::RunReport report = phyta::make_report(net, result, elapsed_ms(start));

    const auto dir = ensure_out_dir(args);
    phyta::write_file((dir / "report.json").string(), phyta::report_to_json(report));
    const std::string text = phyta::report_to_text(report);
    phyta::write_file((dir / "report.txt").string(), text);
    if (args.trace) {
        std::string csv = "iteration,objective\n";
        for (std::size_t k = 0; k < result.objective_trace.size(); ++k) {
            char line[64];
            std::snprintf(line, sizeof(line), "%zu,%.10g\n", k, result.objective_trace[k]);
            csv += line;
        }
        phyta::write_file((dir / "trace.csv").string(), csv);
    }
    std::cout << text;
    return 0;
}

int run_shortest_path(const Args& args, const CLI::App* cmd) {
    const phyta::Network net = load(args);
    phyta::SPConfig cfg;  // module defaults unless flags were given explicitly
    if (cmd->count("--dt")) {
        cfg.dt = args.dt;
    }
    if (cmd->count("--eps")) {
        cfg.eps = args.eps;
    }
    if (cmd->count("--iterations")) {
        cfg.max_iters = args.iterations;
    }

    std::vector<double> lengths;
    lengths.reserve(net.links().size());
    for (const phyta::Link& link : net.links()) {
        lengths.push_back(link.c0);
    }

    json j;
    j["paths"] = json::array();
    std::string text;
    for (const phyta::ODDemand& od : net.demands()) {
        const phyta::SPRunResult run =
            phyta::sp_run(net.edge_list(), net.nodes(), lengths, od.o, od.d, 1.0, cfg);
        json entry;
        entry["o"] = od.o;
        entry["d"] = od.d;
        entry["converged"] = run.converged;
        entry["is_path"] = run.is_path;
        entry["iterations"] = run.iterations;
        text += std::to_string(od.o) + " -> " + std::to_string(od.d) + ": ";
        if (run.is_path) {
            double length = 0.0;
            for (std::size_t idx : run.path_links) {
                length += lengths[idx];
            }
            entry["nodes"] = run.path_nodes;
            entry["length"] = length;
            for (std::size_t k = 0; k < run.path_nodes.size(); ++k) {
                text += (k ? "-" : "") + std::to_string(run.path_nodes[k]);
            }
            char buffer[48];
            std::snprintf(buffer, sizeof(buffer), "  (length %.6g)\n", length);
            text += buffer;
        } else {
            json survivors = json::array();
            text += "no single path emerged; surviving links:";
            for (std::size_t idx : run.threshold_links) {
                const phyta::Link& link = net.links()[idx];
                survivors.push_back({{"i", link.i}, {"j", link.j}});
                text += " (" + std::to_string(link.i) + "," + std::to_string(link.j) + ")";
            }
            entry["threshold_links"] = std::move(survivors);
            text += "\n";
        }
        j["paths"].push_back(std::move(entry));
    }

    const auto dir = ensure_out_dir(args);
    phyta::write_file((dir / "report.json").string(), j.dump(2) + "\n");
    phyta::write_file((dir / "report.txt").string(), text);
    std::cout << text;
    return 0;
}

int run_compare(const Args& args) {
    if (args.fixture.empty()) {
        throw phyta::ValidationError("compare requires --fixture (recorded rows exist only for "
                                     "built-in networks)");
    }
    const phyta::Network net = load(args);
    const phyta::RecordedReference& ref = phyta::fixture_reference(args.fixture);

    phyta::SolverConfig cfg;
    cfg.alpha_l = args.alpha_l;
    cfg.alpha_r = args.alpha_r;
    cfg.dt = args.dt;
    cfg.max_iters = args.iterations;
    cfg.eps = args.eps;
    cfg.bpr_alpha = args.bpr_alpha;
    cfg.bpr_beta = args.bpr_beta;
    const phyta::AssignmentResult result = phyta::fue_run(net, cfg);

    json j;
    std::string text = "flows (" + args.fixture + ")\n";
    {
        char line[160];
        std::string header = "  link      computed";
        for (const phyta::RecordedFlowRow& row : ref.flow_rows) {
            std::snprintf(line, sizeof(line), " %12s", row.label.c_str());
            header += line;
        }
        text += header + "\n";
        j["flows"] = json::array();
        for (std::size_t a = 0; a < net.links().size(); ++a) {
            const phyta::Link& link = net.links()[a];
            json entry{{"i", link.i}, {"j", link.j}, {"computed", result.flows[a]}};
            const std::string name =
                "(" + std::to_string(link.i) + "," + std::to_string(link.j) + ")";
            std::snprintf(line, sizeof(line), "  %-9s %9.2f", name.c_str(), result.flows[a]);
            std::string row_text = line;
            for (const phyta::RecordedFlowRow& row : ref.flow_rows) {
                entry[row.label] = row.flows[a];
                std::snprintf(line, sizeof(line), " %12.2f", row.flows[a]);
                row_text += line;
            }
            text += row_text + "\n";
            j["flows"].push_back(std::move(entry));
        }
    }

    text += "path costs\n";
    j["path_costs"] = json::array();
    for (const phyta::RecordedPathCost& rec : ref.path_costs) {
        const phyta::Path path = phyta::make_path(net, rec.nodes);
        const phyta::TriangularFuzzy computed = phyta::fuzzy_path_cost(
            net, path, result.flows, cfg.alpha_l, cfg.alpha_r, cfg.bpr_alpha, cfg.bpr_beta);
        json entry;
        entry["path"] = rec.nodes;
        entry["computed"] = {computed.a1, computed.a2, computed.a3};
        entry["computed_centroid"] = phyta::defuzzify_centroid(computed);
        std::string label;
        for (std::size_t k = 0; k < rec.nodes.size(); ++k) {
            label += (k ? "-" : "") + std::to_string(rec.nodes[k]);
        }
        char line[200];
        std::snprintf(line, sizeof(line), "  %-14s computed (%.4f, %.4f, %.4f)", label.c_str(),
                      computed.a1, computed.a2, computed.a3);
        std::string row_text = line;
        if (rec.triplet) {
            entry["recorded"] = {rec.triplet->a1, rec.triplet->a2, rec.triplet->a3};
            std::snprintf(line, sizeof(line), "  recorded (%.4f, %.4f, %.4f)", rec.triplet->a1,
                          rec.triplet->a2, rec.triplet->a3);
            row_text += line;
        }
        for (const auto& [method, value] : rec.rankings) {
            entry["rankings"][method] = value;
            std::snprintf(line, sizeof(line), "  %s %.4f", method.c_str(), value);
            row_text += line;
        }
        text += row_text + "\n";
        j["path_costs"].push_back(std::move(entry));
    }
    j["iterations"] = result.iterations;
    j["wardrop_gap"] = result.wardrop_gap;

    const auto dir = ensure_out_dir(args);
    phyta::write_file((dir / "compare.json").string(), j.dump(2) + "\n");
    phyta::write_file((dir / "compare.txt").string(), text);
    std::cout << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy user-equilibrium traffic assignment via conductivity dynamics"};
    app.require_subcommand(1);

    Args args;
    CLI::App* fuzzy = app.add_subcommand("fuzzy-assign", "equilibrium by fuzzy dynamics");
    CLI::App* crisp = app.add_subcommand("crisp-assign", "crisp equilibrium baseline");
    CLI::App* shortest = app.add_subcommand("shortest-path", "conductivity shortest path per OD");
    CLI::App* compare = app.add_subcommand("compare", "computed vs recorded fixture results");
    for (CLI::App* cmd : {fuzzy, crisp, shortest, compare}) {
        add_common(cmd, args);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fuzzy->parsed()) {
            return run_fuzzy_assign(args);
        }
        if (crisp->parsed()) {
            return run_crisp_assign(args);
        }
        if (shortest->parsed()) {
            return run_shortest_path(args, shortest);
        }
        return run_compare(args);
    } catch (const phyta::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const phyta::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const phyta::UnknownFixture& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const phyta::AlphaOutOfRange& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const phyta::ParameterOutOfRange& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const phyta::Error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
