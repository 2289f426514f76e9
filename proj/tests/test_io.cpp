#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <json.hpp>

#include "phyta/errors.hpp"
#include "phyta/fixtures.hpp"
#include "phyta/io.hpp"

using namespace phyta;

#ifndef PHYTA_FIXTURE_DIR
#error "PHYTA_FIXTURE_DIR must point at the bundled network files"
#endif

namespace {

bool same_network(const Network& a, const Network& b) {
    if (a.nodes() != b.nodes() || a.links().size() != b.links().size() ||
        a.demands().size() != b.demands().size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.links().size(); ++k) {
        const Link& x = a.links()[k];
        const Link& y = b.links()[k];
        if (x.i != y.i || x.j != y.j || x.c0 != y.c0 || x.u != y.u) {
            return false;
        }
    }
    for (std::size_t k = 0; k < a.demands().size(); ++k) {
        const ODDemand& x = a.demands()[k];
        const ODDemand& y = b.demands()[k];
        if (x.o != y.o || x.d != y.d || x.q != y.q) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("bundled fixtures load with their published shapes") {
    const Network small = load_fixture("ramazani4");
    CHECK(small.nodes().size() == 4);
    CHECK(small.links().size() == 6);
    REQUIRE(small.demands().size() == 1);
    CHECK(small.demands()[0].o == 1);
    CHECK(small.demands()[0].d == 4);
    CHECK(small.demands()[0].q == 700.0);

    const Network big = load_fixture("ghatee13");
    CHECK(big.nodes().size() == 13);
    CHECK(big.links().size() == 15);
    CHECK(big.demands().size() == 6);
    double total = 0.0;
    for (const ODDemand& od : big.demands()) {
        total += od.q;
    }
    CHECK(total == doctest::Approx(100 + 200 + 100 + 150 + 150 + 150));

    const std::vector<std::string> names = fixture_names();
    CHECK(std::find(names.begin(), names.end(), "ramazani4") != names.end());
    CHECK(std::find(names.begin(), names.end(), "ghatee13") != names.end());
    CHECK_THROWS_AS(load_fixture("no-such-network"), UnknownFixture);
    CHECK_THROWS_AS(fixture_json("no-such-network"), UnknownFixture);
    CHECK_THROWS_AS(fixture_reference("no-such-network"), UnknownFixture);
}

TEST_CASE("fixture files on disk match the built-in copies") {
    for (const std::string& name : fixture_names()) {
        const Network from_file = load_network(std::string(PHYTA_FIXTURE_DIR) + "/" + name +
                                               ".json");
        CHECK(same_network(from_file, load_fixture(name)));
        CHECK(same_network(network_from_json(fixture_json(name), name), load_fixture(name)));
    }
}

TEST_CASE("network json survives a round trip") {
    const Network net = load_fixture("ghatee13");
    const Network back = network_from_json(network_to_json(net), "round-trip");
    CHECK(same_network(net, back));
}

TEST_CASE("malformed network documents raise ParseError with context") {
    CHECK_THROWS_AS(network_from_json("{ not json", "ctx"), ParseError);
    CHECK_THROWS_AS(network_from_json("[]", "ctx"), ParseError);
    CHECK_THROWS_AS(network_from_json(R"({"nodes": [1, 2], "links": []})", "ctx"), ParseError);
    CHECK_THROWS_AS(network_from_json(
                        R"({"nodes": [1, "x"], "links": [], "demands": []})", "ctx"),
                    ParseError);
    CHECK_THROWS_AS(
        network_from_json(
            R"({"nodes": [1, 2], "links": [{"i": 1, "j": 2, "c0": 3}], "demands": []})", "ctx"),
        ParseError);
    try {
        network_from_json(R"({"nodes": [1, 2], "links": [{"i": 1, "j": 2, "c0": 3}],
                              "demands": []})",
                          "my-net.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("my-net.json") != std::string::npos);
        CHECK(std::string(e.what()).find("u") != std::string::npos);
    }
    CHECK_THROWS_AS(load_network("/no/such/file.json"), ParseError);
}

TEST_CASE("semantic violations keep their ValidationError type and context") {
    const std::string zero_capacity =
        R"({"nodes": [1, 2], "links": [{"i": 1, "j": 2, "c0": 3, "u": 0}], "demands": []})";
    CHECK_THROWS_AS(network_from_json(zero_capacity, "cap.json"), ValidationError);
    try {
        network_from_json(zero_capacity, "cap.json");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("cap.json") != std::string::npos);
    }
}

TEST_CASE("trace csv is sorted with a fixed header") {
    const std::vector<TraceRow> rows{
        {2, 1, 2, 1.5, 0.25},
        {1, 3, 4, 2.0, 1.0},
        {1, 1, 2, 0.125, 1e-12},
    };
    CHECK(trace_to_csv(rows) ==
          "iteration,link_i,link_j,flow,conductivity\n"
          "1,1,2,0.125,1e-12\n"
          "1,3,4,2,1\n"
          "2,1,2,1.5,0.25\n");
    CHECK(trace_to_csv({}) == "iteration,link_i,link_j,flow,conductivity\n");
}

TEST_CASE("fuzzy run reports carry every contracted key") {
    const Network net = load_fixture("ramazani4");
    SolverConfig config;
    config.max_iters = 20;
    const AssignmentResult result = fue_run(net, config);
    const RunReport report = make_report(net, result, 12.5);
    // links arrive sorted by (i, j) regardless of fixture order
    REQUIRE(report.links.size() == 6);
    for (std::size_t a = 1; a < report.links.size(); ++a) {
        CHECK(std::pair{report.links[a - 1].i, report.links[a - 1].j} <
              std::pair{report.links[a].i, report.links[a].j});
    }

    const nlohmann::json j = nlohmann::json::parse(report_to_json(report));
    for (const char* key :
         {"flows", "per_od_flows", "path_costs", "wardrop_gap", "iterations", "converged",
          "wall_time_ms"}) {
        CHECK(j.contains(key));
    }
    CHECK_FALSE(j.contains("objective"));
    CHECK_FALSE(j.contains("rel_gap"));
    CHECK(j["flows"].size() == 6);
    CHECK(j["flows"][0].contains("i"));
    CHECK(j["flows"][0].contains("j"));
    CHECK(j["flows"][0].contains("flow"));
    CHECK(j["per_od_flows"].size() == 1);
    CHECK(j["per_od_flows"][0]["q"] == 700.0);
    CHECK(j["path_costs"].size() == report.path_costs.size());
    CHECK(j["path_costs"][0].contains("triplet"));
    CHECK(j["path_costs"][0]["triplet"].size() == 3);
    CHECK(j["wall_time_ms"] == 12.5);

    const std::string text = report_to_text(report);
    CHECK(text.find("link flows") != std::string::npos);
    CHECK(text.find("path costs") != std::string::npos);
    CHECK(text.find("wardrop gap:") != std::string::npos);
    CHECK(text.find("wall time:") != std::string::npos);
}

TEST_CASE("crisp baseline reports add objective and gap") {
    const Network net = load_fixture("ramazani4");
    FWConfig config;
    config.max_iters = 50;
    const FWResult result = fw_solve(net, config);
    const RunReport report = make_report(net, result, 1.0);
    const nlohmann::json j = nlohmann::json::parse(report_to_json(report));
    CHECK(j.contains("objective"));
    CHECK(j.contains("rel_gap"));
    CHECK(j["objective"].get<double>() == doctest::Approx(result.objective));
    // signed baseline flows are reported as magnitudes
    for (const auto& row : j["flows"]) {
        CHECK(row["flow"].get<double>() >= 0.0);
    }
    const std::string text = report_to_text(report);
    CHECK(text.find("objective:") != std::string::npos);
    CHECK(text.find("relative gap:") != std::string::npos);
    CHECK(text.find("(converged)") != std::string::npos);
}

TEST_CASE("write_file round-trips and surfaces unwritable paths") {
    const std::string path = "test_io_scratch.json";
    write_file(path, "hello\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "hello\n");
    in.close();
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_file("/no/such/dir/out.json", "x"), ParseError);
}
