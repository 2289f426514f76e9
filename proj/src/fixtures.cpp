#include "phyta/fixtures.hpp"

#include <map>

#include "phyta/io.hpp"

namespace phyta {

namespace {

const std::string kRamazani4Json = R"({
  "nodes": [1, 2, 3, 4],
  "links": [
    {"i": 1, "j": 2, "c0": 4, "u": 200},
    {"i": 1, "j": 3, "c0": 5, "u": 150},
    {"i": 2, "j": 3, "c0": 7, "u": 250},
    {"i": 2, "j": 4, "c0": 7, "u": 250},
    {"i": 1, "j": 4, "c0": 17, "u": 300},
    {"i": 3, "j": 4, "c0": 7, "u": 250}
  ],
  "demands": [
    {"o": 1, "d": 4, "q": 700}
  ]
}
)";

const std::string kGhatee13Json = R"({
  "nodes": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
  "links": [
    {"i": 1, "j": 3, "c0": 4, "u": 252},
    {"i": 3, "j": 4, "c0": 13, "u": 415},
    {"i": 4, "j": 6, "c0": 13, "u": 413},
    {"i": 5, "j": 6, "c0": 21, "u": 175},
    {"i": 6, "j": 7, "c0": 8, "u": 174},
    {"i": 3, "j": 7, "c0": 21, "u": 367},
    {"i": 2, "j": 3, "c0": 17, "u": 423},
    {"i": 2, "j": 8, "c0": 20, "u": 189},
    {"i": 8, "j": 9, "c0": 18, "u": 277},
    {"i": 8, "j": 10, "c0": 10, "u": 351},
    {"i": 7, "j": 8, "c0": 8, "u": 401},
    {"i": 7, "j": 11, "c0": 10, "u": 265},
    {"i": 6, "j": 12, "c0": 7, "u": 90},
    {"i": 11, "j": 12, "c0": 11, "u": 139},
    {"i": 11, "j": 13, "c0": 21, "u": 442}
  ],
  "demands": [
    {"o": 1, "d": 9, "q": 100},
    {"o": 1, "d": 10, "q": 200},
    {"o": 1, "d": 13, "q": 100},
    {"o": 5, "d": 9, "q": 150},
    {"o": 5, "d": 10, "q": 150},
    {"o": 5, "d": 13, "q": 150}
  ]
}
)";

RecordedReference make_ramazani4_reference() {
    RecordedReference ref;
    ref.flow_rows.push_back({"FITA", {287, 217, 0, 287, 196, 217}});
    ref.flow_rows.push_back({"PA", {306, 227, 0, 306, 167, 227}});
    ref.path_costs.push_back({{1, 2, 4},
                              std::nullopt,
                              {{"hassanzadeh FITA", 50.48},
                               {"hassanzadeh PA", 55.16},
                               {"deng FITA", 15.72},
                               {"deng PA", 17.10}}});
    ref.path_costs.push_back({{1, 4},
                              std::nullopt,
                              {{"hassanzadeh FITA", 55.39},
                               {"hassanzadeh PA", 54.62},
                               {"deng FITA", 17.50},
                               {"deng PA", 17.26}}});
    ref.path_costs.push_back({{1, 3, 4},
                              std::nullopt,
                              {{"hassanzadeh FITA", 51.85},
                               {"hassanzadeh PA", 54.64},
                               {"deng FITA", 16.19},
                               {"deng PA", 17.02}}});
    return ref;
}

RecordedReference make_ghatee13_reference() {
    RecordedReference ref;
    ref.flow_rows.push_back({"equilibrium",
                             {400.00, 0.00, 0.00, 450.00, 300.00, 353.67, 46.33, 46.33, 250.00,
                              350.00, 553.67, 100.00, 150.00, 150.00, 250.00}});
    ref.path_costs.push_back({{1, 3, 2, 8, 9},
                              TriangularFuzzy{61.2985, 64.6115, 70.6359},
                              {{"deng", 65.0634}}});
    ref.path_costs.push_back({{1, 3, 7, 8, 9},
                              TriangularFuzzy{56.1930, 63.6782, 77.2894},
                              {{"deng", 64.6992}}});
    ref.path_costs.push_back({{1, 3, 2, 8, 10},
                              TriangularFuzzy{53.1721, 56.3030, 61.9963},
                              {{"deng", 56.7301}}});
    ref.path_costs.push_back({{1, 3, 7, 8, 10},
                              TriangularFuzzy{48.0666, 55.3697, 68.6498},
                              {{"deng", 56.3659}}});
    ref.path_costs.push_back({{1, 3, 7, 11, 13},
                              TriangularFuzzy{58.8174, 62.8783, 70.2628},
                              {{"deng", 63.4322}}});
    ref.path_costs.push_back({{5, 6, 7, 8, 9},
                              TriangularFuzzy{118.2751, 209.4803, 375.3303},
                              {{"deng", 221.9211}}});
    ref.path_costs.push_back({{5, 6, 7, 8, 10},
                              TriangularFuzzy{110.1488, 201.1718, 366.6906},
                              {{"deng", 213.5878}}});
    ref.path_costs.push_back({{5, 6, 12, 11, 13},
                              TriangularFuzzy{120.7787, 208.3855, 366.6922},
                              {{"deng", 220.3355}}});
    ref.path_costs.push_back({{5, 6, 7, 11, 13},
                              TriangularFuzzy{120.8995, 208.6804, 368.3037},
                              {{"deng", 220.6541}}});
    return ref;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"ramazani4", "ghatee13"}; }

const std::string& fixture_json(const std::string& name) {
    if (name == "ramazani4") {
        return kRamazani4Json;
    }
    if (name == "ghatee13") {
        return kGhatee13Json;
    }
    throw UnknownFixture("unknown fixture '" + name + "'; available: ramazani4, ghatee13");
}

Network load_fixture(const std::string& name) {
    return network_from_json(fixture_json(name), "fixture " + name);
}

const RecordedReference& fixture_reference(const std::string& name) {
    static const std::map<std::string, RecordedReference> refs{
        {"ramazani4", make_ramazani4_reference()},
        {"ghatee13", make_ghatee13_reference()},
    };
    auto it = refs.find(name);
    if (it == refs.end()) {
        throw UnknownFixture("unknown fixture '" + name + "'; available: ramazani4, ghatee13");
    }
    return it->second;
}

}  // namespace phyta
