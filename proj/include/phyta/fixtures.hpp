#ifndef PHYTA_FIXTURES_HPP
#define PHYTA_FIXTURES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phyta/fuzzy.hpp"
#include "phyta/network.hpp"

namespace phyta {

/// A reference path row: recorded fuzzy cost triplet (when published) and
/// scalar rankings keyed by method label.
struct RecordedPathCost {
    std::vector<int> nodes;
    std::optional<TriangularFuzzy> triplet;
    std::vector<std::pair<std::string, double>> rankings;
};

/// Published per-link flows under a labelled method, in fixture link order.
struct RecordedFlowRow {
    std::string label;
    FlowVector flows;
};

struct RecordedReference {
    std::vector<RecordedFlowRow> flow_rows;
    std::vector<RecordedPathCost> path_costs;
};

std::vector<std::string> fixture_names();

/// Built-in test networks; throws UnknownFixture for anything else.
Network load_fixture(const std::string& name);

/// The JSON text the fixture is built from (matches files under fixtures/).
const std::string& fixture_json(const std::string& name);

/// Recorded comparison rows for the fixture.
const RecordedReference& fixture_reference(const std::string& name);

}  // namespace phyta

#endif
