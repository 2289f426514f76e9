#ifndef PHYTA_NETWORK_HPP
#define PHYTA_NETWORK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "phyta/errors.hpp"
#include "phyta/fuzzy.hpp"

namespace phyta {

/// Undirected arc with BPR parameters: free-flow cost c0 and capacity u.
/// The stored (i, j) order fixes the sign convention for directed fluxes.
struct Link {
    int i = 0;
    int j = 0;
    double c0 = 0.0;
    double u = 1.0;
};

struct ODDemand {
    int o = 0;
    int d = 0;
    double q = 0.0;
};

/// Simple path: node sequence plus the resolved link indices between
/// consecutive nodes. Links may be traversed against their stored order.
struct Path {
    std::vector<int> nodes;
    std::vector<std::size_t> links;

    bool empty() const { return links.empty(); }
};

/// Link flows indexed by link position in Network::links(). Aggregate flows
/// are nonnegative magnitudes; per-OD fluxes are signed (positive = i -> j).
using FlowVector = std::vector<double>;

class Network {
  public:
    Network(std::vector<int> nodes, std::vector<Link> links, std::vector<ODDemand> demands);

    const std::vector<int>& nodes() const { return nodes_; }
    const std::vector<Link>& links() const { return links_; }
    const std::vector<ODDemand>& demands() const { return demands_; }

    bool has_node(int id) const;
    /// Link index for the unordered pair {a, b}, if present.
    std::optional<std::size_t> find_link(int a, int b) const;
    /// Incident (neighbor, link index) pairs, ascending by neighbor id.
    const std::vector<std::pair<int, std::size_t>>& neighbors(int node) const;

    FlowVector zero_flows() const { return FlowVector(links_.size(), 0.0); }
    std::vector<std::pair<int, int>> edge_list() const;

  private:
    std::vector<int> nodes_;
    std::vector<Link> links_;
    std::vector<ODDemand> demands_;
    std::map<int, std::vector<std::pair<int, std::size_t>>> adjacency_;
};

/// BPR volume-delay cost c0 * (1 + alpha * (x/u)^beta); increasing in x.
double bpr_cost(const Link& link, double x, double alpha = 0.15, double beta = 4.0);

/// Triangular link cost (c(x*(1-alpha_l)), c(x), c(x*(1+alpha_r))).
TriangularFuzzy fuzzy_link_cost(const Link& link, double x, double alpha_l, double alpha_r,
                                double bpr_alpha = 0.15, double bpr_beta = 4.0);

/// Fuzzy sum of fuzzy link costs along a path; empty path costs (0,0,0).
TriangularFuzzy fuzzy_path_cost(const Network& net, const Path& path, const FlowVector& flows,
                                double alpha_l, double alpha_r, double bpr_alpha = 0.15,
                                double bpr_beta = 4.0);

/// Resolves a node sequence to a Path; throws PathNotInNetwork when a
/// consecutive pair has no link or the sequence repeats a node.
Path make_path(const Network& net, const std::vector<int>& node_sequence);

/// All simple o-d paths with at most max_hops links, in lexicographic order
/// of their node sequences. Throws NoPathExists when there is none.
std::vector<Path> enumerate_paths(const Network& net, const ODDemand& od, int max_hops);

/// Same with the hop limit defaulted to |nodes| - 1 (any simple path fits).
std::vector<Path> enumerate_paths(const Network& net, const ODDemand& od);

struct ConservationReport {
    double max_violation = 0.0;
    int worst_node = 0;
};

/// Node-balance check for a signed flow field against per-node injections
/// (positive = supply). Flows are signed relative to each link's (i, j).
ConservationReport conservation_report(const Network& net, const FlowVector& signed_flows,
                                       const std::map<int, double>& injections);

/// Max balance violation over per-OD signed flow fields, each checked
/// against +q at its origin and -q at its destination.
double check_conservation(const Network& net,
                          const std::vector<std::pair<ODDemand, FlowVector>>& per_od_flows);

}  // namespace phyta

#endif
