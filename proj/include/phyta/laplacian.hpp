#ifndef PHYTA_LAPLACIAN_HPP
#define PHYTA_LAPLACIAN_HPP

#include <utility>
#include <vector>

#include "phyta/errors.hpp"

namespace phyta {

/// Conductance floor applied to every retained edge so decaying tubes never
/// disconnect the linear system.
inline constexpr double kWeightFloor = 1e-12;

/// Node pressures, zero on the grounded node and on nodes outside the
/// solved component. Nodes are kept sorted.
struct PressureField {
    std::vector<int> nodes;
    std::vector<double> p;

    double at(int node) const;
};

/// Grounded network Poisson system: edge weights w = D/L, an injection of
/// +q at the source and -q at the sink, pressure fixed to 0 at the sink.
/// Works on raw edge lists; parallel edges are allowed and their weights add.
struct PoissonSystem {
    std::vector<int> nodes;  // component containing source and sink
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;  // floored copy
    int source = 0;
    int sink = 0;
    double q = 0.0;
};

PoissonSystem assemble(const std::vector<std::pair<int, int>>& edges,
                       const std::vector<double>& weights, const std::vector<int>& nodes,
                       int source, int sink, double q);

/// Direct solve of the grounded system; unique pressures with p(sink) = 0.
PressureField solve_grounded(const PoissonSystem& system);

/// Signed edge flux Q = w * (p_i - p_j); positive means i -> j.
std::vector<double> edge_flux(const std::vector<std::pair<int, int>>& edges,
                              const std::vector<double>& weights, const PressureField& pressures);

}  // namespace phyta

#endif
