#ifndef HGCALC_MATRICES_HPP
#define HGCALC_MATRICES_HPP

#include <Eigen/Core>

#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"

namespace hgcalc {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

// N x M; +1 for output vertices, -1 for input vertices (oriented), 1 for members (unoriented).
IntMatrix incidence_matrix(const OrientedHypergraph& h);
IntMatrix incidence_matrix(const UnorientedHypergraph& h);
IntMatrix incidence_matrix(const OrientedNormalGraph& g);
IntMatrix incidence_matrix(const UnorientedNormalGraph& g);

// N x N 0/1 matrix; symmetric for unoriented graphs.
IntMatrix adjacency_matrix(const OrientedNormalGraph& g);
IntMatrix adjacency_matrix(const UnorientedNormalGraph& g);

}  // namespace hgcalc

#endif
