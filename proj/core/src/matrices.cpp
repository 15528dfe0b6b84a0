#include "hgcalc/matrices.hpp"

namespace hgcalc {

IntMatrix incidence_matrix(const OrientedHypergraph& h) {
  IntMatrix m = IntMatrix::Zero(h.vertex_count(), static_cast<Eigen::Index>(h.arc_count()));
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const auto col = static_cast<Eigen::Index>(q);
    for (VertexId v : h.arcs()[q].out) m(v - 1, col) = 1;
    for (VertexId v : h.arcs()[q].in) m(v - 1, col) = -1;
  }
  return m;
}

IntMatrix incidence_matrix(const UnorientedHypergraph& h) {
  IntMatrix m = IntMatrix::Zero(h.vertex_count(), static_cast<Eigen::Index>(h.edge_count()));
  for (std::size_t q = 0; q < h.edge_count(); ++q) {
    for (VertexId v : h.edges()[q].members) m(v - 1, static_cast<Eigen::Index>(q)) = 1;
  }
  return m;
}

IntMatrix incidence_matrix(const OrientedNormalGraph& g) {
  return incidence_matrix(graph_as_hypergraph(g));
}

IntMatrix incidence_matrix(const UnorientedNormalGraph& g) {
  return incidence_matrix(graph_as_hypergraph(g));
}

IntMatrix adjacency_matrix(const OrientedNormalGraph& g) {
  IntMatrix m = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& [i, j] : g.arcs()) m(i - 1, j - 1) = 1;
  return m;
}

IntMatrix adjacency_matrix(const UnorientedNormalGraph& g) {
  IntMatrix m = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& [i, j] : g.edges()) {
    m(i - 1, j - 1) = 1;
    m(j - 1, i - 1) = 1;
  }
  return m;
}

}  // namespace hgcalc
