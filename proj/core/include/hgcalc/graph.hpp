#ifndef HGCALC_GRAPH_HPP
#define HGCALC_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hgcalc/hypergraph.hpp"

namespace hgcalc {

using VertexPair = std::pair<VertexId, VertexId>;

class OrientedNormalGraph {
 public:
  OrientedNormalGraph(int vertex_count, std::vector<VertexPair> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<VertexPair>& arcs() const { return arcs_; }

  // 1-based position of arc (i, j), if present.
  std::optional<std::size_t> find_arc(VertexId i, VertexId j) const;
  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;

  friend bool operator==(const OrientedNormalGraph&, const OrientedNormalGraph&) = default;

 private:
  int n_;
  std::vector<VertexPair> arcs_;
};

// Edges are stored with first < second.
class UnorientedNormalGraph {
 public:
  UnorientedNormalGraph(int vertex_count, std::vector<VertexPair> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexPair>& edges() const { return edges_; }

  std::optional<std::size_t> find_edge(VertexId i, VertexId j) const;
  int degree(VertexId v) const;

  friend bool operator==(const UnorientedNormalGraph&, const UnorientedNormalGraph&) = default;

 private:
  int n_;
  std::vector<VertexPair> edges_;
};

OrientedHypergraph graph_as_hypergraph(const OrientedNormalGraph& g);
UnorientedHypergraph graph_as_hypergraph(const UnorientedNormalGraph& g);

// Arcs of an oriented graph are treated as edges for connectivity.
struct Component {
  std::vector<VertexId> vertices;  // ascending
  bool bipartite = false;
  // Parallel to vertices when bipartite; the lowest vertex is on side 0.
  std::vector<int> side;
};

std::vector<Component> connected_components(const UnorientedNormalGraph& g);
std::vector<Component> connected_components(const OrientedNormalGraph& g);

// Undirected adjacency lists indexed by vertex id (index 0 unused).
std::vector<std::vector<VertexId>> undirected_adjacency(const OrientedNormalGraph& g);
std::vector<std::vector<VertexId>> undirected_adjacency(const UnorientedNormalGraph& g);

}  // namespace hgcalc

#endif
