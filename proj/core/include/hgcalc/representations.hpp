#ifndef HGCALC_REPRESENTATIONS_HPP
#define HGCALC_REPRESENTATIONS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"

namespace hgcalc {

enum class VertexRole { Original, Encoder };

struct AnchorHint {
  VertexId vertex;
  VertexRole role;

  friend bool operator==(const AnchorHint&, const AnchorHint&) = default;
};

using AnchorHints = std::vector<AnchorHint>;

// Vertices 1..original_count are the hypergraph's vertices; vertex
// original_count + q encodes hyperarc/hyperedge q.
template <typename Graph>
struct StarExpansion {
  Graph graph;
  int original_count;
  AnchorHints hints;  // one ground-truth hint per connected component
};

StarExpansion<OrientedNormalGraph> to_bipartite(const OrientedHypergraph& h);
StarExpansion<UnorientedNormalGraph> to_bipartite(const UnorientedHypergraph& h);

template <typename Hypergraph>
struct Reconstruction {
  Hypergraph hypergraph;
  // Graph vertex behind each hypergraph vertex, ascending.
  std::vector<VertexId> original_vertices;
  // Graph vertex behind each hyperedge/hyperarc, ascending.
  std::vector<VertexId> encoder_vertices;
};

// Original vertices are renumbered 1..K in increasing graph-id order and
// hyperedges/hyperarcs follow increasing encoder id. Components with a single
// vertex need no hint.
Reconstruction<UnorientedHypergraph> from_bipartite(const UnorientedNormalGraph& g, const AnchorHints& hints);
Reconstruction<OrientedHypergraph> from_bipartite(const OrientedNormalGraph& g, const AnchorHints& hints);

struct AnchorInference {
  AnchorHints hints;
  std::vector<std::vector<VertexId>> unresolved;  // components without a usable vertex
};

// Per component, the lowest vertex whose degree lies outside [min_card, max_card]
// is marked original.
AnchorInference infer_anchors(const UnorientedNormalGraph& g, int min_card, int max_card);
AnchorInference infer_anchors(const OrientedNormalGraph& g, int min_card, int max_card);

// Multigraph on the hypergraph's vertices. Unoriented keys are (i, j) with i < j.
struct MultiGraph {
  int vertex_count = 0;
  bool oriented = false;
  std::map<VertexPair, int> multiplicity;

  std::size_t edge_count() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

MultiGraph to_clique(const UnorientedHypergraph& h);
MultiGraph to_clique(const OrientedHypergraph& h);

// |e| (|e| - 1) / 2 and |out| (|out| - 1) + |in| (|in| - 1) + |out| |in|.
std::size_t clique_edge_count(int edge_size);
std::size_t clique_edge_count(int out_size, int in_size);

}  // namespace hgcalc

#endif
