#include "hgcalc/representations.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

AnchorHints component_hints(const std::vector<Component>& comps, int original_count) {
  AnchorHints hints;
  for (const Component& c : comps) {
    const VertexId v = c.vertices.front();
    hints.push_back({v, v <= original_count ? VertexRole::Original : VertexRole::Encoder});
  }
  return hints;
}

struct Sides {
  std::vector<VertexId> originals;
  std::vector<VertexId> encoders;
};

Sides split_sides(const std::vector<Component>& comps, const AnchorHints& hints, int n) {
  for (const AnchorHint& h : hints) {
    if (h.vertex < 1 || h.vertex > n) {
      throw Error(ErrorCode::IndexOutOfRange, "hint vertex " + std::to_string(h.vertex) + " is not in the graph");
    }
  }
  Sides s;
  for (const Component& c : comps) {
    std::optional<int> original_side;
    for (const AnchorHint& h : hints) {
      auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), h.vertex);
      if (it == c.vertices.end() || *it != h.vertex) continue;
      if (c.vertices.size() == 1) {
        if (h.role == VertexRole::Encoder) {
          throw Error(ErrorCode::InvalidStructure,
                      "isolated vertex " + std::to_string(h.vertex) + " cannot encode a hyperedge");
        }
        continue;
      }
      if (!c.bipartite) {
        throw Error(ErrorCode::NotBipartite,
                    "component of vertex " + std::to_string(c.vertices.front()) + " has an odd cycle");
      }
      const int side = c.side[static_cast<std::size_t>(it - c.vertices.begin())];
      const int orig = h.role == VertexRole::Original ? side : 1 - side;
      if (original_side && *original_side != orig) {
        throw Error(ErrorCode::InvalidStructure,
                    "conflicting hints in the component of vertex " + std::to_string(c.vertices.front()));
      }
      original_side = orig;
    }
    if (c.vertices.size() == 1) {
      s.originals.push_back(c.vertices.front());
      continue;
    }
    if (!c.bipartite) {
      throw Error(ErrorCode::NotBipartite,
                  "component of vertex " + std::to_string(c.vertices.front()) + " has an odd cycle");
    }
    if (!original_side) {
      throw Error(ErrorCode::MissingHint,
                  "no hint for the component of vertex " + std::to_string(c.vertices.front()));
    }
    for (std::size_t k = 0; k < c.vertices.size(); ++k) {
      (c.side[k] == *original_side ? s.originals : s.encoders).push_back(c.vertices[k]);
    }
  }
  std::sort(s.originals.begin(), s.originals.end());
  std::sort(s.encoders.begin(), s.encoders.end());
  return s;
}

std::vector<VertexId> renumbering(const std::vector<VertexId>& originals, int n) {
  std::vector<VertexId> id(n + 1, 0);
  for (std::size_t k = 0; k < originals.size(); ++k) id[originals[k]] = static_cast<VertexId>(k + 1);
  return id;
}

template <typename Graph>
AnchorInference infer(const Graph& g, int min_card, int max_card) {
  if (min_card < 2 || max_card < min_card) {
    throw Error(ErrorCode::InvalidArgument, "cardinality bounds must satisfy 2 <= min <= max");
  }
  const auto adj = undirected_adjacency(g);
  AnchorInference out;
  for (const Component& c : connected_components(g)) {
    bool found = false;
    for (VertexId v : c.vertices) {
      const int d = static_cast<int>(adj[v].size());
      if (d < min_card || d > max_card) {
        out.hints.push_back({v, VertexRole::Original});
        found = true;
        break;
      }
    }
    if (!found) out.unresolved.push_back(c.vertices);
  }
  return out;
}

}  // namespace

StarExpansion<OrientedNormalGraph> to_bipartite(const OrientedHypergraph& h) {
  const int n = h.vertex_count();
  std::vector<VertexPair> arcs;
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const VertexId enc = n + static_cast<VertexId>(q) + 1;
    for (VertexId v : h.arcs()[q].out) arcs.emplace_back(v, enc);
    for (VertexId v : h.arcs()[q].in) arcs.emplace_back(enc, v);
  }
  OrientedNormalGraph g(n + static_cast<int>(h.arc_count()), std::move(arcs));
  AnchorHints hints = component_hints(connected_components(g), n);
  return {std::move(g), n, std::move(hints)};
}

StarExpansion<UnorientedNormalGraph> to_bipartite(const UnorientedHypergraph& h) {
  const int n = h.vertex_count();
  std::vector<VertexPair> edges;
  for (std::size_t q = 0; q < h.edge_count(); ++q) {
    const VertexId enc = n + static_cast<VertexId>(q) + 1;
    for (VertexId v : h.edges()[q].members) edges.emplace_back(v, enc);
  }
  UnorientedNormalGraph g(n + static_cast<int>(h.edge_count()), std::move(edges));
  AnchorHints hints = component_hints(connected_components(g), n);
  return {std::move(g), n, std::move(hints)};
}

Reconstruction<UnorientedHypergraph> from_bipartite(const UnorientedNormalGraph& g, const AnchorHints& hints) {
  const Sides s = split_sides(connected_components(g), hints, g.vertex_count());
  const auto id = renumbering(s.originals, g.vertex_count());
  const auto adj = undirected_adjacency(g);
  std::vector<Hyperedge> edges;
  for (VertexId e : s.encoders) {
    if (adj[e].size() < 2) {
      throw Error(ErrorCode::InvalidStructure, "encoder vertex " + std::to_string(e) + " has fewer than 2 neighbours");
    }
    Hyperedge he;
    for (VertexId v : adj[e]) he.members.push_back(id[v]);
    edges.push_back(std::move(he));
  }
  try {
    return {UnorientedHypergraph(static_cast<int>(std::max<std::size_t>(s.originals.size(), 1)), std::move(edges)),
            s.originals, s.encoders};
  } catch (const Error& err) {
    throw Error(ErrorCode::InvalidStructure, err.what());
  }
}

Reconstruction<OrientedHypergraph> from_bipartite(const OrientedNormalGraph& g, const AnchorHints& hints) {
  const Sides s = split_sides(connected_components(g), hints, g.vertex_count());
  const auto id = renumbering(s.originals, g.vertex_count());
  const auto adj = undirected_adjacency(g);
  std::set<VertexPair> arcset(g.arcs().begin(), g.arcs().end());
  std::vector<Hyperarc> arcs;
  for (VertexId e : s.encoders) {
    if (adj[e].size() < 2) {
      throw Error(ErrorCode::InvalidStructure, "encoder vertex " + std::to_string(e) + " has fewer than 2 neighbours");
    }
    Hyperarc a;
    for (VertexId v : adj[e]) {
      const bool to_enc = arcset.count({v, e}) > 0;
      const bool from_enc = arcset.count({e, v}) > 0;
      if (to_enc && from_enc) {
        throw Error(ErrorCode::InvalidStructure, "vertices " + std::to_string(v) + " and " +
                                                     std::to_string(e) + " are joined in both directions");
      }
      (to_enc ? a.out : a.in).push_back(id[v]);
    }
    if (a.out.empty() || a.in.empty()) {
      throw Error(ErrorCode::InvalidStructure, "encoder vertex " + std::to_string(e) + " lacks incoming or outgoing arcs");
    }
    arcs.push_back(std::move(a));
  }
  try {
    return {OrientedHypergraph(static_cast<int>(std::max<std::size_t>(s.originals.size(), 1)), std::move(arcs)),
            s.originals, s.encoders};
  } catch (const Error& err) {
    throw Error(ErrorCode::InvalidStructure, err.what());
  }
}

AnchorInference infer_anchors(const UnorientedNormalGraph& g, int min_card, int max_card) {
  return infer(g, min_card, max_card);
}

AnchorInference infer_anchors(const OrientedNormalGraph& g, int min_card, int max_card) {
  return infer(g, min_card, max_card);
}

std::size_t MultiGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& [pair, m] : multiplicity) total += static_cast<std::size_t>(m);
  return total;
}

MultiGraph to_clique(const UnorientedHypergraph& h) {
  MultiGraph mg{h.vertex_count(), false, {}};
  for (const Hyperedge& e : h.edges()) {
    for (std::size_t a = 0; a < e.members.size(); ++a) {
      for (std::size_t b = a + 1; b < e.members.size(); ++b) ++mg.multiplicity[{e.members[a], e.members[b]}];
    }
  }
  return mg;
}

MultiGraph to_clique(const OrientedHypergraph& h) {
  MultiGraph mg{h.vertex_count(), true, {}};
  auto within = [&mg](const std::vector<VertexId>& side) {
    for (VertexId u : side) {
      for (VertexId v : side) {
        if (u != v) ++mg.multiplicity[{u, v}];
      }
    }
  };
  for (const Hyperarc& a : h.arcs()) {
    within(a.out);
    within(a.in);
    for (VertexId u : a.out) {
      for (VertexId v : a.in) ++mg.multiplicity[{u, v}];
    }
  }
  return mg;
}

std::size_t clique_edge_count(int edge_size) {
  if (edge_size < 2) throw Error(ErrorCode::InvalidSize, "a hyperedge has at least 2 vertices");
  const auto k = static_cast<std::size_t>(edge_size);
  return k * (k - 1) / 2;
}

std::size_t clique_edge_count(int out_size, int in_size) {
  if (out_size < 1 || in_size < 1) throw Error(ErrorCode::InvalidSize, "hyperarc sides must be nonempty");
  const auto o = static_cast<std::size_t>(out_size);
  const auto i = static_cast<std::size_t>(in_size);
  return o * (o - 1) + i * (i - 1) + o * i;
}

}  // namespace hgcalc
