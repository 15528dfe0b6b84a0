#include "hgcalc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

void check_pair(const VertexPair& p, int n, std::size_t pos) {
  const std::string where = "pair " + std::to_string(pos);
  if (p.first < 1 || p.first > n || p.second < 1 || p.second > n) {
    throw Error(ErrorCode::IndexOutOfRange, where + " has an endpoint outside 1.." + std::to_string(n));
  }
  if (p.first == p.second) {
    throw Error(ErrorCode::SelfLoop, where + " is a self-loop");
  }
}

std::vector<Component> components_from(const std::vector<std::vector<VertexId>>& adj, int n) {
  std::vector<int> color(n + 1, -1);
  std::vector<int> comp(n + 1, -1);
  std::vector<Component> out;
  for (VertexId s = 1; s <= n; ++s) {
    if (comp[s] >= 0) continue;
    Component c;
    bool bip = true;
    std::deque<VertexId> queue{s};
    comp[s] = static_cast<int>(out.size());
    color[s] = 0;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      c.vertices.push_back(u);
      for (VertexId w : adj[u]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          bip = false;
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.bipartite = bip;
    if (bip) {
      for (VertexId v : c.vertices) c.side.push_back(color[v]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

OrientedNormalGraph::OrientedNormalGraph(int vertex_count, std::vector<VertexPair> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
  if (n_ < 1) throw Error(ErrorCode::IndexOutOfRange, "vertex count must be at least 1");
  std::set<VertexPair> seen;
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    check_pair(arcs_[k], n_, k + 1);
    if (!seen.insert(arcs_[k]).second) {
      throw Error(ErrorCode::Duplicate, "arc " + std::to_string(k + 1) + " repeats an earlier arc");
    }
  }
}

std::optional<std::size_t> OrientedNormalGraph::find_arc(VertexId i, VertexId j) const {
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (arcs_[k].first == i && arcs_[k].second == j) return k + 1;
  }
  return std::nullopt;
}

int OrientedNormalGraph::out_degree(VertexId v) const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(),
                                        [v](const VertexPair& a) { return a.first == v; }));
}

int OrientedNormalGraph::in_degree(VertexId v) const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(),
                                        [v](const VertexPair& a) { return a.second == v; }));
}

UnorientedNormalGraph::UnorientedNormalGraph(int vertex_count, std::vector<VertexPair> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorCode::IndexOutOfRange, "vertex count must be at least 1");
  std::set<VertexPair> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    check_pair(edges_[k], n_, k + 1);
    if (edges_[k].first > edges_[k].second) std::swap(edges_[k].first, edges_[k].second);
    if (!seen.insert(edges_[k]).second) {
      throw Error(ErrorCode::Duplicate, "edge " + std::to_string(k + 1) + " repeats an earlier edge");
    }
  }
}

std::optional<std::size_t> UnorientedNormalGraph::find_edge(VertexId i, VertexId j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].first == i && edges_[k].second == j) return k + 1;
  }
  return std::nullopt;
}

int UnorientedNormalGraph::degree(VertexId v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const VertexPair& e) {
    return e.first == v || e.second == v;
  }));
}

OrientedHypergraph graph_as_hypergraph(const OrientedNormalGraph& g) {
  std::vector<Hyperarc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [i, j] : g.arcs()) arcs.push_back({{i}, {j}});
  return OrientedHypergraph(g.vertex_count(), std::move(arcs));
}

UnorientedHypergraph graph_as_hypergraph(const UnorientedNormalGraph& g) {
  std::vector<Hyperedge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [i, j] : g.edges()) edges.push_back({{i, j}});
  return UnorientedHypergraph(g.vertex_count(), std::move(edges));
}

std::vector<std::vector<VertexId>> undirected_adjacency(const OrientedNormalGraph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count() + 1);
  for (const auto& [i, j] : g.arcs()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

std::vector<std::vector<VertexId>> undirected_adjacency(const UnorientedNormalGraph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count() + 1);
  for (const auto& [i, j] : g.edges()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<Component> connected_components(const UnorientedNormalGraph& g) {
  return components_from(undirected_adjacency(g), g.vertex_count());
}

std::vector<Component> connected_components(const OrientedNormalGraph& g) {
  return components_from(undirected_adjacency(g), g.vertex_count());
}

}  // namespace hgcalc
