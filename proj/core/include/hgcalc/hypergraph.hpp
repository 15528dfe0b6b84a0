#ifndef HGCALC_HYPERGRAPH_HPP
#define HGCALC_HYPERGRAPH_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace hgcalc {

// Vertex ids are 1-based: a structure with N vertices uses ids 1..N.
using VertexId = int;

enum class Side { Out, In };
enum class DegreeMode { Out, In, Total };

struct Hyperarc {
  std::vector<VertexId> out;
  std::vector<VertexId> in;

  std::size_t size() const { return out.size() + in.size(); }

  friend bool operator==(const Hyperarc&, const Hyperarc&) = default;
  friend auto operator<=>(const Hyperarc&, const Hyperarc&) = default;
};

struct Hyperedge {
  std::vector<VertexId> members;

  std::size_t size() const { return members.size(); }

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
  friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;
};

// Validated oriented hypergraph. Sides are stored sorted; hyperarc order is
// the input order and defines the 1-based hyperarc index q.
class OrientedHypergraph {
 public:
  OrientedHypergraph(int vertex_count, std::vector<Hyperarc> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Hyperarc>& arcs() const { return arcs_; }
  const Hyperarc& arc(std::size_t q) const;

  int degree(VertexId v, DegreeMode mode = DegreeMode::Total) const;
  bool indicator(VertexId v, std::size_t q, Side side) const;

  // Same hyperarcs regardless of their order.
  bool same_arc_set(const OrientedHypergraph& other) const;

  friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

 private:
  int n_;
  std::vector<Hyperarc> arcs_;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
};

class UnorientedHypergraph {
 public:
  UnorientedHypergraph(int vertex_count, std::vector<Hyperedge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t q) const;

  // Only DegreeMode::Total is meaningful without orientation.
  int degree(VertexId v, DegreeMode mode = DegreeMode::Total) const;
  bool indicator(VertexId v, std::size_t q) const;

  bool same_edge_set(const UnorientedHypergraph& other) const;

  friend bool operator==(const UnorientedHypergraph&, const UnorientedHypergraph&) = default;

 private:
  int n_;
  std::vector<Hyperedge> edges_;
  std::vector<int> deg_;
};

OrientedHypergraph switch_orientation(const OrientedHypergraph& h);

// (min, max) over hyperarc or hyperedge vertex counts.
std::pair<int, int> cardinality_bounds(const OrientedHypergraph& h);
std::pair<int, int> cardinality_bounds(const UnorientedHypergraph& h);

}  // namespace hgcalc

#endif
