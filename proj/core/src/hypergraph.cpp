#include "hgcalc/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

void check_vertex_count(int n) {
  if (n < 1) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex count must be at least 1, got " + std::to_string(n));
  }
}

void check_vertex(VertexId v, int n) {
  if (v < 1 || v > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
}

void canonicalize(std::vector<VertexId>& side, int n) {
  for (VertexId v : side) check_vertex(v, n);
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
}

}  // namespace

OrientedHypergraph::OrientedHypergraph(int vertex_count, std::vector<Hyperarc> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
  check_vertex_count(n_);
  std::set<Hyperarc> seen;
  for (std::size_t q = 0; q < arcs_.size(); ++q) {
    Hyperarc& a = arcs_[q];
    canonicalize(a.out, n_);
    canonicalize(a.in, n_);
    const std::string where = "hyperarc " + std::to_string(q + 1);
    if (a.out.empty() || a.in.empty()) {
      throw Error(ErrorCode::EmptySide, where + " has an empty side");
    }
    std::vector<VertexId> common;
    std::set_intersection(a.out.begin(), a.out.end(), a.in.begin(), a.in.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
      throw Error(ErrorCode::Overlap,
                  where + " has vertex " + std::to_string(common.front()) + " on both sides");
    }
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::Duplicate, where + " repeats an earlier hyperarc");
    }
  }
  out_deg_.assign(n_ + 1, 0);
  in_deg_.assign(n_ + 1, 0);
  for (const Hyperarc& a : arcs_) {
    for (VertexId v : a.out) ++out_deg_[v];
    for (VertexId v : a.in) ++in_deg_[v];
  }
}

const Hyperarc& OrientedHypergraph::arc(std::size_t q) const {
  if (q < 1 || q > arcs_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "hyperarc index " + std::to_string(q) + " out of range");
  }
  return arcs_[q - 1];
}

int OrientedHypergraph::degree(VertexId v, DegreeMode mode) const {
  check_vertex(v, n_);
  switch (mode) {
    case DegreeMode::Out: return out_deg_[v];
    case DegreeMode::In: return in_deg_[v];
    case DegreeMode::Total: return out_deg_[v] + in_deg_[v];
  }
  return 0;
}

bool OrientedHypergraph::indicator(VertexId v, std::size_t q, Side side) const {
  check_vertex(v, n_);
  const Hyperarc& a = arc(q);
  const auto& s = side == Side::Out ? a.out : a.in;
  return std::binary_search(s.begin(), s.end(), v);
}

bool OrientedHypergraph::same_arc_set(const OrientedHypergraph& other) const {
  if (n_ != other.n_ || arcs_.size() != other.arcs_.size()) return false;
  std::vector<Hyperarc> a = arcs_;
  std::vector<Hyperarc> b = other.arcs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

UnorientedHypergraph::UnorientedHypergraph(int vertex_count, std::vector<Hyperedge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  check_vertex_count(n_);
  std::set<Hyperedge> seen;
  for (std::size_t q = 0; q < edges_.size(); ++q) {
    Hyperedge& e = edges_[q];
    canonicalize(e.members, n_);
    const std::string where = "hyperedge " + std::to_string(q + 1);
    if (e.members.size() < 2) {
      throw Error(ErrorCode::TooSmall, where + " has fewer than 2 vertices");
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::Duplicate, where + " repeats an earlier hyperedge");
    }
  }
  deg_.assign(n_ + 1, 0);
  for (const Hyperedge& e : edges_) {
    for (VertexId v : e.members) ++deg_[v];
  }
}

const Hyperedge& UnorientedHypergraph::edge(std::size_t q) const {
  if (q < 1 || q > edges_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "hyperedge index " + std::to_string(q) + " out of range");
  }
  return edges_[q - 1];
}

int UnorientedHypergraph::degree(VertexId v, DegreeMode mode) const {
  check_vertex(v, n_);
  if (mode != DegreeMode::Total) {
    throw Error(ErrorCode::InvalidArgument, "out/in degree requires an oriented hypergraph");
  }
  return deg_[v];
}

bool UnorientedHypergraph::indicator(VertexId v, std::size_t q) const {
  check_vertex(v, n_);
  const auto& m = edge(q).members;
  return std::binary_search(m.begin(), m.end(), v);
}

bool UnorientedHypergraph::same_edge_set(const UnorientedHypergraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  std::vector<Hyperedge> a = edges_;
  std::vector<Hyperedge> b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

OrientedHypergraph switch_orientation(const OrientedHypergraph& h) {
  std::vector<Hyperarc> arcs;
  arcs.reserve(h.arc_count());
  for (const Hyperarc& a : h.arcs()) arcs.push_back({a.in, a.out});
  return OrientedHypergraph(h.vertex_count(), std::move(arcs));
}

std::pair<int, int> cardinality_bounds(const OrientedHypergraph& h) {
  if (h.arc_count() == 0) throw Error(ErrorCode::EmptyHypergraph, "no hyperarcs");
  int lo = h.vertex_count();
  int hi = 0;
  for (const Hyperarc& a : h.arcs()) {
    lo = std::min(lo, static_cast<int>(a.size()));
    hi = std::max(hi, static_cast<int>(a.size()));
  }
  return {lo, hi};
}

std::pair<int, int> cardinality_bounds(const UnorientedHypergraph& h) {
  if (h.edge_count() == 0) throw Error(ErrorCode::EmptyHypergraph, "no hyperedges");
  int lo = h.vertex_count();
  int hi = 0;
  for (const Hyperedge& e : h.edges()) {
    lo = std::min(lo, static_cast<int>(e.size()));
    hi = std::max(hi, static_cast<int>(e.size()));
  }
  return {lo, hi};
}

}  // namespace hgcalc
