#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "hgcalc/tensor.hpp"

namespace hgcalc {

namespace {

std::string arc_text(const Hyperarc& a) {
  std::ostringstream os;
  os << "({";
  for (std::size_t k = 0; k < a.out.size(); ++k) os << (k ? "," : "") << a.out[k];
  os << "},{";
  for (std::size_t k = 0; k < a.in.size(); ++k) os << (k ? "," : "") << a.in[k];
  os << "})";
  return os.str();
}

std::string tuple_text(const IndexTuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
  os << ")";
  return os.str();
}

std::vector<VertexId> distinct(const IndexTuple& t) {
  std::vector<VertexId> s(t);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct Entry {
  IndexTuple tuple;
  int arcs;  // number of hyperarcs the entry represents
};

// All nonzero entries sharing one distinct-vertex set.
struct Group {
  std::vector<VertexId> vertices;
  std::vector<Entry> entries;
};

// Feasible splits after forcing m_1 into the output side and m_last into the
// input side and propagating along repeated vertices.
std::vector<std::pair<int, Hyperarc>> feasible_splits(const IndexTuple& t) {
  const int k = static_cast<int>(t.size());
  std::map<VertexId, int> side;  // 0 out, 1 in
  side[t.front()] = 0;
  if (side.count(t.back()) && side[t.back()] != 1) return {};
  side[t.back()] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < k; ++p) {
      auto it = side.find(t[p]);
      if (it == side.end()) continue;
      const int lo = it->second == 0 ? 0 : p;
      const int hi = it->second == 0 ? p : k - 1;
      for (int r = lo; r <= hi; ++r) {
        auto [pos, inserted] = side.emplace(t[r], it->second);
        if (inserted) {
          changed = true;
        } else if (pos->second != it->second) {
          return {};
        }
      }
    }
  }
  std::vector<std::pair<int, Hyperarc>> out;
  for (int j = 1; j < k; ++j) {
    bool ok = true;
    for (int p = 0; p < k && ok; ++p) {
      auto it = side.find(t[p]);
      if (it == side.end()) continue;
      if (p < j && it->second == 1) ok = false;
      if (p >= j && it->second == 0) ok = false;
    }
    if (!ok) continue;
    IndexTuple pre(t.begin(), t.begin() + j);
    IndexTuple suf(t.begin() + j, t.end());
    std::vector<VertexId> o = distinct(pre);
    std::vector<VertexId> i = distinct(suf);
    std::vector<VertexId> common;
    std::set_intersection(o.begin(), o.end(), i.begin(), i.end(), std::back_inserter(common));
    if (common.empty()) out.push_back({j, Hyperarc{o, i}});
  }
  return out;
}

// The tuple out..., out[0] x r, in[last], in... whose only split is the given arc:
// its first and last indices pin both repeated vertices to their sides.
IndexTuple probe_tuple(const Hyperarc& a, int order) {
  const int r = order - static_cast<int>(a.size()) - 1;
  IndexTuple t(a.out);
  t.insert(t.end(), static_cast<std::size_t>(r), a.out.front());
  t.push_back(a.in.back());
  t.insert(t.end(), a.in.begin(), a.in.end());
  return t;
}

enum class State { Undecided, Accepted, Rejected };

struct Constraint {
  IndexTuple tuple;
  int need;
  std::vector<std::pair<int, int>> vars;  // (split position, variable)
};

struct Resolution {
  std::vector<Hyperarc> arcs;
  std::vector<Constraint> constraints;
};

// Sound propagation; false on contradiction.
bool propagate(const Resolution& r, std::vector<State>& st) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Constraint& c : r.constraints) {
      int acc = 0;
      int und = 0;
      for (const auto& [pos, v] : c.vars) {
        if (st[v] == State::Accepted) ++acc;
        if (st[v] == State::Undecided) ++und;
      }
      const int need = c.need - acc;
      if (need < 0 || need > und) return false;
      if (und == 0) continue;
      if (need == 0 || need == und) {
        const State s = need == 0 ? State::Rejected : State::Accepted;
        for (const auto& [pos, v] : c.vars) {
          if (st[v] == State::Undecided) st[v] = s;
        }
        changed = true;
      }
    }
  }
  return true;
}

bool search(const Resolution& r, std::vector<State>& st) {
  std::vector<State> saved = st;
  if (!propagate(r, st)) {
    st = saved;
    return false;
  }
  for (const Constraint& c : r.constraints) {
    int choice = -1;
    int best_pos = 0;
    for (const auto& [pos, v] : c.vars) {
      if (st[v] == State::Undecided && (choice < 0 || pos < best_pos)) {
        choice = v;
        best_pos = pos;
      }
    }
    if (choice < 0) continue;
    for (State s : {State::Accepted, State::Rejected}) {
      std::vector<State> trial = st;
      trial[choice] = s;
      if (search(r, trial)) {
        st = trial;
        return true;
      }
    }
    st = saved;
    return false;
  }
  return true;
}

// Steps for groups whose vertex count is order - 1 or order.
Resolution build_resolution(const Group& g, int order) {
  std::map<Hyperarc, int> count;
  std::vector<std::vector<std::pair<int, Hyperarc>>> splits;
  for (const Entry& e : g.entries) {
    splits.push_back(feasible_splits(e.tuple));
    for (const auto& [pos, arc] : splits.back()) ++count[arc];
  }
  Resolution r;
  std::map<Hyperarc, int> var;
  for (const auto& [arc, c] : count) {
    const auto needed = index_count(static_cast<int>(arc.out.size()), static_cast<int>(arc.in.size()), order);
    if (static_cast<std::uint64_t>(c) >= needed) {
      var[arc] = static_cast<int>(r.arcs.size());
      r.arcs.push_back(arc);
    }
  }
  for (std::size_t k = 0; k < g.entries.size(); ++k) {
    Constraint c{g.entries[k].tuple, g.entries[k].arcs, {}};
    for (const auto& [pos, arc] : splits[k]) {
      auto it = var.find(arc);
      if (it != var.end()) c.vars.push_back({pos, it->second});
    }
    r.constraints.push_back(std::move(c));
  }
  return r;
}

void validate_tensor(const SparseAdjacencyTensor& t, TensorKind kind, ErrorCode code) {
  if (t.kind != kind) throw Error(code, "tensor kind does not match the requested decoding");
  if (t.order < 2) throw Error(code, "tensor order must be at least 2");
  if (t.dim < 1) throw Error(code, "tensor dimension must be at least 1");
  for (const auto& [tup, val] : t.entries) {
    if (static_cast<int>(tup.size()) != t.order) throw Error(code, "tuple " + tuple_text(tup) + " has the wrong length");
    for (VertexId v : tup) {
      if (v < 1 || v > t.dim) throw Error(code, "tuple " + tuple_text(tup) + " has an index out of range");
    }
    if (val <= 0) throw Error(code, "tuple " + tuple_text(tup) + " has a non-positive value");
    if (distinct(tup).size() < 2) throw Error(code, "tuple " + tuple_text(tup) + " has fewer than 2 distinct indices");
  }
}

}  // namespace

AmbiguousTensorError::AmbiguousTensorError(const std::string& message, std::vector<Hyperarc> candidates)
    : Error(ErrorCode::AmbiguousTensor, message), candidates_(std::move(candidates)) {}

UnorientedHypergraph decode_tensor_unoriented(const SparseAdjacencyTensor& t) {
  validate_tensor(t, TensorKind::Unoriented, ErrorCode::Inconsistent);
  std::set<std::vector<VertexId>> sets;
  for (const auto& [tup, val] : t.entries) sets.insert(distinct(tup));
  std::vector<Hyperedge> edges;
  for (const auto& s : sets) edges.push_back({s});
  UnorientedHypergraph h(t.dim, std::move(edges));
  if (!verify_decode(t, h)) {
    throw Error(ErrorCode::Inconsistent, "tensor is not the encoding of any hypergraph");
  }
  return h;
}

OrientedHypergraph decode_tensor_oriented(const SparseAdjacencyTensor& t, DecodeStrategy strategy) {
  validate_tensor(t, TensorKind::Oriented, ErrorCode::MalformedTensor);
  if (t.order > kMaxDecodeOrder) {
    throw Error(ErrorCode::TooLarge, "decoding supports orders up to " + std::to_string(kMaxDecodeOrder));
  }
  std::map<std::vector<VertexId>, Group> groups;
  for (const auto& [tup, val] : t.entries) {
    std::vector<VertexId> s = distinct(tup);
    const Rational ratio = val / entry_value(static_cast<int>(s.size()), t.order, t.mode);
    if (denominator(ratio) != 1) {
      throw Error(ErrorCode::MalformedTensor, "entry at " + tuple_text(tup) + " is not a whole number of hyperarc shares");
    }
    Group& g = groups[s];
    g.vertices = s;
    g.entries.push_back({tup, static_cast<int>(numerator(ratio))});
  }

  std::vector<Hyperarc> found;
  std::vector<Hyperarc> undecided;
  for (const auto& [key, g] : groups) {
    const int n = static_cast<int>(g.vertices.size());
    if (n <= t.order - 2) {
      std::set<Hyperarc> candidates;
      for (const Entry& e : g.entries) {
        for (const Hyperarc& a : tuple_splits(e.tuple)) candidates.insert(a);
      }
      for (const Hyperarc& a : candidates) {
        if (t.entries.count(probe_tuple(a, t.order))) found.push_back(a);
      }
      continue;
    }
    const Resolution r = build_resolution(g, t.order);
    std::vector<State> st(r.arcs.size(), State::Undecided);
    if (strategy == DecodeStrategy::Strict) {
      if (!propagate(r, st)) {
        throw Error(ErrorCode::NoConsistentHypergraph,
                    "entries over vertex set " + tuple_text(key) + " contradict each other");
      }
    } else if (!search(r, st)) {
      throw Error(ErrorCode::NoConsistentHypergraph,
                  "no hyperarc selection reproduces the entries over vertex set " + tuple_text(key));
    }
    for (std::size_t v = 0; v < r.arcs.size(); ++v) {
      if (st[v] == State::Accepted) found.push_back(r.arcs[v]);
      if (st[v] == State::Undecided) undecided.push_back(r.arcs[v]);
    }
  }
  if (!undecided.empty()) {
    std::string msg = "resolution stalled; undecided candidates:";
    for (const Hyperarc& a : undecided) msg += " " + arc_text(a);
    throw AmbiguousTensorError(msg, undecided);
  }
  std::sort(found.begin(), found.end());
  OrientedHypergraph h(t.dim, std::move(found));
  if (!verify_decode(t, h)) {
    throw Error(ErrorCode::NoConsistentHypergraph, "decoded hyperarcs do not reproduce the tensor");
  }
  return h;
}

bool verify_decode(const SparseAdjacencyTensor& t, const OrientedHypergraph& h) {
  if (t.kind != TensorKind::Oriented || t.dim != h.vertex_count()) return false;
  if (h.arc_count() == 0) return t.entries.empty();
  if (cardinality_bounds(h).second > t.order) return false;
  return encode_tensor_at_order(h, t.mode, t.order).entries == t.entries;
}

bool verify_decode(const SparseAdjacencyTensor& t, const UnorientedHypergraph& h) {
  if (t.kind != TensorKind::Unoriented || t.dim != h.vertex_count()) return false;
  if (h.edge_count() == 0) return t.entries.empty();
  if (cardinality_bounds(h).second > t.order) return false;
  return encode_tensor_at_order(h, t.mode, t.order).entries == t.entries;
}

}  // namespace hgcalc
