#include "hgcalc/tensor.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace hgcalc {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

void compositions(int remaining, int parts, const BigInt& order_fact, BigInt denom, BigInt& total) {
  if (parts == 1) {
    total += order_fact / (denom * factorial(remaining));
    return;
  }
  for (int l = 1; l <= remaining - (parts - 1); ++l) {
    compositions(remaining - l, parts - 1, order_fact, denom * factorial(l), total);
  }
}

// Calls fn for every sequence of length len over `values` that uses each value.
void for_each_onto(const std::vector<VertexId>& values, int len,
                   const std::function<void(const std::vector<VertexId>&)>& fn) {
  const int m = static_cast<int>(values.size());
  if (len < m) return;
  std::vector<int> digit(len, 0);
  std::vector<VertexId> seq(len);
  std::vector<int> used(m, 0);
  while (true) {
    std::fill(used.begin(), used.end(), 0);
    int distinct = 0;
    for (int p = 0; p < len; ++p) {
      seq[p] = values[digit[p]];
      if (used[digit[p]]++ == 0) ++distinct;
    }
    if (distinct == m) fn(seq);
    int p = len - 1;
    while (p >= 0 && ++digit[p] == m) digit[p--] = 0;
    if (p < 0) break;
  }
}

double pow_count(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

void check_order(int order, int max_card) {
  if (order < max_card) {
    throw Error(ErrorCode::InvalidArgument, "order " + std::to_string(order) +
                                                " is below the maximum cardinality " +
                                                std::to_string(max_card));
  }
}

}  // namespace

Rational SparseAdjacencyTensor::at(const IndexTuple& t) const {
  auto it = entries.find(t);
  return it == entries.end() ? Rational(0) : it->second;
}

BigInt surjection_count(int n, int order) {
  if (n < 1 || n > order) return 0;
  BigInt total = 0;
  compositions(order, n, factorial(order), 1, total);
  return total;
}

Rational entry_value(int n, int order, EntryMode mode) {
  if (n < 2 || n > order) {
    throw Error(ErrorCode::InvalidArity, "n = " + std::to_string(n) + " with order " + std::to_string(order));
  }
  if (mode == EntryMode::Simplified) return Rational(n, 2);
  return Rational(BigInt(n), surjection_count(n, order));
}

SparseAdjacencyTensor encode_tensor(const OrientedHypergraph& h, EntryMode mode, bool increased) {
  if (h.arc_count() == 0) throw Error(ErrorCode::EmptyHypergraph, "no hyperarcs to encode");
  const int max_a = cardinality_bounds(h).second;
  return encode_tensor_at_order(h, mode, increased ? max_a + 2 : max_a);
}

SparseAdjacencyTensor encode_tensor(const UnorientedHypergraph& h, EntryMode mode) {
  if (h.edge_count() == 0) throw Error(ErrorCode::EmptyHypergraph, "no hyperedges to encode");
  return encode_tensor_at_order(h, mode, cardinality_bounds(h).second);
}

SparseAdjacencyTensor encode_tensor_at_order(const OrientedHypergraph& h, EntryMode mode, int order) {
  SparseAdjacencyTensor t{TensorKind::Oriented, order, h.vertex_count(), mode, {}};
  if (h.arc_count() == 0) return t;
  check_order(order, cardinality_bounds(h).second);
  double work = 0.0;
  for (const Hyperarc& a : h.arcs()) {
    for (int j = static_cast<int>(a.out.size()); j <= order - static_cast<int>(a.in.size()); ++j) {
      work += pow_count(static_cast<double>(a.out.size()), j) *
              pow_count(static_cast<double>(a.in.size()), order - j);
    }
  }
  if (work > static_cast<double>(kMaxEncodeTuples)) {
    throw Error(ErrorCode::TooLarge, "tuple enumeration exceeds the encoding limit");
  }
  std::map<int, Rational> shares;
  for (const Hyperarc& a : h.arcs()) {
    const int n = static_cast<int>(a.size());
    if (!shares.count(n)) shares[n] = entry_value(n, order, mode);
    const Rational& share = shares[n];
    const int o = static_cast<int>(a.out.size());
    const int i = static_cast<int>(a.in.size());
    for (int j = o; j <= order - i; ++j) {
      for_each_onto(a.out, j, [&](const std::vector<VertexId>& prefix) {
        for_each_onto(a.in, order - j, [&](const std::vector<VertexId>& suffix) {
          IndexTuple tup(prefix);
          tup.insert(tup.end(), suffix.begin(), suffix.end());
          t.entries[tup] += share;
        });
      });
    }
  }
  return t;
}

SparseAdjacencyTensor encode_tensor_at_order(const UnorientedHypergraph& h, EntryMode mode, int order) {
  SparseAdjacencyTensor t{TensorKind::Unoriented, order, h.vertex_count(), mode, {}};
  if (h.edge_count() == 0) return t;
  check_order(order, cardinality_bounds(h).second);
  double work = 0.0;
  for (const Hyperedge& e : h.edges()) work += pow_count(static_cast<double>(e.size()), order);
  if (work > static_cast<double>(kMaxEncodeTuples)) {
    throw Error(ErrorCode::TooLarge, "tuple enumeration exceeds the encoding limit");
  }
  for (const Hyperedge& e : h.edges()) {
    const Rational share = entry_value(static_cast<int>(e.size()), order, mode);
    for_each_onto(e.members, order, [&](const std::vector<VertexId>& seq) { t.entries[seq] += share; });
  }
  return t;
}

std::vector<Hyperarc> tuple_splits(const IndexTuple& t) {
  std::vector<Hyperarc> out;
  for (std::size_t j = 1; j < t.size(); ++j) {
    std::set<VertexId> pre(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j));
    std::set<VertexId> suf(t.begin() + static_cast<std::ptrdiff_t>(j), t.end());
    bool disjoint = std::none_of(pre.begin(), pre.end(), [&](VertexId v) { return suf.count(v) > 0; });
    if (disjoint) {
      out.push_back({std::vector<VertexId>(pre.begin(), pre.end()),
                     std::vector<VertexId>(suf.begin(), suf.end())});
    }
  }
  return out;
}

std::uint64_t index_count(int out_size, int in_size, int max_a) {
  if (out_size < 1 || in_size < 1) {
    throw Error(ErrorCode::InvalidArgument, "hyperarc sides must be nonempty");
  }
  if (max_a > 20) throw Error(ErrorCode::Overflow, "max_a above 20 is not supported");
  auto fact = [](int n) {
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
    return r;
  };
  const int n = out_size + in_size;
  const auto o = static_cast<std::uint64_t>(out_size);
  const auto i = static_cast<std::uint64_t>(in_size);
  if (n == max_a) return fact(out_size) * fact(in_size);
  if (n == max_a - 1) {
    return fact(out_size + 1) / 2 * o * fact(in_size) + fact(out_size) * (fact(in_size + 1) / 2) * i;
  }
  throw Error(ErrorCode::OutOfLemmaRange, "n = " + std::to_string(n) + " with max_a = " + std::to_string(max_a));
}

}  // namespace hgcalc
