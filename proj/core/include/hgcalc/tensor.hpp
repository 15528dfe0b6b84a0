#ifndef HGCALC_TENSOR_HPP
#define HGCALC_TENSOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgcalc/counting.hpp"
#include "hgcalc/errors.hpp"
#include "hgcalc/hypergraph.hpp"

namespace hgcalc {

// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

enum class EntryMode { Full, Simplified };
enum class TensorKind { Oriented, Unoriented };

using IndexTuple = std::vector<VertexId>;

inline constexpr std::uint64_t kMaxEncodeTuples = 10'000'000;
inline constexpr int kMaxDecodeOrder = 8;

struct SparseAdjacencyTensor {
  TensorKind kind = TensorKind::Oriented;
  int order = 2;
  int dim = 1;
  EntryMode mode = EntryMode::Simplified;
  // Absent tuples are zero; stored values are positive. Ordered lexicographically.
  std::map<IndexTuple, Rational> entries;

  Rational at(const IndexTuple& t) const;

  friend bool operator==(const SparseAdjacencyTensor&, const SparseAdjacencyTensor&) = default;
};

// Number of maps from `order` positions onto n values, summed over compositions
// l_1 + ... + l_n = order (l_k >= 1) as order! / (l_1! ... l_n!).
BigInt surjection_count(int n, int order);

// Share of one hyperarc/hyperedge with n distinct vertices in a tuple of the given order.
// Full: n / surjection_count(n, order). Simplified: n / 2.
Rational entry_value(int n, int order, EntryMode mode);

// Standard tensor has order max_a; increased tensor has order max_a + 2.
SparseAdjacencyTensor encode_tensor(const OrientedHypergraph& h, EntryMode mode, bool increased = false);
SparseAdjacencyTensor encode_tensor(const UnorientedHypergraph& h, EntryMode mode);

// Encoding at an explicit order, which must be at least the maximum cardinality.
SparseAdjacencyTensor encode_tensor_at_order(const OrientedHypergraph& h, EntryMode mode, int order);
SparseAdjacencyTensor encode_tensor_at_order(const UnorientedHypergraph& h, EntryMode mode, int order);

// Hyperarcs a tuple can represent: one per split into a prefix and a suffix
// with disjoint vertex sets. Listed by increasing split position.
std::vector<Hyperarc> tuple_splits(const IndexTuple& t);

// Number of order-max_a tuples encoding a hyperarc with the given side sizes,
// for out_size + in_size in {max_a - 1, max_a}.
std::uint64_t index_count(int out_size, int in_size, int max_a);

enum class DecodeStrategy { Strict, Greedy };

class AmbiguousTensorError : public Error {
 public:
  AmbiguousTensorError(const std::string& message, std::vector<Hyperarc> candidates);

  // Hyperarcs that could neither be confirmed nor ruled out.
  const std::vector<Hyperarc>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<Hyperarc> candidates_;
};

UnorientedHypergraph decode_tensor_unoriented(const SparseAdjacencyTensor& t);
// Hyperarcs of the result are sorted.
OrientedHypergraph decode_tensor_oriented(const SparseAdjacencyTensor& t,
                                          DecodeStrategy strategy = DecodeStrategy::Strict);

// Re-encodes h at t's order and mode and compares entries exactly.
bool verify_decode(const SparseAdjacencyTensor& t, const OrientedHypergraph& h);
bool verify_decode(const SparseAdjacencyTensor& t, const UnorientedHypergraph& h);

}  // namespace hgcalc

#endif
