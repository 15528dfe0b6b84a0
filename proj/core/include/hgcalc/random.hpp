#ifndef HGCALC_RANDOM_HPP
#define HGCALC_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"
#include "hgcalc/operators.hpp"
#include "hgcalc/spaces.hpp"

namespace hgcalc {

// SplitMix64 (Steele, Lea, Flood 2014): state advances by 0x9e3779b97f4a7c15
// and each output is the standard 64-bit finalizer of the new state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Independent seed for stream `stream` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct RandomParams {
  int n_max = 6;
  int m_max = 6;
  int card_max = 4;
  int n_min = 2;
};

// N uniform in [n_min, n_max], M uniform in [1, min(m_max, feasible)], hyperarc
// sizes uniform in [2, min(card_max, N)]; duplicates are rejected and redrawn.
// InfeasibleParams when m_max exceeds the number of feasible hyperarcs on n_max vertices.
OrientedHypergraph random_instance(SplitMix64& rng, const RandomParams& params);
OrientedHypergraph random_instance(std::uint64_t seed, const RandomParams& params);
UnorientedHypergraph random_unoriented_instance(SplitMix64& rng, const RandomParams& params);

// Oriented normal graph with N in [2, n_max] and 1..m_max distinct arcs.
OrientedNormalGraph random_graph(SplitMix64& rng, int n_max, int m_max);

// Weights uniform in [lo, hi].
WeightAssignment random_weights(SplitMix64& rng, int vertex_count, std::size_t arc_count,
                                double lo = 0.5, double hi = 2.0);
// Weights where an arc and its reverse arc carry the same W_I and W_G.
WeightAssignment random_twin_weights(SplitMix64& rng, const OrientedNormalGraph& g,
                                     double lo = 0.5, double hi = 2.0);
std::vector<double> random_function(SplitMix64& rng, std::size_t length, double lo = -1.0, double hi = 1.0);
// Exponents uniform in [lo, hi]; modes left at their defaults.
OperatorConfig random_exponents(SplitMix64& rng, double lo = -1.0, double hi = 1.0);

}  // namespace hgcalc

#endif
