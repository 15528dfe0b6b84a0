#include "hgcalc/random.hpp"

#include <algorithm>
#include <set>

#include "hgcalc/counting.hpp"
#include "hgcalc/errors.hpp"

namespace hgcalc {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SplitMix64::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(next() % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^ (stream * 0xd1b54a32d192ed03ULL));
  return b.next();
}

namespace {

void check_params(const RandomParams& p) {
  if (p.n_max < 2 || p.n_min < 2 || p.n_min > p.n_max || p.card_max < 2 || p.m_max < 1) {
    throw Error(ErrorCode::InfeasibleParams, "need 2 <= n_min <= n_max, card_max >= 2, m_max >= 1");
  }
}

std::vector<VertexId> draw_vertices(SplitMix64& rng, int n, int k) {
  std::vector<VertexId> pool(n);
  for (int v = 0; v < n; ++v) pool[v] = v + 1;
  for (int p = 0; p < k; ++p) std::swap(pool[p], pool[rng.uniform_int(p, n - 1)]);
  pool.resize(k);
  return pool;
}

int draw_count(SplitMix64& rng, const RandomParams& p, FeasibleKind kind, int& n) {
  if (BigInt(p.m_max) > count_feasible(kind, p.n_max, p.card_max)) {
    throw Error(ErrorCode::InfeasibleParams, "m_max exceeds the number of feasible hyperarcs or hyperedges");
  }
  n = rng.uniform_int(p.n_min, p.n_max);
  const BigInt feasible = count_feasible(kind, n, p.card_max);
  const int top = feasible < p.m_max ? static_cast<int>(feasible) : p.m_max;
  return rng.uniform_int(1, top);
}

}  // namespace

OrientedHypergraph random_instance(SplitMix64& rng, const RandomParams& params) {
  check_params(params);
  int n = 0;
  const int m = draw_count(rng, params, FeasibleKind::Hyperarcs, n);
  const int card = std::min(params.card_max, n);
  std::set<Hyperarc> seen;
  std::vector<Hyperarc> arcs;
  while (static_cast<int>(arcs.size()) < m) {
    const int k = rng.uniform_int(2, card);
    std::vector<VertexId> vs = draw_vertices(rng, n, k);
    const int s = rng.uniform_int(1, k - 1);
    Hyperarc a{{vs.begin(), vs.begin() + s}, {vs.begin() + s, vs.end()}};
    std::sort(a.out.begin(), a.out.end());
    std::sort(a.in.begin(), a.in.end());
    if (seen.insert(a).second) arcs.push_back(std::move(a));
  }
  return OrientedHypergraph(n, std::move(arcs));
}

OrientedHypergraph random_instance(std::uint64_t seed, const RandomParams& params) {
  SplitMix64 rng(seed);
  return random_instance(rng, params);
}

UnorientedHypergraph random_unoriented_instance(SplitMix64& rng, const RandomParams& params) {
  check_params(params);
  int n = 0;
  const int m = draw_count(rng, params, FeasibleKind::Hyperedges, n);
  const int card = std::min(params.card_max, n);
  std::set<Hyperedge> seen;
  std::vector<Hyperedge> edges;
  while (static_cast<int>(edges.size()) < m) {
    Hyperedge e{draw_vertices(rng, n, rng.uniform_int(2, card))};
    std::sort(e.members.begin(), e.members.end());
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return UnorientedHypergraph(n, std::move(edges));
}

OrientedNormalGraph random_graph(SplitMix64& rng, int n_max, int m_max) {
  if (n_max < 2 || m_max < 1) throw Error(ErrorCode::InfeasibleParams, "need n_max >= 2 and m_max >= 1");
  const int n = rng.uniform_int(2, n_max);
  const int m = rng.uniform_int(1, std::min(m_max, n * (n - 1)));
  std::set<VertexPair> seen;
  std::vector<VertexPair> arcs;
  while (static_cast<int>(arcs.size()) < m) {
    const VertexId i = rng.uniform_int(1, n);
    const VertexId j = rng.uniform_int(1, n);
    if (i != j && seen.insert({i, j}).second) arcs.emplace_back(i, j);
  }
  return OrientedNormalGraph(n, std::move(arcs));
}

WeightAssignment random_weights(SplitMix64& rng, int vertex_count, std::size_t arc_count, double lo, double hi) {
  WeightAssignment w = WeightAssignment::unit(vertex_count, arc_count);
  for (auto* v : {&w.wI, &w.wG, &w.WI, &w.WG}) {
    for (double& x : *v) x = rng.uniform(lo, hi);
  }
  return w;
}

WeightAssignment random_twin_weights(SplitMix64& rng, const OrientedNormalGraph& g, double lo, double hi) {
  WeightAssignment w = random_weights(rng, g.vertex_count(), g.arc_count(), lo, hi);
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    const auto& [i, j] = g.arcs()[k];
    if (auto rev = g.find_arc(j, i); rev && *rev - 1 < k) {
      w.WI[k] = w.WI[*rev - 1];
      w.WG[k] = w.WG[*rev - 1];
    }
  }
  return w;
}

std::vector<double> random_function(SplitMix64& rng, std::size_t length, double lo, double hi) {
  std::vector<double> f(length);
  for (double& x : f) x = rng.uniform(lo, hi);
  return f;
}

OperatorConfig random_exponents(SplitMix64& rng, double lo, double hi) {
  OperatorConfig c;
  for (double* e : {&c.alpha, &c.beta, &c.gamma, &c.epsilon, &c.eta, &c.zeta, &c.theta}) {
    *e = rng.uniform(lo, hi);
  }
  return c;
}

}  // namespace hgcalc
