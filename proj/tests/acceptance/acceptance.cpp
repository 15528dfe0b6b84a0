// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "../unit/oracle.hpp"
#include "hgcalc/counting.hpp"
#include "hgcalc/errors.hpp"
#include "hgcalc/fixtures.hpp"
#include "hgcalc/graph.hpp"
#include "hgcalc/graph_reference.hpp"
#include "hgcalc/io.hpp"
#include "hgcalc/matrices.hpp"
#include "hgcalc/operators.hpp"
#include "hgcalc/properties.hpp"
#include "hgcalc/random.hpp"
#include "hgcalc/representations.hpp"
#include "hgcalc/tensor.hpp"

using namespace hgcalc;

namespace {

using Failure = std::optional<std::string>;

constexpr std::uint64_t kSeed = 20240611;

SplitMix64 stream(int criterion) { return SplitMix64(derive_seed(kSeed, static_cast<std::uint64_t>(criterion))); }

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : " ") + format_double(x);
  return s;
}

std::string mismatch(int instance, const std::string& what, const std::vector<double>& got,
                     const std::vector<double>& want) {
  return "instance " + std::to_string(instance) + ": " + what + " got [" + join(got) + "] expected [" + join(want) + "]";
}

std::vector<double> negate(std::vector<double> v) {
  for (double& x : v) x = -x;
  return v;
}

std::vector<double> phi(std::vector<double> v, double p) {
  for (double& x : v) x = oracle::phi(x, p);
  return v;
}

std::vector<OperatorConfig> mode_combinations(const OperatorConfig& base) {
  std::vector<OperatorConfig> out;
  for (int bits = 0; bits < 16; ++bits) {
    OperatorConfig c = base;
    c.vertex_cardinality_mode = bits & 1 ? CardinalityMode::Unit : CardinalityMode::Reciprocal;
    c.vertex_adjoint_mode = bits & 2 ? AdjointMode::NegatedTotalDegree : AdjointMode::Mirror;
    c.hyperarc_degree_mode = bits & 4 ? DegreeFactorMode::Unit : DegreeFactorMode::ReciprocalInOut;
    c.hyperarc_adjoint_mode = bits & 8 ? AdjointMode::NegatedTotalDegree : AdjointMode::Mirror;
    out.push_back(c);
  }
  return out;
}

const RandomParams kOperatorInstances{10, 15, 5, 2};

// 1. <G, grad f> = <f, adj G> for both families, Mirror modes.
Failure duality() {
  SplitMix64 rng = stream(1);
  for (int k = 0; k < 200; ++k) {
    const OrientedHypergraph h = random_instance(rng, kOperatorInstances);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    OperatorConfig c = random_exponents(rng, -1.0, 1.0);
    c.vertex_cardinality_mode = rng.uniform_int(0, 1) ? CardinalityMode::Unit : CardinalityMode::Reciprocal;
    c.hyperarc_degree_mode = rng.uniform_int(0, 1) ? DegreeFactorMode::Unit : DegreeFactorMode::ReciprocalInOut;
    const auto f = random_function(rng, h.vertex_count());
    const auto G = random_function(rng, h.arc_count());
    const auto check = [&](double lhs, double rhs, const char* what) -> Failure {
      if (close_enough(lhs, rhs, 1e-9, 1e-12)) return std::nullopt;
      return "instance " + std::to_string(k) + ": " + what + " " + format_double(lhs) + " vs " + format_double(rhs);
    };
    const double v_lhs = inner_product(Space::Hyperarc, G, vertex_gradient(h, w, c, f), w, c.beta);
    const double v_rhs = inner_product(Space::Vertex, f, vertex_adjoint(h, w, c, G), w, c.alpha);
    if (auto e = check(v_lhs, v_rhs, "vertex")) return e;
    const double a_lhs = inner_product(Space::Vertex, f, hyperarc_gradient(h, w, c, G), w, c.alpha);
    const double a_rhs = inner_product(Space::Hyperarc, G, hyperarc_adjoint(h, w, c, f), w, c.beta);
    if (auto e = check(a_lhs, a_rhs, "hyperarc")) return e;
  }
  return std::nullopt;
}

// 2. Library Laplacians against the composition of the dense oracle in every
// mode combination; explicit forms against composition in default modes.
Failure composition() {
  SplitMix64 rng = stream(2);
  for (int k = 0; k < 200; ++k) {
    const OrientedHypergraph h = random_instance(rng, kOperatorInstances);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig base = random_exponents(rng, -1.0, 1.0);
    const auto f = random_function(rng, h.vertex_count());
    const auto F = random_function(rng, h.arc_count());
    for (const OperatorConfig& c : mode_combinations(base)) {
      const auto vgrad = oracle::vertex_gradient(h, w, c, f);
      const auto agrad = oracle::hyperarc_gradient(h, w, c, F);
      const auto vlap = negate(oracle::vertex_adjoint(h, w, c, vgrad));
      const auto alap = negate(oracle::hyperarc_adjoint(h, w, c, agrad));
      if (!close_enough(vertex_laplacian(h, w, c, f), vlap)) return mismatch(k, "vertex Laplacian", vertex_laplacian(h, w, c, f), vlap);
      if (!close_enough(hyperarc_laplacian(h, w, c, F), alap)) {
        return mismatch(k, "hyperarc Laplacian", hyperarc_laplacian(h, w, c, F), alap);
      }
      for (double p : {1.5, 2.0, 2.5, 3.0}) {
        const auto vref = negate(oracle::vertex_adjoint(h, w, c, phi(vgrad, p)));
        const auto vgot = vertex_p_laplacian(h, w, c, f, p);
        if (!close_enough(vgot, vref)) return mismatch(k, "vertex p-Laplacian p=" + format_double(p), vgot, vref);
        const auto aref = negate(oracle::hyperarc_adjoint(h, w, c, phi(agrad, p)));
        const auto agot = hyperarc_p_laplacian(h, w, c, F, p);
        if (!close_enough(agot, aref)) return mismatch(k, "hyperarc p-Laplacian p=" + format_double(p), agot, aref);
        if (c.vertex_modes_default()) {
          const auto ex = vertex_p_laplacian(h, w, c, f, p, Method::Explicit);
          if (!close_enough(ex, vgot)) return mismatch(k, "explicit vertex p-Laplacian", ex, vgot);
        }
        if (c.hyperarc_modes_default()) {
          const auto ex = hyperarc_p_laplacian(h, w, c, F, p, Method::Explicit);
          if (!close_enough(ex, agot)) return mismatch(k, "explicit hyperarc p-Laplacian", ex, agot);
        }
      }
    }
  }
  return std::nullopt;
}

// 3. p = 2 reproduces the Laplacian to 1e-12 on every instance and method.
Failure p2_collapse() {
  SplitMix64 rng = stream(3);
  for (int k = 0; k < 200; ++k) {
    const OrientedHypergraph h = random_instance(rng, kOperatorInstances);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig base = random_exponents(rng, -1.0, 1.0);
    const auto f = random_function(rng, h.vertex_count());
    const auto F = random_function(rng, h.arc_count());
    for (const OperatorConfig& c : mode_combinations(base)) {
      std::vector<Method> methods{Method::Composed};
      if (c.vertex_modes_default() && c.hyperarc_modes_default()) methods.push_back(Method::Explicit);
      for (Method m : methods) {
        const auto vp = vertex_p_laplacian(h, w, c, f, 2.0, m), vl = vertex_laplacian(h, w, c, f, m);
        if (!close_enough(vp, vl, 1e-12, 1e-12)) return mismatch(k, "vertex", vp, vl);
        const auto ap = hyperarc_p_laplacian(h, w, c, F, 2.0, m), al = hyperarc_laplacian(h, w, c, F, m);
        if (!close_enough(ap, al, 1e-12, 1e-12)) return mismatch(k, "hyperarc", ap, al);
      }
    }
  }
  return std::nullopt;
}

// 4. Hypergraph operators on an embedded normal graph equal the graph formulas.
Failure generalization() {
  SplitMix64 rng = stream(4);
  for (int k = 0; k < 200; ++k) {
    const OrientedNormalGraph g = random_graph(rng, 10, 30);
    const OrientedHypergraph h = graph_as_hypergraph(g);
    const WeightAssignment w = random_twin_weights(rng, g);
    OperatorConfig c = random_exponents(rng, -1.0, 1.0);
    c.hyperarc_degree_mode = k % 2 ? DegreeFactorMode::Unit : DegreeFactorMode::ReciprocalInOut;
    c.vertex_cardinality_mode = k % 4 < 2 ? CardinalityMode::Unit : CardinalityMode::Reciprocal;
    const auto f = random_function(rng, g.vertex_count());
    const auto F = random_function(rng, g.arc_count());
    const double p = rng.uniform(1.2, 4.0);
    const std::vector<std::pair<GraphOp, std::vector<double>>> cases{
        {GraphOp::GradV, vertex_gradient(h, w, c, f)},       {GraphOp::AdjV, vertex_adjoint(h, w, c, F)},
        {GraphOp::DivV, vertex_divergence(h, w, c, F)},      {GraphOp::LapV, vertex_laplacian(h, w, c, f)},
        {GraphOp::PLapV, vertex_p_laplacian(h, w, c, f, p)}, {GraphOp::GradA, hyperarc_gradient(h, w, c, F)},
        {GraphOp::AdjA, hyperarc_adjoint(h, w, c, f)},       {GraphOp::DivA, hyperarc_divergence(h, w, c, f)},
        {GraphOp::LapA, hyperarc_laplacian(h, w, c, F)},     {GraphOp::PLapA, hyperarc_p_laplacian(h, w, c, F, p)}};
    for (const auto& [op, got] : cases) {
      const auto& input = graph_op_input_space(op) == Space::Vertex ? f : F;
      const bool needs_p = op == GraphOp::PLapV || op == GraphOp::PLapA;
      const auto want = graph_reference(op, g, w, c, input, needs_p ? std::optional<double>(p) : std::nullopt);
      if (!close_enough(got, want)) return mismatch(k, std::string(graph_op_name(op)), got, want);
    }
  }
  return std::nullopt;
}

// 5. Jost presets against the co/anti-oriented closed forms; Elmoataz gradient exactly.
Failure presets() {
  SplitMix64 rng = stream(5);
  for (int k = 0; k < 100; ++k) {
    const OrientedHypergraph h = random_instance(rng, kOperatorInstances);
    const WeightAssignment w = WeightAssignment::unit(h.vertex_count(), h.arc_count());
    const auto f = random_function(rng, h.vertex_count());
    const auto F = random_function(rng, h.arc_count());
    const double p = rng.uniform(1.1, 4.0);
    const auto v = vertex_p_laplacian(h, w, preset_config(Preset::JostVertex), f, p);
    const auto vref = jost_reference(JostKind::VertexPLaplacian, h, f, p);
    if (!close_enough(v, vref, 1e-10, 1e-12)) return mismatch(k, "Jost vertex", v, vref);
    const auto a = hyperarc_p_laplacian(h, w, preset_config(Preset::JostHyperarc), F, p);
    const auto aref = jost_reference(JostKind::HyperarcPLaplacian, h, F, p);
    if (!close_enough(a, aref, 1e-10, 1e-12)) return mismatch(k, "Jost hyperarc", a, aref);
  }
  const OrientedNormalGraph g = fixtures::oriented_graph_six();
  WeightAssignment w = WeightAssignment::unit(6, g.arc_count());
  w.WG = {4.0, 2.0, 9.0, 0.25, 3.0};
  std::fill(w.WI.begin(), w.WI.end(), *preset_suggested_WI(Preset::ElmoatazGraphVertex));
  for (const std::vector<double>& f : {std::vector<double>{1, 2, 3, 4, 5, 6}, std::vector<double>{0.5, -7, 2.25, 0, 1e3, -1}}) {
    const auto got = vertex_gradient(graph_as_hypergraph(g), w, preset_config(Preset::ElmoatazGraphVertex), f);
    std::vector<double> want;
    for (std::size_t q = 0; q < g.arc_count(); ++q) {
      const auto [i, j] = g.arcs()[q];
      want.push_back(std::sqrt(w.WG[q]) * (f[j - 1] - f[i - 1]));
    }
    if (got != want) return mismatch(0, "Elmoataz gradient", got, want);
  }
  return std::nullopt;
}

// 6. Worked tensor entries, order-2 tensors of graphs, and entry_value(2,2,Full).
Failure tensor_fixtures() {
  const SparseAdjacencyTensor t = encode_tensor(fixtures::oriented_six(), EntryMode::Simplified);
  const std::map<IndexTuple, Rational> worked{{{1, 2, 4}, Rational(3, 2)}, {{2, 1, 4}, Rational(3, 2)},
                                              {{5, 5, 6}, Rational(1)},    {{5, 6, 6}, Rational(1)}};
  for (const auto& [tup, value] : worked) {
    if (t.at(tup) != value) return "worked tensor entry differs";
  }
  for (const auto& [tup, value] : t.entries) {
    const std::set<VertexId> s(tup.begin(), tup.end());
    if ((s == std::set<VertexId>{1, 2, 4} || s == std::set<VertexId>{5, 6}) && !worked.count(tup)) {
      return "unexpected tuple encoding a1 or a3";
    }
  }
  if (entry_value(2, 2, EntryMode::Full) != Rational(1)) return "entry_value(2,2,Full) != 1";
  SplitMix64 rng = stream(6);
  for (int k = 0; k < 200; ++k) {
    const OrientedNormalGraph g = random_graph(rng, 10, 30);
    const IntMatrix a = adjacency_matrix(g);
    const SparseAdjacencyTensor gt = encode_tensor(graph_as_hypergraph(g), k % 2 ? EntryMode::Full : EntryMode::Simplified);
    for (int i = 1; i <= g.vertex_count(); ++i)
      for (int j = 1; j <= g.vertex_count(); ++j)
        if (gt.at({i, j}) != Rational(a(i - 1, j - 1))) return "graph " + std::to_string(k) + " tensor differs from adjacency matrix";
    const UnorientedNormalGraph u(g.vertex_count(), [&] {
      std::set<VertexPair> e;
      for (auto [i, j] : g.arcs()) e.insert({std::min(i, j), std::max(i, j)});
      return std::vector<VertexPair>(e.begin(), e.end());
    }());
    const IntMatrix ua = adjacency_matrix(u);
    const SparseAdjacencyTensor ut = encode_tensor(graph_as_hypergraph(u), EntryMode::Full);
    for (int i = 1; i <= u.vertex_count(); ++i)
      for (int j = 1; j <= u.vertex_count(); ++j)
        if (ut.at({i, j}) != Rational(ua(i - 1, j - 1))) return "unoriented graph " + std::to_string(k) + " differs";
  }
  return std::nullopt;
}

// 7. Increased-order roundtrip, standard roundtrip when strict decode completes, collision pair.
Failure tensor_roundtrip(std::string& note) {
  SplitMix64 rng = stream(7);
  int strict_ok = 0, ambiguous = 0;
  for (int k = 0; k < 200; ++k) {
    const OrientedHypergraph h = random_instance(rng, RandomParams{6, 6, 4, 2});
    const EntryMode mode = k % 2 ? EntryMode::Full : EntryMode::Simplified;
    if (!decode_tensor_oriented(encode_tensor(h, mode, true)).same_arc_set(h)) {
      return "instance " + std::to_string(k) + ": increased-order decode differs\n" + write_hypergraph(h);
    }
    try {
      if (!decode_tensor_oriented(encode_tensor(h, mode)).same_arc_set(h)) {
        return "instance " + std::to_string(k) + ": standard decode differs\n" + write_hypergraph(h);
      }
      ++strict_ok;
    } catch (const AmbiguousTensorError&) {
      ++ambiguous;
    }
  }
  const auto [two_two, one_three] = fixtures::tensor_collision();
  const SparseAdjacencyTensor t = encode_tensor(two_two, EntryMode::Simplified);
  if (write_tensor(t) != write_tensor(encode_tensor(one_three, EntryMode::Simplified))) return "collision tensors differ";
  try {
    decode_tensor_oriented(t);
    return "strict decode of the collision tensor succeeded";
  } catch (const AmbiguousTensorError&) {
  }
  note = "standard strict decodes " + std::to_string(strict_ok) + ", ambiguous " + std::to_string(ambiguous);
  return std::nullopt;
}

// 8. Enumerated encoding-tuple counts equal the closed-form index counts.
Failure index_counts() {
  for (int max_a = 2; max_a <= 5; ++max_a)
    for (int o = 1; o < max_a; ++o)
      for (int i = 1; o + i <= max_a; ++i) {
        if (o + i < max_a - 1) continue;
        const int n = o + i;
        std::uint64_t count = 0;
        IndexTuple t(static_cast<std::size_t>(max_a), 1);
        while (true) {
          for (int s = 1; s < max_a; ++s) {
            std::set<VertexId> pre(t.begin(), t.begin() + s), suf(t.begin() + s, t.end());
            bool ok = static_cast<int>(pre.size()) == o && static_cast<int>(suf.size()) == i;
            ok = ok && *pre.rbegin() <= o && *suf.begin() > o;
            if (ok) ++count;
          }
          int p = max_a - 1;
          while (p >= 0 && t[p] == n) t[p--] = 1;
          if (p < 0) break;
          ++t[p];
        }
        if (count != index_count(o, i, max_a)) {
          return "(" + std::to_string(o) + "," + std::to_string(i) + "," + std::to_string(max_a) + "): enumerated " +
                 std::to_string(count) + " formula " + std::to_string(index_count(o, i, max_a));
        }
      }
  return std::nullopt;
}

bool two_colorable(int n, const std::vector<VertexPair>& pairs, int original_count) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [i, j] : pairs) {
    if ((i <= original_count) == (j <= original_count)) return false;
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  for (int s = 1; s <= n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : adj[v]) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// 9. Star and clique expansions.
Failure representations() {
  SplitMix64 rng = stream(9);
  for (int k = 0; k < 200; ++k) {
    const OrientedHypergraph h = random_instance(rng, RandomParams{10, 12, 5, 2});
    const auto star = to_bipartite(h);
    if (!two_colorable(star.graph.vertex_count(), star.graph.arcs(), h.vertex_count())) return "oriented expansion not bipartite";
    if (!(from_bipartite(star.graph, star.hints).hypergraph == h)) return "oriented reconstruction differs\n" + write_hypergraph(h);
    const UnorientedHypergraph u = random_unoriented_instance(rng, RandomParams{10, 12, 5, 2});
    const auto ustar = to_bipartite(u);
    if (!two_colorable(ustar.graph.vertex_count(), ustar.graph.edges(), u.vertex_count())) return "unoriented expansion not bipartite";
    if (!(from_bipartite(ustar.graph, ustar.hints).hypergraph == u)) return "unoriented reconstruction differs\n" + write_hypergraph(u);
    const MultiGraph g = to_clique(u);
    for (int i = 1; i <= u.vertex_count(); ++i)
      for (int j = i + 1; j <= u.vertex_count(); ++j) {
        int members = 0;
        for (const Hyperedge& e : u.edges()) {
          const std::set<VertexId> s(e.members.begin(), e.members.end());
          members += s.count(i) && s.count(j);
        }
        const auto it = g.multiplicity.find({i, j});
        if ((it == g.multiplicity.end() ? 0 : it->second) != members) return "clique multiplicity differs";
      }
  }
  const auto [triples, pairs] = fixtures::star_collision();
  const auto star = to_bipartite(triples);
  if (!(from_bipartite(star.graph, {{1, VertexRole::Original}}).hypergraph == triples)) return "star collision: original hint";
  if (!(from_bipartite(star.graph, {{1, VertexRole::Encoder}}).hypergraph == pairs)) return "star collision: encoder hint";
  const auto [cq_a, cq_b] = fixtures::clique_collision();
  if (!(to_clique(cq_a) == to_clique(cq_b))) return "clique collision pair differs";
  for (int o = 1; o <= 5; ++o)
    for (int i = 1; i <= 5; ++i) {
      std::size_t pairs_count = 0;
      for (int a = 0; a < o + i; ++a)
        for (int b = 0; b < o + i; ++b) {
          if (a == b) continue;
          const bool a_out = a < o, b_out = b < o;
          // Ordered pairs within a side, and out -> in across sides.
          if (a_out == b_out || (a_out && !b_out)) ++pairs_count;
        }
      if (clique_edge_count(o, i) != pairs_count) return "oriented clique_edge_count differs";
      if (clique_edge_count(o + i) != static_cast<std::size_t>((o + i) * (o + i - 1) / 2)) return "clique_edge_count differs";
      std::vector<VertexId> out, in;
      for (int v = 1; v <= o; ++v) out.push_back(v);
      for (int v = o + 1; v <= o + i; ++v) in.push_back(v);
      if (to_clique(OrientedHypergraph(o + i, {{out, in}})).edge_count() != pairs_count) return "to_clique count differs";
    }
  return std::nullopt;
}

// 10. Hyperarc counts by enumerating side assignments; the N^N bound; 11 hyperedges on 4 vertices.
Failure counting() {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t count = 0, assignments = 1;
    for (int v = 0; v < n; ++v) assignments *= 3;
    for (std::uint64_t code = 0; code < assignments; ++code) {
      int outs = 0, ins = 0;
      for (std::uint64_t c = code; c; c /= 3) {
        outs += c % 3 == 1;
        ins += c % 3 == 2;
      }
      count += outs > 0 && ins > 0;
    }
    if (count_feasible(FeasibleKind::Hyperarcs, n) != BigInt(count)) return "N = " + std::to_string(n) + " count differs";
  }
  for (int n = 2; n <= 12; ++n) {
    if (count_feasible(FeasibleKind::Hyperarcs, n) > feasible_upper_bound(n)) return "bound violated at N = " + std::to_string(n);
  }
  if (count_feasible(FeasibleKind::Hyperedges, 4) != 11) return "count_feasible(hyperedges, 4) != 11";
  return std::nullopt;
}

double dyadic(SplitMix64& rng) { return std::ldexp(1.0, rng.uniform_int(-2, 2)); }

// 11. Constant functions have zero gradient; switching orientation negates the gradient.
Failure gradient_properties() {
  SplitMix64 rng = stream(11);
  for (int k = 0; k < 200; ++k) {
    const OrientedHypergraph h = random_instance(rng, kOperatorInstances);
    WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    std::fill(w.wI.begin(), w.wI.end(), dyadic(rng));
    std::fill(w.wG.begin(), w.wG.end(), dyadic(rng));
    std::fill(w.WI.begin(), w.WI.end(), dyadic(rng));
    std::fill(w.WG.begin(), w.WG.end(), dyadic(rng));
    OperatorConfig c = random_exponents(rng, -1.0, 1.0);
    c.alpha = rng.uniform_int(-2, 2);
    c.beta = rng.uniform_int(-2, 2);
    c.theta = rng.uniform_int(-2, 2);
    c.epsilon = c.eta = rng.uniform_int(-2, 2);
    const double value = rng.uniform_int(-8, 8) * 0.25;
    for (double x : vertex_gradient(h, w, c, std::vector<double>(h.vertex_count(), value))) {
      if (x != 0.0) return "instance " + std::to_string(k) + ": vertex gradient of a constant is " + format_double(x);
    }
    const auto ag = hyperarc_gradient(h, w, c, std::vector<double>(h.arc_count(), value));
    for (VertexId v = 1; v <= h.vertex_count(); ++v) {
      if (h.degree(v, DegreeMode::In) > 0 && h.degree(v, DegreeMode::Out) > 0 && ag[v - 1] != 0.0) {
        return "instance " + std::to_string(k) + ": hyperarc gradient of a constant is " + format_double(ag[v - 1]);
      }
    }
    const WeightAssignment rw = random_weights(rng, h.vertex_count(), h.arc_count());
    OperatorConfig sc = mode_combinations(random_exponents(rng))[static_cast<std::size_t>(rng.uniform_int(0, 15))];
    sc.eta = sc.epsilon;
    const auto f = random_function(rng, h.vertex_count());
    const auto F = random_function(rng, h.arc_count());
    const OrientedHypergraph s = switch_orientation(h);
    const auto vs = vertex_gradient(s, rw, sc, f), vn = negate(vertex_gradient(h, rw, sc, f));
    if (!close_enough(vs, vn, 1e-12, 1e-12)) return mismatch(k, "switched vertex gradient", vs, vn);
    const auto as = hyperarc_gradient(s, rw, sc, F), an = negate(hyperarc_gradient(h, rw, sc, F));
    if (!close_enough(as, an, 1e-12, 1e-12)) return mismatch(k, "switched hyperarc gradient", as, an);
  }
  return std::nullopt;
}

std::string serialize_everything(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::string out;
  for (int k = 0; k < 50; ++k) {
    const OrientedHypergraph h = random_instance(rng, RandomParams{6, 6, 4, 2});
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    out += write_hypergraph(h) + write_weights(w);
    out += write_function(Space::Vertex, vertex_p_laplacian(h, w, random_exponents(rng), random_function(rng, h.vertex_count()), 2.5));
    out += write_tensor(encode_tensor(h, EntryMode::Full, true));
    const auto star = to_bipartite(h);
    out += write_graph(star.graph) + write_anchors(star.hints);
    out += write_multigraph(to_clique(h)) + write_matrix(incidence_matrix(h));
  }
  return out;
}

// 12. Byte-identical serializations and reports across two runs.
Failure determinism() {
  if (serialize_everything(kSeed) != serialize_everything(kSeed)) return "serializations differ";
  if (run_property_suite("all", kSeed, 20).to_text() != run_property_suite("all", kSeed, 20).to_text()) {
    return "property reports differ";
  }
  return std::nullopt;
}

}  // namespace

int main() {
  std::string note7;
  const std::vector<std::pair<std::string, std::function<Failure()>>> criteria{
      {"duality", duality},
      {"composition", composition},
      {"p=2 collapse", p2_collapse},
      {"generalization to normal graphs", generalization},
      {"preset equivalence", presets},
      {"tensor fixtures", tensor_fixtures},
      {"tensor roundtrip", [&] { return tensor_roundtrip(note7); }},
      {"index counts", index_counts},
      {"representations", representations},
      {"counting", counting},
      {"gradient properties", gradient_properties},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = criteria[i].second();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.0f ms)", f ? "FAIL" : "PASS", i + 1, criteria[i].first.c_str(), ms);
    if (i == 6 && !f) std::printf(" [%s]", note7.c_str());
    std::printf("\n");
    if (f) {
      ++failed;
      std::istringstream lines(*f);
      for (std::string line; std::getline(lines, line);) std::printf("  %s\n", line.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
