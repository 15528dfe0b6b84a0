#include <gtest/gtest.h>

#include <set>

#include "hgcalc/counting.hpp"
#include "hgcalc/errors.hpp"
#include "hgcalc/fixtures.hpp"
#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"
#include "hgcalc/random.hpp"

using namespace hgcalc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

// All (out, in) pairs of disjoint nonempty subsets of {1..n}, by bitmask.
long long brute_force_hyperarcs(int n) {
  long long count = 0;
  for (int out = 1; out < (1 << n); ++out) {
    for (int in = 1; in < (1 << n); ++in) {
      if ((out & in) == 0) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Hypergraph, BuildsExample) {
  const OrientedHypergraph h = fixtures::oriented_eight();
  EXPECT_EQ(h.vertex_count(), 8);
  EXPECT_EQ(h.arc_count(), 3u);
  EXPECT_EQ(h.arc(2).out, std::vector<VertexId>{3});
  EXPECT_EQ(h.arc(2).in, (std::vector<VertexId>{2, 7, 8}));
}

TEST(Hypergraph, SidesAreSortedAndDeduplicated) {
  const OrientedHypergraph h(5, {{{3, 1, 3}, {5, 4}}});
  EXPECT_EQ(h.arc(1).out, (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(h.arc(1).in, (std::vector<VertexId>{4, 5}));
}

TEST(Hypergraph, ValidationErrors) {
  EXPECT_EQ(code_of([] { OrientedHypergraph(3, {{{1}, {1, 2}}}); }), ErrorCode::Overlap);
  EXPECT_EQ(code_of([] { OrientedHypergraph(8, {{{1, 2}, {5}}, {{1, 2}, {5}}}); }), ErrorCode::Duplicate);
  EXPECT_EQ(code_of([] { OrientedHypergraph(8, {{{2, 1}, {5}}, {{1, 2}, {5}}}); }), ErrorCode::Duplicate);
  EXPECT_EQ(code_of([] { OrientedHypergraph(3, {{{}, {1}}}); }), ErrorCode::EmptySide);
  EXPECT_EQ(code_of([] { OrientedHypergraph(3, {{{1}, {4}}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { OrientedHypergraph(3, {{{0}, {1}}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { UnorientedHypergraph(3, {{{1}}}); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([] { UnorientedHypergraph(3, {{{1, 2}}, {{2, 1}}}); }), ErrorCode::Duplicate);
  EXPECT_EQ(code_of([] { UnorientedHypergraph(3, {{{1, 5}}}); }), ErrorCode::IndexOutOfRange);
}

TEST(Hypergraph, ReversedArcIsNotADuplicate) {
  EXPECT_NO_THROW(OrientedHypergraph(2, {{{1}, {2}}, {{2}, {1}}}));
}

TEST(Hypergraph, SwitchOrientation) {
  const OrientedHypergraph s = switch_orientation(fixtures::oriented_eight());
  const OrientedHypergraph want(8, {{{5}, {1, 2}}, {{2, 7, 8}, {3}}, {{7}, {6}}});
  EXPECT_EQ(s, want);
  EXPECT_EQ(switch_orientation(s), fixtures::oriented_eight());
  EXPECT_EQ(switch_orientation(OrientedHypergraph(2, {{{1}, {2}}})), OrientedHypergraph(2, {{{2}, {1}}}));
}

TEST(Hypergraph, Degrees) {
  const OrientedHypergraph h = fixtures::oriented_eight();
  EXPECT_EQ(h.degree(2, DegreeMode::Out), 1);
  EXPECT_EQ(h.degree(2, DegreeMode::In), 1);
  EXPECT_EQ(h.degree(2), 2);
  for (DegreeMode m : {DegreeMode::Out, DegreeMode::In, DegreeMode::Total}) EXPECT_EQ(h.degree(4, m), 0);
  EXPECT_EQ(h.degree(7, DegreeMode::Out), 0);
  EXPECT_EQ(h.degree(7, DegreeMode::In), 2);
  EXPECT_EQ(code_of([&] { h.degree(9); }), ErrorCode::IndexOutOfRange);
}

TEST(Hypergraph, Indicators) {
  const OrientedHypergraph h = fixtures::oriented_eight();
  EXPECT_TRUE(h.indicator(1, 1, Side::Out));
  EXPECT_TRUE(h.indicator(5, 1, Side::In));
  EXPECT_FALSE(h.indicator(4, 1, Side::Out));
  EXPECT_EQ(code_of([&] { h.indicator(1, 4, Side::Out); }), ErrorCode::IndexOutOfRange);
}

TEST(Hypergraph, DegreeAndIndicatorInvariants) {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const OrientedHypergraph h = random_instance(rng, RandomParams{8, 10, 5, 2});
    for (VertexId v = 1; v <= h.vertex_count(); ++v) {
      int touching = 0;
      for (std::size_t q = 1; q <= h.arc_count(); ++q) touching += h.indicator(v, q, Side::Out) || h.indicator(v, q, Side::In);
      EXPECT_EQ(h.degree(v, DegreeMode::Out) + h.degree(v, DegreeMode::In), h.degree(v));
      EXPECT_EQ(h.degree(v), touching);
    }
    for (std::size_t q = 1; q <= h.arc_count(); ++q) {
      std::size_t outs = 0, ins = 0;
      for (VertexId v = 1; v <= h.vertex_count(); ++v) {
        outs += h.indicator(v, q, Side::Out);
        ins += h.indicator(v, q, Side::In);
      }
      EXPECT_EQ(outs, h.arc(q).out.size());
      EXPECT_EQ(ins, h.arc(q).in.size());
    }
    const OrientedHypergraph s = switch_orientation(h);
    EXPECT_EQ(switch_orientation(s), h);
    EXPECT_EQ(cardinality_bounds(s), cardinality_bounds(h));
  }
}

TEST(Hypergraph, CardinalityBounds) {
  EXPECT_EQ(cardinality_bounds(fixtures::oriented_eight()), std::make_pair(2, 4));
  EXPECT_EQ(cardinality_bounds(fixtures::single_arc()), std::make_pair(3, 3));
  EXPECT_EQ(cardinality_bounds(graph_as_hypergraph(fixtures::oriented_graph_six())), std::make_pair(2, 2));
  EXPECT_EQ(code_of([] { cardinality_bounds(OrientedHypergraph(3, {})); }), ErrorCode::EmptyHypergraph);
}

TEST(Graph, ValidationErrors) {
  EXPECT_EQ(code_of([] { OrientedNormalGraph(3, {{1, 1}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { OrientedNormalGraph(3, {{1, 2}, {1, 2}}); }), ErrorCode::Duplicate);
  EXPECT_EQ(code_of([] { UnorientedNormalGraph(3, {{1, 2}, {2, 1}}); }), ErrorCode::Duplicate);
  EXPECT_EQ(code_of([] { UnorientedNormalGraph(3, {{1, 4}}); }), ErrorCode::IndexOutOfRange);
}

TEST(Graph, AsHypergraph) {
  const OrientedHypergraph h = graph_as_hypergraph(fixtures::oriented_graph_six());
  EXPECT_EQ(h.arc_count(), 5u);
  EXPECT_EQ(h.arc(1), (Hyperarc{{2}, {5}}));
  EXPECT_EQ(graph_as_hypergraph(OrientedNormalGraph(4, {})).arc_count(), 0u);
  const UnorientedHypergraph u = graph_as_hypergraph(fixtures::unoriented_graph_six());
  EXPECT_EQ(u.edge(1).members, (std::vector<VertexId>{2, 4}));
}

TEST(Graph, EmbeddedDegreesMatchGraphDegrees) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const OrientedNormalGraph g = random_graph(rng, 8, 20);
    const OrientedHypergraph h = graph_as_hypergraph(g);
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
      EXPECT_EQ(h.degree(v, DegreeMode::Out), g.out_degree(v));
      EXPECT_EQ(h.degree(v, DegreeMode::In), g.in_degree(v));
    }
  }
}

TEST(Graph, Components) {
  const auto comps = connected_components(fixtures::unoriented_graph_six());
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].vertices, std::vector<VertexId>{1});
  EXPECT_EQ(comps[1].vertices, (std::vector<VertexId>{2, 4, 5}));
  EXPECT_EQ(comps[2].vertices, (std::vector<VertexId>{3, 6}));
  EXPECT_FALSE(comps[1].bipartite);  // triangle 2-4-5
  EXPECT_TRUE(comps[2].bipartite);
  EXPECT_EQ(comps[2].side, (std::vector<int>{0, 1}));
  const auto path = connected_components(UnorientedNormalGraph(3, {{1, 2}, {2, 3}}));
  ASSERT_EQ(path.size(), 1u);
  EXPECT_TRUE(path[0].bipartite);
  EXPECT_EQ(path[0].side, (std::vector<int>{0, 1, 0}));
}

TEST(Graph, OrientedComponentsIgnoreDirection) {
  const auto comps = connected_components(OrientedNormalGraph(4, {{2, 1}, {3, 2}}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].vertices, (std::vector<VertexId>{1, 2, 3}));
}

TEST(Counting, KnownValues) {
  EXPECT_EQ(count_feasible(FeasibleKind::Hyperedges, 4), 11);
  EXPECT_EQ(count_feasible(FeasibleKind::Hyperarcs, 3), 12);
  EXPECT_EQ(count_feasible(FeasibleKind::Hyperarcs, 2), 2);
  EXPECT_LE(count_feasible(FeasibleKind::Hyperarcs, 2), feasible_upper_bound(2));
  EXPECT_EQ(feasible_upper_bound(2), 4);
}

TEST(Counting, HyperarcsMatchBruteForce) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(count_feasible(FeasibleKind::Hyperarcs, n), brute_force_hyperarcs(n)) << "N=" << n;
  }
}

TEST(Counting, HyperedgesMatchBruteForce) {
  for (int n = 2; n <= 12; ++n) {
    long long count = 0;
    for (int s = 0; s < (1 << n); ++s) count += __builtin_popcount(static_cast<unsigned>(s)) >= 2;
    EXPECT_EQ(count_feasible(FeasibleKind::Hyperedges, n), count);
  }
}

TEST(Counting, BoundedByPowerOfN) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_LE(count_feasible(FeasibleKind::Hyperarcs, n), feasible_upper_bound(n));
    EXPECT_LE(count_feasible(FeasibleKind::Hyperedges, n), feasible_upper_bound(n));
  }
}

TEST(Counting, CardinalityLimited) {
  // Hyperarcs on 4 vertices with at most 2 vertices: C(4,2) pairs times 2 orientations.
  EXPECT_EQ(count_feasible(FeasibleKind::Hyperarcs, 4, 2), 12);
  EXPECT_EQ(count_feasible(FeasibleKind::Hyperarcs, 5, 5), count_feasible(FeasibleKind::Hyperarcs, 5));
}

TEST(Counting, LargeArgumentsAreExact) {
  const BigInt twenty = count_feasible(FeasibleKind::Hyperedges, 20);
  EXPECT_EQ(twenty, BigInt(1048576 - 21));
  EXPECT_GT(count_feasible(FeasibleKind::Hyperarcs, 200), BigInt(0));
}

TEST(Counting, Errors) {
  EXPECT_EQ(code_of([] { count_feasible(FeasibleKind::Hyperarcs, 1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { count_feasible(FeasibleKind::Hyperarcs, kMaxCountingN + 1); }), ErrorCode::Overflow);
}
