#ifndef HGCALC_FIXTURES_HPP
#define HGCALC_FIXTURES_HPP

#include <utility>

#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"

// Small worked instances shared by the tests, the property suite and the CLI examples.
namespace hgcalc::fixtures {

// N=3, a_1 = ({1,2},{3}).
OrientedHypergraph single_arc();

// N=8, ({1,2},{5}), ({3},{2,7,8}), ({6},{7}).
OrientedHypergraph oriented_eight();

// N=8, {1,2,5}, {2,3,7,8}, {6,7}.
UnorientedHypergraph unoriented_eight();

// N=8, {1,2,3}, {2,3,7,8}, {6,7}.
UnorientedHypergraph unoriented_eight_clique();

// N=8, ({1,2},{3}), ({3},{2,7,8}), ({3},{4,8}), ({6},{7}).
OrientedHypergraph oriented_eight_clique();

// N=6, ({1,2},{4}), ({3},{2,6}), ({5},{6}).
OrientedHypergraph oriented_six();

// N=6, {1,2,4}, {2,3,6}, {5,6}.
UnorientedHypergraph unoriented_six();

// Six vertices: arcs (2,5), (3,6), (4,2), (4,5), (6,3).
OrientedNormalGraph oriented_graph_six();

// Six vertices: edges {2,4}, {2,5}, {3,6}, {4,5}.
UnorientedNormalGraph unoriented_graph_six();

// Two oriented hypergraphs on 4 vertices with identical standard tensors:
// all six 2|2 splits versus the four 1|3 hyperarcs.
std::pair<OrientedHypergraph, OrientedHypergraph> tensor_collision();

// Two hypergraphs with the same star expansion: four triples on 6 vertices
// versus all pairs on 4 vertices (encoders 7..10 of the first are the
// vertices of the second).
std::pair<UnorientedHypergraph, UnorientedHypergraph> star_collision();

// Two hypergraphs on 4 vertices with the same clique expansion.
std::pair<UnorientedHypergraph, UnorientedHypergraph> clique_collision();

}  // namespace hgcalc::fixtures

#endif
