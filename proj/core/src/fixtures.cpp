#include "hgcalc/fixtures.hpp"

namespace hgcalc::fixtures {

OrientedHypergraph single_arc() { return OrientedHypergraph(3, {{{1, 2}, {3}}}); }

OrientedHypergraph oriented_eight() {
  return OrientedHypergraph(8, {{{1, 2}, {5}}, {{3}, {2, 7, 8}}, {{6}, {7}}});
}

UnorientedHypergraph unoriented_eight() {
  return UnorientedHypergraph(8, {{{1, 2, 5}}, {{2, 3, 7, 8}}, {{6, 7}}});
}

UnorientedHypergraph unoriented_eight_clique() {
  return UnorientedHypergraph(8, {{{1, 2, 3}}, {{2, 3, 7, 8}}, {{6, 7}}});
}

OrientedHypergraph oriented_eight_clique() {
  return OrientedHypergraph(8, {{{1, 2}, {3}}, {{3}, {2, 7, 8}}, {{3}, {4, 8}}, {{6}, {7}}});
}

OrientedHypergraph oriented_six() {
  return OrientedHypergraph(6, {{{1, 2}, {4}}, {{3}, {2, 6}}, {{5}, {6}}});
}

UnorientedHypergraph unoriented_six() {
  return UnorientedHypergraph(6, {{{1, 2, 4}}, {{2, 3, 6}}, {{5, 6}}});
}

OrientedNormalGraph oriented_graph_six() {
  return OrientedNormalGraph(6, {{2, 5}, {3, 6}, {4, 2}, {4, 5}, {6, 3}});
}

UnorientedNormalGraph unoriented_graph_six() {
  return UnorientedNormalGraph(6, {{2, 4}, {2, 5}, {3, 6}, {4, 5}});
}

std::pair<OrientedHypergraph, OrientedHypergraph> tensor_collision() {
  OrientedHypergraph two_two(4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}},
                                 {{2, 3}, {1, 4}}, {{2, 4}, {1, 3}}, {{3, 4}, {1, 2}}});
  OrientedHypergraph one_three(4, {{{1}, {2, 3, 4}}, {{2}, {1, 3, 4}}, {{3}, {1, 2, 4}}, {{4}, {1, 2, 3}}});
  return {two_two, one_three};
}

std::pair<UnorientedHypergraph, UnorientedHypergraph> star_collision() {
  UnorientedHypergraph triples(6, {{{1, 2, 3}}, {{1, 4, 5}}, {{2, 4, 6}}, {{3, 5, 6}}});
  UnorientedHypergraph pairs(4, {{{1, 2}}, {{1, 3}}, {{1, 4}}, {{2, 3}}, {{2, 4}}, {{3, 4}}});
  return {triples, pairs};
}

std::pair<UnorientedHypergraph, UnorientedHypergraph> clique_collision() {
  UnorientedHypergraph triples(4, {{{1, 2, 3}}, {{1, 2, 4}}, {{1, 3, 4}}});
  UnorientedHypergraph mixed(4, {{{1, 2}}, {{1, 3}}, {{1, 4}}, {{1, 2, 3, 4}}});
  return {triples, mixed};
}

}  // namespace hgcalc::fixtures
