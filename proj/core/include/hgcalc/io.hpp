#ifndef HGCALC_IO_HPP
#define HGCALC_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"
#include "hgcalc/matrices.hpp"
#include "hgcalc/operators.hpp"
#include "hgcalc/representations.hpp"
#include "hgcalc/spaces.hpp"
#include "hgcalc/tensor.hpp"

namespace hgcalc {

using AnyHypergraph = std::variant<OrientedHypergraph, UnorientedHypergraph>;
using AnyGraph = std::variant<OrientedNormalGraph, UnorientedNormalGraph>;

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);
double parse_double(std::string_view token, int line);

// hypergraph oriented|unoriented / vertices N / arc out ... in ... | edge ...
AnyHypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const OrientedHypergraph& h);
std::string write_hypergraph(const UnorientedHypergraph& h);
std::string write_hypergraph(const AnyHypergraph& h);

// weights / vertex wI|wG <id> <value> / arc WI|WG <q> <value>; missing entries are 1.
WeightAssignment parse_weights(std::string_view text, int vertex_count, std::size_t arc_count);
std::string write_weights(const WeightAssignment& w);

struct FunctionData {
  Space space;
  std::vector<double> values;
};

// vertexfn|arcfn / <index> <value>; every index 1..expected_length must appear once.
FunctionData parse_function(std::string_view text, std::size_t expected_length);
std::string write_function(Space space, const std::vector<double>& values);

// tensor <oriented|unoriented> order <k> dim <N> mode <full|simplified> / <k indices> <num/den>
SparseAdjacencyTensor parse_tensor(std::string_view text);
std::string write_tensor(const SparseAdjacencyTensor& t);

// graph oriented|unoriented / vertices N / arc i j | edge i j
AnyGraph parse_graph(std::string_view text);
std::string write_graph(const OrientedNormalGraph& g);
std::string write_graph(const UnorientedNormalGraph& g);

// anchors / <vertex> original|encoder
AnchorHints parse_anchors(std::string_view text);
std::string write_anchors(const AnchorHints& hints);
std::string write_anchor_inference(const AnchorInference& inference);

// multigraph oriented|unoriented / vertices N / arc|edge i j <multiplicity>
std::string write_multigraph(const MultiGraph& g);

// One row per line, entries separated by single spaces.
std::string write_matrix(const IntMatrix& m);

std::string write_config(const OperatorConfig& cfg);

std::string read_file(const std::string& path);

}  // namespace hgcalc

#endif
