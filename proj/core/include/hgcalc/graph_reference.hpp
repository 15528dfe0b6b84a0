#ifndef HGCALC_GRAPH_REFERENCE_HPP
#define HGCALC_GRAPH_REFERENCE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "hgcalc/graph.hpp"
#include "hgcalc/hypergraph.hpp"
#include "hgcalc/operators.hpp"
#include "hgcalc/spaces.hpp"

namespace hgcalc {

enum class GraphOp { GradV, AdjV, DivV, LapV, PLapV, GradA, AdjA, DivA, LapA, PLapA };

GraphOp graph_op_from_name(std::string_view name);
std::string_view graph_op_name(GraphOp op);
// Space of the operator's input function.
Space graph_op_input_space(GraphOp op);

// Closed-form operators on a weighted oriented normal graph, evaluated arc by
// arc. Arc weights are indexed by arc position; the weight of a missing arc
// (i, j) is taken from its reverse arc (j, i). Only Mirror adjoint modes apply.
std::vector<double> graph_reference(GraphOp op, const OrientedNormalGraph& g,
                                    const WeightAssignment& w, const OperatorConfig& cfg,
                                    const std::vector<double>& fn,
                                    std::optional<double> p = std::nullopt);

// Same, for a hypergraph whose hyperarcs all have singleton sides (NotAGraph otherwise).
std::vector<double> graph_reference(GraphOp op, const OrientedHypergraph& h,
                                    const WeightAssignment& w, const OperatorConfig& cfg,
                                    const std::vector<double>& fn,
                                    std::optional<double> p = std::nullopt);

enum class JostKind { VertexPLaplacian, HyperarcPLaplacian };

// Unweighted closed forms written with co-oriented and anti-oriented sums.
std::vector<double> jost_reference(JostKind kind, const OrientedHypergraph& h,
                                   const std::vector<double>& fn, double p);

}  // namespace hgcalc

#endif
