#ifndef HGCALC_OPERATORS_HPP
#define HGCALC_OPERATORS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgcalc/hypergraph.hpp"
#include "hgcalc/spaces.hpp"

namespace hgcalc {

enum class CardinalityMode { Reciprocal, Unit };
enum class DegreeFactorMode { ReciprocalInOut, Unit };
enum class AdjointMode { Mirror, NegatedTotalDegree };
enum class Method { Explicit, Composed };

struct OperatorConfig {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
  double theta = 0.0;
  CardinalityMode vertex_cardinality_mode = CardinalityMode::Reciprocal;
  AdjointMode vertex_adjoint_mode = AdjointMode::Mirror;
  DegreeFactorMode hyperarc_degree_mode = DegreeFactorMode::ReciprocalInOut;
  AdjointMode hyperarc_adjoint_mode = AdjointMode::Mirror;

  bool vertex_modes_default() const;
  bool hyperarc_modes_default() const;

  friend bool operator==(const OperatorConfig&, const OperatorConfig&) = default;
};

enum class Preset { GeneralDefault, ElmoatazGraphVertex, ElmoatazGraphArc, JostVertex, JostHyperarc };

OperatorConfig preset_config(Preset preset);
// Constant W_I the preset is meant to be used with, if any.
std::optional<double> preset_suggested_WI(Preset preset);
std::string_view preset_name(Preset preset);
Preset preset_from_name(std::string_view name);

// |x|^(p-2) x, with 0 at x = 0.
double p_power(double x, double p);

HyperarcFunction vertex_gradient(const OrientedHypergraph& h, const WeightAssignment& w,
                                 const OperatorConfig& cfg, const VertexFunction& f);
VertexFunction vertex_adjoint(const OrientedHypergraph& h, const WeightAssignment& w,
                              const OperatorConfig& cfg, const HyperarcFunction& F);
VertexFunction vertex_divergence(const OrientedHypergraph& h, const WeightAssignment& w,
                                 const OperatorConfig& cfg, const HyperarcFunction& F);
VertexFunction vertex_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                const OperatorConfig& cfg, const VertexFunction& f,
                                Method method = Method::Composed);
VertexFunction vertex_p_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                  const OperatorConfig& cfg, const VertexFunction& f, double p,
                                  Method method = Method::Composed);

VertexFunction hyperarc_gradient(const OrientedHypergraph& h, const WeightAssignment& w,
                                 const OperatorConfig& cfg, const HyperarcFunction& F);
HyperarcFunction hyperarc_adjoint(const OrientedHypergraph& h, const WeightAssignment& w,
                                  const OperatorConfig& cfg, const VertexFunction& f);
HyperarcFunction hyperarc_divergence(const OrientedHypergraph& h, const WeightAssignment& w,
                                     const OperatorConfig& cfg, const VertexFunction& f);
HyperarcFunction hyperarc_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                    const OperatorConfig& cfg, const HyperarcFunction& F,
                                    Method method = Method::Composed);
HyperarcFunction hyperarc_p_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                      const OperatorConfig& cfg, const HyperarcFunction& F,
                                      double p, Method method = Method::Composed);

// Dispatches on the space of the divergence's output.
std::vector<double> divergence(Space output, const OrientedHypergraph& h, const WeightAssignment& w,
                               const OperatorConfig& cfg, const std::vector<double>& fn);

}  // namespace hgcalc

#endif
