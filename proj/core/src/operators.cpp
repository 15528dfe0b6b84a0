#include "hgcalc/operators.hpp"

#include <cmath>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

void check_inputs(const OrientedHypergraph& h, const WeightAssignment& w,
                  const std::vector<double>& fn, Space space) {
  w.validate(h.vertex_count(), h.arc_count());
  const std::size_t expected =
      space == Space::Vertex ? static_cast<std::size_t>(h.vertex_count()) : h.arc_count();
  if (fn.size() != expected) {
    throw Error(ErrorCode::LengthMismatch, "function has " + std::to_string(fn.size()) +
                                               " values, expected " + std::to_string(expected));
  }
}

void check_p(double p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw Error(ErrorCode::InvalidP, "p must be a finite real greater than 1");
  }
}

// Vertex-side coefficient of v in the inner sum of the vertex gradient.
double vertex_term(const WeightAssignment& w, const OperatorConfig& cfg, VertexId v, Side side,
                   std::size_t side_size) {
  const double g = side == Side::In ? weight_pow(w.wG[v - 1], cfg.epsilon)
                                    : weight_pow(w.wG[v - 1], cfg.eta);
  double c = weight_pow(w.wI[v - 1], cfg.alpha) * g;
  if (cfg.vertex_cardinality_mode == CardinalityMode::Reciprocal) c /= static_cast<double>(side_size);
  return c;
}

// Inner sum of the vertex gradient without the W_G^gamma factor. Each side is
// summed before the cardinality division.
double vertex_inner_sum(const Hyperarc& a, const WeightAssignment& w, const OperatorConfig& cfg,
                        const VertexFunction& f) {
  double s_in = 0.0;
  double s_out = 0.0;
  for (VertexId v : a.in) s_in += weight_pow(w.wI[v - 1], cfg.alpha) * weight_pow(w.wG[v - 1], cfg.epsilon) * f[v - 1];
  for (VertexId v : a.out) s_out += weight_pow(w.wI[v - 1], cfg.alpha) * weight_pow(w.wG[v - 1], cfg.eta) * f[v - 1];
  if (cfg.vertex_cardinality_mode == CardinalityMode::Reciprocal) {
    s_in /= static_cast<double>(a.in.size());
    s_out /= static_cast<double>(a.out.size());
  }
  return s_in - s_out;
}

// Coefficient of the adjoint at vertex v for one side of a hyperarc, without arc weights.
double vertex_adjoint_term(const WeightAssignment& w, const OperatorConfig& cfg, VertexId v,
                           Side side, std::size_t side_size) {
  double c = side == Side::In ? weight_pow(w.wG[v - 1], cfg.epsilon)
                              : weight_pow(w.wG[v - 1], cfg.eta);
  if (cfg.vertex_cardinality_mode == CardinalityMode::Reciprocal) c /= static_cast<double>(side_size);
  return side == Side::In ? c : -c;
}

// Signed per-vertex degree factor used by the hyperarc operators.
double hyperarc_term(const OrientedHypergraph& h, const OperatorConfig& cfg, VertexId v, Side side) {
  double c = 1.0;
  if (cfg.hyperarc_degree_mode == DegreeFactorMode::ReciprocalInOut) {
    c /= static_cast<double>(h.degree(v, side == Side::In ? DegreeMode::In : DegreeMode::Out));
  }
  return side == Side::In ? c : -c;
}

// Inner sum of the hyperarc gradient at every vertex, without w_G^zeta. Arcs
// entering and leaving a vertex are summed before the degree division.
std::vector<double> hyperarc_inner_sums(const OrientedHypergraph& h, const WeightAssignment& w,
                                        const OperatorConfig& cfg, const HyperarcFunction& F) {
  std::vector<double> s_in(h.vertex_count(), 0.0);
  std::vector<double> s_out(h.vertex_count(), 0.0);
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    const double arc_w = weight_pow(w.WI[q], cfg.beta) * weight_pow(w.WG[q], cfg.theta) * F[q];
    for (VertexId v : a.in) s_in[v - 1] += arc_w;
    for (VertexId v : a.out) s_out[v - 1] += arc_w;
  }
  std::vector<double> s(h.vertex_count(), 0.0);
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    double in_part = s_in[v - 1];
    double out_part = s_out[v - 1];
    if (cfg.hyperarc_degree_mode == DegreeFactorMode::ReciprocalInOut) {
      if (h.degree(v, DegreeMode::In) > 0) in_part /= h.degree(v, DegreeMode::In);
      if (h.degree(v, DegreeMode::Out) > 0) out_part /= h.degree(v, DegreeMode::Out);
    }
    s[v - 1] = in_part - out_part;
  }
  return s;
}

}  // namespace

bool OperatorConfig::vertex_modes_default() const {
  return vertex_cardinality_mode == CardinalityMode::Reciprocal &&
         vertex_adjoint_mode == AdjointMode::Mirror;
}

bool OperatorConfig::hyperarc_modes_default() const {
  return hyperarc_degree_mode == DegreeFactorMode::ReciprocalInOut &&
         hyperarc_adjoint_mode == AdjointMode::Mirror;
}

OperatorConfig preset_config(Preset preset) {
  OperatorConfig c;
  switch (preset) {
    case Preset::GeneralDefault:
      break;
    case Preset::ElmoatazGraphVertex:
      c.beta = 1.0;
      c.gamma = 0.5;
      break;
    case Preset::ElmoatazGraphArc:
      c.beta = 1.0;
      c.zeta = 0.5;
      c.hyperarc_degree_mode = DegreeFactorMode::Unit;
      break;
    case Preset::JostVertex:
      c.vertex_cardinality_mode = CardinalityMode::Unit;
      c.vertex_adjoint_mode = AdjointMode::NegatedTotalDegree;
      break;
    case Preset::JostHyperarc:
      c.hyperarc_degree_mode = DegreeFactorMode::Unit;
      c.hyperarc_adjoint_mode = AdjointMode::NegatedTotalDegree;
      break;
  }
  return c;
}

std::optional<double> preset_suggested_WI(Preset preset) {
  if (preset == Preset::ElmoatazGraphVertex || preset == Preset::ElmoatazGraphArc) return 0.5;
  return std::nullopt;
}

std::string_view preset_name(Preset preset) {
  switch (preset) {
    case Preset::GeneralDefault: return "general-default";
    case Preset::ElmoatazGraphVertex: return "elmoataz-graph-vertex";
    case Preset::ElmoatazGraphArc: return "elmoataz-graph-arc";
    case Preset::JostVertex: return "jost-vertex";
    case Preset::JostHyperarc: return "jost-hyperarc";
  }
  return "";
}

Preset preset_from_name(std::string_view name) {
  for (Preset p : {Preset::GeneralDefault, Preset::ElmoatazGraphVertex, Preset::ElmoatazGraphArc,
                   Preset::JostVertex, Preset::JostHyperarc}) {
    if (preset_name(p) == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

double p_power(double x, double p) {
  if (x == 0.0) return 0.0;
  if (p == 2.0) return x;
  return std::pow(std::abs(x), p - 2.0) * x;
}

HyperarcFunction vertex_gradient(const OrientedHypergraph& h, const WeightAssignment& w,
                                 const OperatorConfig& cfg, const VertexFunction& f) {
  check_inputs(h, w, f, Space::Vertex);
  HyperarcFunction out(h.arc_count(), 0.0);
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    out[q] = weight_pow(w.WG[q], cfg.gamma) * vertex_inner_sum(h.arcs()[q], w, cfg, f);
  }
  return out;
}

VertexFunction vertex_adjoint(const OrientedHypergraph& h, const WeightAssignment& w,
                              const OperatorConfig& cfg, const HyperarcFunction& F) {
  check_inputs(h, w, F, Space::Hyperarc);
  VertexFunction out(h.vertex_count(), 0.0);
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    const double arc_w = weight_pow(w.WI[q], cfg.beta) * weight_pow(w.WG[q], cfg.gamma) * F[q];
    for (VertexId v : a.in) out[v - 1] += vertex_adjoint_term(w, cfg, v, Side::In, a.in.size()) * arc_w;
    for (VertexId v : a.out) out[v - 1] += vertex_adjoint_term(w, cfg, v, Side::Out, a.out.size()) * arc_w;
  }
  if (cfg.vertex_adjoint_mode == AdjointMode::NegatedTotalDegree) {
    for (VertexId v = 1; v <= h.vertex_count(); ++v) {
      const int d = h.degree(v);
      out[v - 1] = d == 0 ? 0.0 : -out[v - 1] / static_cast<double>(d);
    }
  }
  return out;
}

VertexFunction vertex_divergence(const OrientedHypergraph& h, const WeightAssignment& w,
                                 const OperatorConfig& cfg, const HyperarcFunction& F) {
  VertexFunction out = vertex_adjoint(h, w, cfg, F);
  for (double& x : out) x = -x;
  return out;
}

VertexFunction vertex_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                const OperatorConfig& cfg, const VertexFunction& f, Method method) {
  if (method == Method::Composed) {
    return vertex_divergence(h, w, cfg, vertex_gradient(h, w, cfg, f));
  }
  if (!cfg.vertex_modes_default()) {
    throw Error(ErrorCode::UnsupportedMode, "explicit vertex Laplacian needs Reciprocal/Mirror modes");
  }
  check_inputs(h, w, f, Space::Vertex);
  VertexFunction out(h.vertex_count(), 0.0);
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    const double arc_w = weight_pow(w.WI[q], cfg.beta) * weight_pow(w.WG[q], 2.0 * cfg.gamma);
    auto outer = [&](VertexId i, Side si, std::size_t si_size) {
      const double ci = vertex_adjoint_term(w, cfg, i, si, si_size);
      double s = 0.0;
      for (VertexId j : a.in) s += ci * vertex_term(w, cfg, j, Side::In, a.in.size()) * f[j - 1];
      for (VertexId j : a.out) s -= ci * vertex_term(w, cfg, j, Side::Out, a.out.size()) * f[j - 1];
      out[i - 1] -= arc_w * s;
    };
    for (VertexId i : a.in) outer(i, Side::In, a.in.size());
    for (VertexId i : a.out) outer(i, Side::Out, a.out.size());
  }
  return out;
}

VertexFunction vertex_p_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                  const OperatorConfig& cfg, const VertexFunction& f, double p,
                                  Method method) {
  check_p(p);
  if (method == Method::Composed) {
    HyperarcFunction g = vertex_gradient(h, w, cfg, f);
    for (double& x : g) x = p_power(x, p);
    return vertex_divergence(h, w, cfg, g);
  }
  if (!cfg.vertex_modes_default()) {
    throw Error(ErrorCode::UnsupportedMode, "explicit vertex p-Laplacian needs Reciprocal/Mirror modes");
  }
  check_inputs(h, w, f, Space::Vertex);
  VertexFunction out(h.vertex_count(), 0.0);
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    const double arc_w = weight_pow(w.WI[q], cfg.beta) * weight_pow(w.WG[q], p * cfg.gamma);
    const double inner = p_power(vertex_inner_sum(a, w, cfg, f), p);
    for (VertexId i : a.in) out[i - 1] -= vertex_adjoint_term(w, cfg, i, Side::In, a.in.size()) * arc_w * inner;
    for (VertexId i : a.out) out[i - 1] -= vertex_adjoint_term(w, cfg, i, Side::Out, a.out.size()) * arc_w * inner;
  }
  return out;
}

VertexFunction hyperarc_gradient(const OrientedHypergraph& h, const WeightAssignment& w,
                                 const OperatorConfig& cfg, const HyperarcFunction& F) {
  check_inputs(h, w, F, Space::Hyperarc);
  VertexFunction out = hyperarc_inner_sums(h, w, cfg, F);
  for (VertexId v = 1; v <= h.vertex_count(); ++v) out[v - 1] *= weight_pow(w.wG[v - 1], cfg.zeta);
  return out;
}

HyperarcFunction hyperarc_adjoint(const OrientedHypergraph& h, const WeightAssignment& w,
                                  const OperatorConfig& cfg, const VertexFunction& f) {
  check_inputs(h, w, f, Space::Vertex);
  HyperarcFunction out(h.arc_count(), 0.0);
  const bool ntd = cfg.hyperarc_adjoint_mode == AdjointMode::NegatedTotalDegree;
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    auto term = [&](VertexId v, Side side) {
      double c;
      if (ntd) {
        c = (side == Side::In ? -1.0 : 1.0) / static_cast<double>(h.degree(v));
      } else {
        c = hyperarc_term(h, cfg, v, side);
      }
      return c * weight_pow(w.wI[v - 1], cfg.alpha) * weight_pow(w.wG[v - 1], cfg.zeta) * f[v - 1];
    };
    double s = 0.0;
    for (VertexId v : a.in) s += term(v, Side::In);
    for (VertexId v : a.out) s += term(v, Side::Out);
    out[q] = weight_pow(w.WG[q], cfg.theta) * s;
  }
  return out;
}

HyperarcFunction hyperarc_divergence(const OrientedHypergraph& h, const WeightAssignment& w,
                                     const OperatorConfig& cfg, const VertexFunction& f) {
  HyperarcFunction out = hyperarc_adjoint(h, w, cfg, f);
  for (double& x : out) x = -x;
  return out;
}

namespace {

HyperarcFunction hyperarc_explicit(const OrientedHypergraph& h, const WeightAssignment& w,
                                   const OperatorConfig& cfg, const HyperarcFunction& F,
                                   std::optional<double> p) {
  if (!cfg.hyperarc_modes_default()) {
    throw Error(ErrorCode::UnsupportedMode,
                "explicit hyperarc Laplacian needs ReciprocalInOut/Mirror modes");
  }
  check_inputs(h, w, F, Space::Hyperarc);
  std::vector<double> s = hyperarc_inner_sums(h, w, cfg, F);
  const double zeta_power = p ? *p * cfg.zeta : 2.0 * cfg.zeta;
  HyperarcFunction out(h.arc_count(), 0.0);
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    auto term = [&](VertexId i, Side side) {
      const double inner = p ? p_power(s[i - 1], *p) : s[i - 1];
      return hyperarc_term(h, cfg, i, side) * weight_pow(w.wI[i - 1], cfg.alpha) *
             weight_pow(w.wG[i - 1], zeta_power) * inner;
    };
    double acc = 0.0;
    for (VertexId i : a.in) acc += term(i, Side::In);
    for (VertexId i : a.out) acc += term(i, Side::Out);
    out[q] = -weight_pow(w.WG[q], cfg.theta) * acc;
  }
  return out;
}

}  // namespace

HyperarcFunction hyperarc_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                    const OperatorConfig& cfg, const HyperarcFunction& F,
                                    Method method) {
  if (method == Method::Composed) {
    return hyperarc_divergence(h, w, cfg, hyperarc_gradient(h, w, cfg, F));
  }
  return hyperarc_explicit(h, w, cfg, F, std::nullopt);
}

HyperarcFunction hyperarc_p_laplacian(const OrientedHypergraph& h, const WeightAssignment& w,
                                      const OperatorConfig& cfg, const HyperarcFunction& F,
                                      double p, Method method) {
  check_p(p);
  if (method == Method::Composed) {
    VertexFunction g = hyperarc_gradient(h, w, cfg, F);
    for (double& x : g) x = p_power(x, p);
    return hyperarc_divergence(h, w, cfg, g);
  }
  return hyperarc_explicit(h, w, cfg, F, p);
}

std::vector<double> divergence(Space output, const OrientedHypergraph& h, const WeightAssignment& w,
                               const OperatorConfig& cfg, const std::vector<double>& fn) {
  return output == Space::Vertex ? vertex_divergence(h, w, cfg, fn)
                                 : hyperarc_divergence(h, w, cfg, fn);
}

}  // namespace hgcalc
